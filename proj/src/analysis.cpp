#include "plumbhf/analysis.hpp"

namespace plumbhf {

int Analysis::spinc_of(const CharVector& k) const {
    auto key = form().spinc_key(k);
    for (int c = 0; c < spinc_count(); ++c)
        if (form().spinc_key(gvs.classes[c].representative) == key) return c;
    return -1;
}

Analysis analyze(const PlumbingGraph& g, const AnalysisOptions& opt) {
    Analysis a;
    a.graph = g;
    a.validation = validate(g);
    if (a.validation.support == Support::Unsupported) {
        if (!a.validation.is_tree) throw UnsupportedGraph("not a tree: " + a.validation.structure_message);
        if (!a.validation.is_negative_definite) throw UnsupportedGraph("intersection form is not negative definite");
        throw UnsupportedGraph("more than two bad vertices");
    }
    if (a.validation.support == Support::EvenDegreesOnly)
        a.diagnostics.push_back("two bad vertices: only even-degree elements are guaranteed");
    a.form_ptr = std::make_shared<const IntersectionForm>(g);
    a.gvs = good_vectors(a.form(), opt.step_budget);
    a.depth_cap = opt.depth_cap;

    LadderOptions lo;
    lo.depth_cap = opt.depth_cap;
    lo.class_budget = opt.class_budget;
    for (int c = 0; c < a.spinc_count(); ++c) {
        a.ladders.push_back(compute_ladder(a.gvs, c, a.form(), lo));
        const auto& L = a.ladders.back();
        a.modules.push_back(assemble_hfplus(L));
        auto rels = ladder_relations(L);
        a.relations.insert(a.relations.end(), rels.begin(), rels.end());
        a.depth_used = std::max(a.depth_used, L.depth_used());
        if (!L.stabilized) {
            a.stabilized = false;
            a.diagnostics.push_back("spin^c " + std::to_string(c) + " did not stabilize within depth " +
                                    std::to_string(opt.depth_cap));
        }
    }
    if (opt.check_roots) {
        confirm_by_roots(a.relations, a.gvs, a.form(), opt.branch_budget);
        for (const auto& r : a.relations)
            if (r.root_confirmed == 0)
                a.diagnostics.push_back("root sets disjoint for relation between generators " +
                                        std::to_string(r.lhs) + " and " + std::to_string(r.rhs));
    }
    return a;
}

}  // namespace plumbhf

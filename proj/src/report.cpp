#include "plumbhf/report.hpp"

#include <sstream>

namespace plumbhf {

namespace {

Json vec_json(const CharVector& k) {
    Json j = Json::array();
    for (int x : k) j.push_back(x);
    return j;
}

std::string sigma_string(const SigmaResult& s) { return s.neg_infinity ? "-inf" : std::to_string(s.value); }

}  // namespace

Json graph_json(const PlumbingGraph& g) {
    Json j;
    j["vertices"] = g.size();
    Json ids = Json::array(), w = Json::array(), e = Json::array();
    for (int v = 0; v < g.size(); ++v) ids.push_back(g.ids[v]), w.push_back(g.weights[v]);
    for (auto [a, b] : g.edges) e.push_back({g.ids[a], g.ids[b]});
    j["ids"] = ids;
    j["weights"] = w;
    j["edges"] = e;
    return j;
}

Json validation_json(const ValidationReport& v) {
    Json j;
    j["is_tree"] = v.is_tree;
    if (!v.is_tree) j["structure"] = v.structure_message;
    j["is_negative_definite"] = v.is_negative_definite;
    if (v.is_tree) {
        j["determinant"] = to_string(v.determinant);
        Json minors = Json::array();
        for (const auto& m : v.leading_minors) minors.push_back(to_string(m));
        j["leading_minors"] = minors;
    }
    j["bad_vertex_count"] = v.bad_vertex_count;
    j["bad_vertices"] = v.bad_vertices;
    j["support"] = to_string(v.support);
    return j;
}

Json module_json(const HFPlusModule& m) {
    Json j;
    j["tower_bottom"] = to_string(m.tower_bottom);
    Json red = Json::array();
    for (const auto& s : m.reduced) {
        Json r;
        r["length"] = s.length;
        r["bottom"] = to_string(s.bottom);
        r["top"] = to_string(s.top);
        r["generator"] = s.generator;
        red.push_back(r);
    }
    j["reduced"] = red;
    j["notation"] = module_notation(m);
    j["stabilized"] = m.stabilized;
    return j;
}

std::string module_notation(const HFPlusModule& m) {
    std::ostringstream out;
    out << "T+(" << to_string(m.tower_bottom) << ")";
    for (const auto& s : m.reduced) {
        out << " + F";
        if (s.length > 1) out << '^' << s.length;
        out << '(' << to_string(s.bottom) << ')';
    }
    if (!m.stabilized) out << " [not stabilized]";
    return out.str();
}

Json hf_json(const Analysis& a) {
    Json j;
    j["graph"] = graph_json(a.graph);
    j["validation"] = validation_json(a.validation);
    j["initial_candidates"] = a.gvs.candidate_count;
    j["good_vector_count"] = a.gvs.vectors.size();
    j["spinc_count"] = a.spinc_count();
    Json gens = Json::array();
    for (std::size_t i = 0; i < a.gvs.vectors.size(); ++i) {
        Json g;
        g["id"] = i;
        g["vector"] = vec_json(a.gvs.vectors[i]);
        g["degree"] = to_string(a.gvs.degrees[i]);
        g["spinc"] = a.gvs.spinc_ids[i];
        gens.push_back(g);
    }
    j["generators"] = gens;
    Json sp = Json::array();
    for (int c = 0; c < a.spinc_count(); ++c) {
        const auto& L = a.ladders[c];
        Json s;
        s["id"] = c;
        s["generators"] = L.generators;
        s["correction_term"] = to_string(correction_term(a.gvs.classes[c], a.gvs));
        s["hf_plus"] = module_json(a.modules[c]);
        Json ranks = Json::array();
        for (int t = 0; t < L.computed_levels(); ++t)
            ranks.push_back({{"grading", to_string(L.grading_of(t))}, {"rank", L.rank_at_level(t)}});
        s["ranks"] = ranks;
        s["depth_used"] = L.depth_used();
        s["stabilized"] = L.stabilized;
        sp.push_back(s);
    }
    j["spinc"] = sp;
    Json rels = Json::array();
    for (const auto& r : a.relations) {
        Json x;
        x["lhs"] = {{"generator", r.lhs}, {"power", r.n}};
        x["rhs"] = {{"generator", r.rhs}, {"power", r.m}};
        x["minimal"] = r.minimal;
        x["root_confirmed"] = r.root_confirmed < 0 ? Json(nullptr) : Json(r.root_confirmed == 1);
        rels.push_back(x);
    }
    j["relations"] = rels;
    Json diag;
    diag["depth_cap"] = a.depth_cap;
    diag["depth_used"] = a.depth_used;
    diag["stabilized"] = a.stabilized;
    diag["messages"] = a.diagnostics;
    j["diagnostics"] = diag;
    return j;
}

Json contact_json(const ContactReport& r, const Analysis& a) {
    Json j;
    j["graph"] = graph_json(a.graph);
    j["validation"] = validation_json(a.validation);
    const auto& loc = r.location;
    Json c;
    c["chern"] = vec_json(loc.chern);
    c["degree"] = to_string(loc.degree);
    c["d3"] = to_string(loc.d3);
    c["grading"] = to_string(loc.grading);
    c["spinc"] = loc.spinc_id;
    c["correction_term"] = to_string(a.modules[loc.spinc_id].tower_bottom);
    c["hf_plus"] = module_json(a.modules[loc.spinc_id]);
    c["generator"] = loc.generator;
    c["generator_vector"] = vec_json(a.gvs.vectors[loc.generator]);
    c["u_power"] = loc.u_power;
    c["planar_verdict"] = to_string(r.planar.verdict);
    c["planar_reason"] = r.planar.reason;
    c["rank_at_d"] = r.planar.rank_at_d;
    c["sigma"] = sigma_string(r.sigma);
    c["sigma_bound"] = r.sigma.k0;
    Json mem = Json::array();
    for (char m : r.sigma.membership) mem.push_back(m != 0);
    c["image_membership"] = mem;
    j["contact"] = c;
    Json diag;
    diag["depth_cap"] = a.depth_cap;
    diag["model_depth"] = r.sigma.depth;
    diag["stabilized"] = a.ladders[loc.spinc_id].stabilized;
    j["diagnostics"] = diag;
    return j;
}

std::string validation_text(const PlumbingGraph& g, const ValidationReport& v) {
    std::ostringstream out;
    out << "vertices: " << g.size() << "\n";
    out << "tree: " << (v.is_tree ? "yes" : "no (" + v.structure_message + ")") << "\n";
    if (v.is_tree) out << "determinant: " << to_string(v.determinant) << "\n";
    out << "negative definite: " << (v.is_negative_definite ? "yes" : "no") << "\n";
    out << "bad vertices: " << v.bad_vertex_count << "\n";
    out << "support: " << to_string(v.support) << "\n";
    return out.str();
}

std::string hf_text(const Analysis& a) {
    std::ostringstream out;
    out << validation_text(a.graph, a.validation);
    out << "initial candidates: " << a.gvs.candidate_count << "\n";
    out << "good vectors: " << a.gvs.vectors.size() << "\n";
    out << "spin^c classes: " << a.spinc_count() << "\n";
    for (int c = 0; c < a.spinc_count(); ++c) {
        const auto& L = a.ladders[c];
        out << "spinc " << c << ": d = " << to_string(L.d) << ", HF+ = " << module_notation(a.modules[c]) << "\n";
        for (int id : L.generators)
            out << "  K" << id << " = " << format_vector(a.gvs.vectors[id]) << "  degree "
                << to_string(a.gvs.degrees[id]) << "\n";
    }
    out << "relations:\n";
    for (const auto& r : a.relations) {
        out << "  U^" << r.n << " K" << r.lhs << " ~ U^" << r.m << " K" << r.rhs;
        if (r.root_confirmed == 1) out << "  (roots meet)";
        else if (r.root_confirmed == 0) out << "  (roots disjoint)";
        out << "\n";
    }
    out << "depth used: " << a.depth_used << " (cap " << a.depth_cap << ")"
        << (a.stabilized ? "" : ", NOT STABILIZED") << "\n";
    for (const auto& m : a.diagnostics) out << "note: " << m << "\n";
    return out.str();
}

std::string contact_text(const ContactReport& r, const Analysis& a) {
    std::ostringstream out;
    const auto& loc = r.location;
    out << "chern: " << format_vector(loc.chern) << "\n";
    out << "degree: " << to_string(loc.degree) << "\n";
    out << "d3: " << to_string(loc.d3) << "\n";
    out << "grading: " << to_string(loc.grading) << "\n";
    out << "spinc: " << loc.spinc_id << ", d = " << to_string(a.modules[loc.spinc_id].tower_bottom)
        << ", HF+ = " << module_notation(a.modules[loc.spinc_id]) << "\n";
    out << "class: U^" << loc.u_power << " K" << loc.generator << " "
        << format_vector(a.gvs.vectors[loc.generator]) << "\n";
    out << "planar: " << to_string(r.planar.verdict) << " (" << r.planar.reason << ")\n";
    out << "rank at d: " << r.planar.rank_at_d << "\n";
    out << "sigma: " << sigma_string(r.sigma) << " (bound k0 = " << r.sigma.k0 << ", model depth " << r.sigma.depth
        << ")\n";
    return out.str();
}

}  // namespace plumbhf

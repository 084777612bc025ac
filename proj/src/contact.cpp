#include "plumbhf/contact.hpp"

#include <algorithm>
#include <map>

namespace plumbhf {

std::string to_string(PlanarVerdict v) { return v == PlanarVerdict::Obstructed ? "OBSTRUCTED" : "NO_OBSTRUCTION"; }

CharVector chern_from_rotations(const SteinData& s, const PlumbingGraph& g) {
    if (static_cast<int>(s.rotations.size()) != g.size())
        throw std::invalid_argument("expected " + std::to_string(g.size()) + " rotation numbers, got " +
                                    std::to_string(s.rotations.size()));
    for (int v = 0; v < g.size(); ++v)
        if ((s.rotations[v] - g.weights[v]) % 2 != 0)
            throw ParityError("rotation " + std::to_string(s.rotations[v]) + " at vertex " + std::to_string(g.ids[v]) +
                              " has the wrong parity for weight " + std::to_string(g.weights[v]));
    return s.rotations;
}

InvariantLocation locate_invariant(const CharVector& k, const Analysis& a) {
    const auto& form = a.form();
    if (!is_characteristic(k, form)) throw ParityError("Chern vector is not characteristic");
    InvariantLocation loc;
    loc.chern = k;
    loc.degree = degree(k, form);
    loc.d3 = loc.degree - Rational(1, 2);
    loc.grading = -loc.degree;
    loc.spinc_id = a.spinc_of(k);
    if (loc.spinc_id < 0) throw NotStein("no good vector shares the spin^c structure of " + format_vector(k));
    const auto& L = a.ladders[loc.spinc_id];
    Rational half = (loc.grading - L.d) / 2;
    if (!is_integer(half) || half < 0)
        throw NotStein("grading " + to_string(loc.grading) + " of " + format_vector(k) +
                       " is not a grading of HF+ in its spin^c structure");
    loc.level = static_cast<int>(to_int(half));
    const int t = loc.level;

    // labels present at this level
    std::map<int, int> young;  // label -> member with the smallest exponent
    for (int i = 0; i < L.size(); ++i) {
        int lab = L.label_at(t, i);
        if (lab < 0) continue;
        auto it = young.find(lab);
        if (it == young.end() || L.birth_level[i] > L.birth_level[it->second]) young[lab] = i;
    }
    if (young.size() == 1) {
        loc.label = young.begin()->first;
    } else {
        for (int i = 0; i < L.size(); ++i)
            if (L.vectors[i] == k && L.birth_level[i] == t) loc.label = L.label_at(t, i);
        if (loc.label < 0) {
            auto cls = explore_class({0, k}, form);
            for (auto [lab, i] : young)
                if (cls.contains({t - L.birth_level[i], L.vectors[i]})) loc.label = lab;
        }
    }
    if (loc.label < 0) throw NotStein("Chern vector " + format_vector(k) + " matches no class of the model");
    int eld = L.elder(t, loc.label);
    loc.generator = L.generators[eld];
    loc.u_power = t - L.birth_level[eld];
    loc.is_generator = loc.u_power == 0;
    return loc;
}

PlanarResult planar_obstruction(const InvariantLocation& loc, const Analysis& a) {
    if (a.validation.support != Support::Full)
        throw UnsupportedOperation("planar obstruction needs at most one bad vertex");
    const auto& L = a.ladders[loc.spinc_id];
    PlanarResult r;
    r.rank_at_d = L.rank_at_level(0);
    r.grading_clause = loc.grading != L.d;
    r.rank_clause = r.rank_at_d > 1;
    r.verdict = (r.grading_clause || r.rank_clause) ? PlanarVerdict::Obstructed : PlanarVerdict::NoObstruction;
    if (r.grading_clause)
        r.reason = "d3 = " + to_string(loc.d3) + " differs from -d - 1/2 = " + to_string(-L.d - Rational(1, 2));
    if (r.rank_clause) {
        if (!r.reason.empty()) r.reason += "; ";
        r.reason += "HF+ has rank " + std::to_string(r.rank_at_d) + " at d = " + to_string(L.d);
    }
    if (r.reason.empty()) r.reason = "invariant is the tower bottom and HF+ has rank 1 at d";
    return r;
}

int sigma_bound(const InvariantLocation& loc, const Analysis& a) {
    const auto& mod = a.modules[loc.spinc_id];
    int top = -1;
    for (const auto& s : mod.reduced) top = std::max(top, static_cast<int>(to_int((s.top - mod.tower_bottom) / 2)));
    return std::max(top - loc.level + 1, 1);
}

int sigma_depth(const InvariantLocation& loc, int k) { return loc.level + k; }

bool in_image_of_u_power(const FiniteModel& model, int c, int k) {
    const int t = model.classes().at(c).level;
    if (k == 0) return true;
    auto rows = model.classes_at_level(t);
    BitMatrix a = model.u_power_matrix(t, k);
    BitVector b(rows.size());
    auto it = std::find(rows.begin(), rows.end(), c);
    b.set(static_cast<std::size_t>(it - rows.begin()));
    return a.solve(b).has_value();
}

SigmaResult sigma_in_model(const InvariantLocation& loc, const FiniteModel& model, int k0) {
    if (model.depth() < sigma_depth(loc, k0))
        throw NotStabilized("model depth " + std::to_string(model.depth()) + " is below the " +
                            std::to_string(sigma_depth(loc, k0)) + " needed for sigma");
    int c = -1;
    for (int x : model.classes_at_level(loc.level))
        if (model.classes()[x].label == loc.label) c = x;
    if (c < 0) throw std::logic_error("located class missing from the model");
    SigmaResult r;
    r.k0 = k0;
    r.depth = model.depth();
    r.membership.push_back(1);
    for (int k = 1; k <= k0; ++k) {
        bool in = in_image_of_u_power(model, c, k);
        r.membership.push_back(in);
        if (!in) {
            r.value = -(k - 1);
            return r;
        }
    }
    r.neg_infinity = true;
    return r;
}

SigmaResult sigma(const InvariantLocation& loc, const Analysis& a) {
    if (a.validation.support != Support::Full) throw UnsupportedOperation("sigma needs at most one bad vertex");
    const auto& L = a.ladders[loc.spinc_id];
    if (!L.stabilized)
        throw NotStabilized("spin^c " + std::to_string(loc.spinc_id) + " did not stabilize; sigma undecided");
    int k0 = sigma_bound(loc, a);
    auto model = build_model(L, sigma_depth(loc, k0));
    return sigma_in_model(loc, model, k0);
}

ContactReport contact_report(const CharVector& chern, const Analysis& a) {
    ContactReport r;
    r.location = locate_invariant(chern, a);
    r.planar = planar_obstruction(r.location, a);
    r.sigma = sigma(r.location, a);
    return r;
}

}  // namespace plumbhf

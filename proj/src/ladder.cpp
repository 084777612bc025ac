#include "plumbhf/ladder.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <string>

namespace plumbhf {

int depth_cap_from_env(int fallback) {
    const char* s = std::getenv("PLUMBHF_MAX_DEPTH");
    if (!s || !*s) return fallback;
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == std::string(s).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    return fallback;
}

int SpincLadder::label_at(int t, int i) const {
    if (t < 0) return -1;
    if (t < computed_levels()) return labels[t][i];
    if (!stabilized) throw NotStabilized("level " + std::to_string(t) + " is beyond the sweep");
    return birth_level[i] <= t ? 0 : -1;
}

int SpincLadder::rank_at_level(int t) const {
    if (t < 0) return 0;
    if (t >= computed_levels()) {
        if (!stabilized) throw NotStabilized("level " + std::to_string(t) + " is beyond the sweep");
        return 1;
    }
    std::vector<int> seen;
    for (int l : labels[t])
        if (l >= 0 && std::find(seen.begin(), seen.end(), l) == seen.end()) seen.push_back(l);
    return static_cast<int>(seen.size());
}

int SpincLadder::elder(int t, int label) const {
    int best = -1;
    for (int i = 0; i < size(); ++i) {
        if (label_at(t, i) != label) continue;
        if (best < 0 || birth_level[i] < birth_level[best]) best = i;
    }
    return best;
}

namespace {

struct Merger {
    SpincLadder& L;
    std::vector<int> parent;
    std::vector<std::vector<int>> members;
    std::vector<int> oldest;

    explicit Merger(SpincLadder& l) : L(l) {
        const int r = L.size();
        parent.resize(r);
        std::iota(parent.begin(), parent.end(), 0);
        members.resize(r);
        oldest.resize(r);
        for (int i = 0; i < r; ++i) members[i] = {i}, oldest[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool older(int a, int b) const {
        return L.birth_level[a] < L.birth_level[b] || (L.birth_level[a] == L.birth_level[b] && a < b);
    }
    void unite(int a, int b, int t) {
        a = find(a), b = find(b);
        if (a == b) return;
        for (int x : members[a])
            for (int y : members[b]) L.merge[x][y] = L.merge[y][x] = t;
        // elder rule: the younger branch ends here
        int ea = oldest[a], eb = oldest[b];
        int survivor = older(ea, eb) ? ea : eb;
        int dying = survivor == ea ? eb : ea;
        L.bars[dying].death = t;
        parent[b] = a;
        members[a].insert(members[a].end(), members[b].begin(), members[b].end());
        members[b].clear();
        oldest[a] = survivor;
    }
};

SpincLadder setup(const GoodVectorSet& gvs, int spinc) {
    SpincLadder L;
    L.spinc_id = spinc;
    const auto& cls = gvs.classes.at(spinc);
    L.generators = cls.member_ids;
    for (int id : L.generators) {
        L.vectors.push_back(gvs.vectors[id]);
        L.births.push_back(-gvs.degrees[id]);
    }
    L.d = *std::min_element(L.births.begin(), L.births.end());
    for (const auto& b : L.births) {
        Rational half = (b - L.d) / 2;
        if (!is_integer(half))
            throw std::logic_error("generators of one spin^c class differ by an odd grading");
        L.birth_level.push_back(static_cast<int>(to_int(half)));
    }
    const int r = L.size();
    L.merge.assign(r, std::vector<int>(r, -1));
    for (int i = 0; i < r; ++i) {
        L.merge[i][i] = L.birth_level[i];
        L.bars.push_back({i, L.birth_level[i], -1});
    }
    return L;
}

template <bool Parallel>
SpincLadder sweep(const GoodVectorSet& gvs, int spinc, const IntersectionForm& form, const LadderOptions& opt) {
    SpincLadder L = setup(gvs, spinc);
    Merger mg(L);
    const int r = L.size();
    const int last_birth = *std::max_element(L.birth_level.begin(), L.birth_level.end());

    for (int t = 0;; ++t) {
        if (t > opt.depth_cap) {
            L.stabilized = false;
            L.final_level = t - 1;
            break;
        }
        std::vector<int> roots;
        for (int i = 0; i < r; ++i)
            if (L.birth_level[i] <= t && mg.find(i) == i) roots.push_back(i);

        if (roots.size() >= 2) {
            // youngest member of each group gives the smallest exponent
            std::vector<UElement> elems;
            for (int root : roots) {
                int young = -1;
                for (int x : mg.members[root])
                    if (L.birth_level[x] <= t && (young < 0 || L.birth_level[x] > L.birth_level[young])) young = x;
                elems.push_back({t - L.birth_level[young], L.vectors[young]});
            }
            const int g = static_cast<int>(roots.size());
            std::vector<EquivalenceClass> classes(g);
            std::vector<char> explored(g, 0);
            if constexpr (Parallel) {
                std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
                for (int k = 0; k < g; ++k) {
                    try {
                        classes[k] = explore_class(elems[k], form, opt.class_budget);
                        explored[k] = 1;
                    } catch (...) {
#pragma omp critical(plumbhf_ladder)
                        if (!failure) failure = std::current_exception();
                    }
                }
                if (failure) std::rethrow_exception(failure);
                for (int a = 0; a < g; ++a)
                    for (int b = a + 1; b < g; ++b)
                        if (mg.find(roots[a]) != mg.find(roots[b]) && classes[a].contains(elems[b]))
                            mg.unite(roots[a], roots[b], t);
            } else {
                for (int k = 0; k < g; ++k) {
                    int host = -1;
                    for (int j = 0; j < k && host < 0; ++j)
                        if (explored[j] && classes[j].contains(elems[k])) host = j;
                    if (host >= 0) {
                        mg.unite(roots[host], roots[k], t);
                        continue;
                    }
                    classes[k] = explore_class(elems[k], form, opt.class_budget);
                    explored[k] = 1;
                }
            }
            for (int k = 0; k < g; ++k) {
                if (!explored[k]) continue;
                ++L.classes_explored;
                L.largest_class = std::max(L.largest_class, classes[k].size());
            }
        }

        std::vector<int> row(r, -1);
        int groups = 0;
        for (int i = 0; i < r; ++i) {
            if (L.birth_level[i] > t) continue;
            int root = mg.find(i);
            int label = *std::min_element(mg.members[root].begin(), mg.members[root].end());
            row[i] = label;
            if (label == i) ++groups;
        }
        L.labels.push_back(std::move(row));
        if (t >= last_birth && groups == 1) {
            L.stabilized = true;
            L.final_level = t;
            break;
        }
    }
    return L;
}

}  // namespace

SpincLadder compute_ladder(const GoodVectorSet& gvs, int spinc, const IntersectionForm& form,
                           const LadderOptions& opt) {
    return sweep<true>(gvs, spinc, form, opt);
}

namespace serial {
SpincLadder compute_ladder(const GoodVectorSet& gvs, int spinc, const IntersectionForm& form,
                           const LadderOptions& opt) {
    return sweep<false>(gvs, spinc, form, opt);
}
}  // namespace serial

HFPlusModule assemble_hfplus(const SpincLadder& L) {
    HFPlusModule mod;
    mod.spinc_id = L.spinc_id;
    mod.tower_bottom = L.d;
    mod.stabilized = L.stabilized;
    for (const auto& bar : L.bars) {
        if (bar.death < 0 || bar.death <= bar.birth) continue;
        ReducedSummand s;
        s.length = bar.death - bar.birth;
        s.bottom = L.grading_of(bar.birth);
        s.top = L.grading_of(bar.death - 1);
        s.generator = L.generators[bar.generator];
        mod.reduced.push_back(s);
    }
    std::sort(mod.reduced.begin(), mod.reduced.end(), [](const ReducedSummand& a, const ReducedSummand& b) {
        if (a.bottom != b.bottom) return a.bottom < b.bottom;
        if (a.length != b.length) return a.length < b.length;
        return a.generator < b.generator;
    });
    return mod;
}

std::vector<Relation> ladder_relations(const SpincLadder& L) {
    std::vector<Relation> out;
    for (int i = 0; i < L.size(); ++i)
        for (int j = i + 1; j < L.size(); ++j) {
            int t = L.merge[i][j];
            if (t < 0) continue;
            out.push_back({L.generators[i], t - L.birth_level[i], L.generators[j], t - L.birth_level[j], true, -1});
        }
    return out;
}

void confirm_by_roots(std::vector<Relation>& rels, const GoodVectorSet& gvs, const IntersectionForm& form,
                      std::size_t branch_budget) {
    const long long m = static_cast<long long>(rels.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < m; ++k) {
        auto& rel = rels[k];
        auto a = root_vectors({rel.n, gvs.vectors[rel.lhs]}, form, branch_budget);
        auto b = root_vectors({rel.m, gvs.vectors[rel.rhs]}, form, branch_budget);
        if (roots_intersect(a, b)) rel.root_confirmed = 1;
        else rel.root_confirmed = (a.complete && b.complete) ? 0 : -1;
    }
}

RelationSearch find_relations(const GoodVectorSet& gvs, const IntersectionForm& form, int maxdepth,
                              bool check_roots, std::size_t branch_budget) {
    if (maxdepth < 1) throw std::invalid_argument("maxdepth must be at least 1");
    RelationSearch out;
    for (int c = 0; c < static_cast<int>(gvs.classes.size()); ++c) {
        const auto& ids = gvs.classes[c].member_ids;
        if (ids.size() < 2) continue;
        Rational lo = -gvs.degrees[ids[0]], hi = lo;
        for (int id : ids) lo = std::min(lo, -gvs.degrees[id]), hi = std::max(hi, -gvs.degrees[id]);
        LadderOptions opt;
        opt.depth_cap = maxdepth + static_cast<int>(to_int((hi - lo) / 2));
        auto L = compute_ladder(gvs, c, form, opt);
        for (int i = 0; i < L.size(); ++i)
            for (int j = i + 1; j < L.size(); ++j) {
                int t = L.merge[i][j];
                int n = t - L.birth_level[i], m = t - L.birth_level[j];
                if (t < 0 || n > maxdepth || m > maxdepth) {
                    out.unrelated.emplace_back(L.generators[i], L.generators[j]);
                    continue;
                }
                out.relations.push_back({L.generators[i], n, L.generators[j], m, true, -1});
            }
    }
    if (check_roots) confirm_by_roots(out.relations, gvs, form, branch_budget);
    return out;
}

}  // namespace plumbhf

#pragma once

#include "plumbhf/equivalence.hpp"
#include "plumbhf/full_paths.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace plumbhf {

class NotStabilized : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultDepthCap = 16;

// PLUMBHF_MAX_DEPTH if set to a non-negative integer, else fallback.
int depth_cap_from_env(int fallback = kDefaultDepthCap);

struct LadderOptions {
    int depth_cap = kDefaultDepthCap;
    std::size_t class_budget = kDefaultClassBudget;
};

// A bar of the merge tree: the generator's U-chain, from its birth level up to
// the level where it merges into an older branch (death < 0: never, the tower).
struct Bar {
    int generator = -1;  // local index
    int birth = 0;
    int death = -1;
};

// Per spin^c sweep over gradings g = d + 2t. At level t every class is
// U^{t - b_i} K_i for some generator i born at level b_i <= t; the sweep
// records which generators share a class until all of them do.
struct SpincLadder {
    int spinc_id = -1;
    std::vector<int> generators;  // global good-vector ids
    std::vector<CharVector> vectors;
    std::vector<Rational> births;  // grading of K_i, i.e. -degree
    std::vector<int> birth_level;
    Rational d;

    // labels[t][i] = smallest local index in i's class at level t, -1 if unborn.
    std::vector<std::vector<int>> labels;
    // merge[i][j] = first level where i and j share a class, -1 if none yet.
    std::vector<std::vector<int>> merge;
    std::vector<Bar> bars;
    std::size_t largest_class = 0;
    std::size_t classes_explored = 0;
    bool stabilized = false;
    int final_level = 0;  // level of the last merge, or last level swept

    int size() const { return static_cast<int>(generators.size()); }
    Rational grading_of(int level) const { return d + 2 * level; }
    int depth_used() const { return final_level; }
    int computed_levels() const { return static_cast<int>(labels.size()); }
    // Number of classes at level t (t beyond the sweep requires stabilization).
    int rank_at_level(int t) const;
    // Label of generator i at level t.
    int label_at(int t, int i) const;
    // Oldest generator (smallest birth level, then index) among members of label at level t.
    int elder(int t, int label) const;
};

SpincLadder compute_ladder(const GoodVectorSet& gvs, int spinc, const IntersectionForm& form,
                           const LadderOptions& opt = {});

struct ReducedSummand {
    int length = 0;  // F[U]/U^length
    Rational bottom;  // Ker U element
    Rational top;
    int generator = -1;  // global id
};

struct HFPlusModule {
    int spinc_id = -1;
    Rational tower_bottom;
    std::vector<ReducedSummand> reduced;
    bool stabilized = false;
};

HFPlusModule assemble_hfplus(const SpincLadder& ladder);

struct Relation {
    int lhs = -1;  // global ids
    int n = 0;
    int rhs = -1;
    int m = 0;
    bool minimal = true;
    int root_confirmed = -1;  // -1 unchecked, 0 no, 1 yes
};

// Minimal relation for every related pair of generators, from the merge levels.
std::vector<Relation> ladder_relations(const SpincLadder& ladder);

struct RelationSearch {
    std::vector<Relation> relations;
    std::vector<std::pair<int, int>> unrelated;  // pairs with no relation within maxdepth
};

// All minimal relations with n, m <= maxdepth across spin^c classes, optionally
// cross-checked by root-vector intersection.
RelationSearch find_relations(const GoodVectorSet& gvs, const IntersectionForm& form, int maxdepth,
                              bool check_roots = true, std::size_t branch_budget = kDefaultBranchBudget);

void confirm_by_roots(std::vector<Relation>& rels, const GoodVectorSet& gvs, const IntersectionForm& form,
                      std::size_t branch_budget = kDefaultBranchBudget);

namespace serial {
SpincLadder compute_ladder(const GoodVectorSet& gvs, int spinc, const IntersectionForm& form,
                           const LadderOptions& opt = {});
}

}  // namespace plumbhf

#pragma once

#include "plumbhf/char_lattice.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace plumbhf {

enum class TiebreakRule {
    RoundRobin,     // next eligible index after the last pushed vertex, wrapping
    SmallestIndex,
    Random,
};

struct Tiebreak {
    TiebreakRule rule = TiebreakRule::RoundRobin;
    std::uint64_t seed = 0;
};

enum class Verdict { Good, Bad };

struct FullPath {
    std::vector<int> steps;  // 0-based vertex indices
    CharVector start;
    CharVector terminal;
    Verdict verdict = Verdict::Good;
};

class StepBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

bool is_initial(const CharVector& k, const IntersectionForm& form);
bool is_good_terminal(const CharVector& k, const IntersectionForm& form);
bool is_bad_terminal(const CharVector& k, const IntersectionForm& form);

FullPath run_full_path(const CharVector& k0, const IntersectionForm& form, Tiebreak tb = {},
                       std::uint64_t step_budget = kDefaultStepBudget);

// Verdict only; skips recording the steps.
Verdict path_verdict(const CharVector& k0, const IntersectionForm& form,
                     std::uint64_t step_budget = kDefaultStepBudget);

struct GoodVectorSet {
    std::uint64_t candidate_count = 0;
    std::vector<CharVector> vectors;   // lexicographic
    std::vector<Rational> degrees;
    std::vector<int> spinc_ids;
    std::vector<SpinCClass> classes;   // member_ids index into vectors
};

GoodVectorSet good_vectors(const IntersectionForm& form, std::uint64_t step_budget = kDefaultStepBudget);

// d = -max degree over the good vectors of the class.
Rational correction_term(const SpinCClass& cls, const GoodVectorSet& gvs);

// GOOD verdict per candidate (parallel kernel).
std::vector<char> classify_candidates(const std::vector<CharVector>& candidates, const IntersectionForm& form,
                                      std::uint64_t step_budget = kDefaultStepBudget);

namespace serial {
std::vector<char> classify_candidates(const std::vector<CharVector>& candidates, const IntersectionForm& form,
                                      std::uint64_t step_budget = kDefaultStepBudget);
GoodVectorSet good_vectors(const IntersectionForm& form, std::uint64_t step_budget = kDefaultStepBudget);
}  // namespace serial

}  // namespace plumbhf

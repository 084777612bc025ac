#pragma once

#include "plumbhf/char_lattice.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace plumbhf {

// U^m (x) K
struct UElement {
    int m = 0;
    CharVector k;

    auto operator<=>(const UElement&) const = default;
    bool operator==(const UElement&) const = default;
};

// 2m - degree(K)
Rational grading(const UElement& e, const IntersectionForm& form);

// One step of the generating relation through each vertex, in both directions.
std::vector<UElement> move_targets(const UElement& e, const IntersectionForm& form);

struct PackedHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
            h *= 0x100000001b3ull;
        }
        return h ^ (h >> 29);
    }
};

using PackedSet = std::unordered_set<std::vector<int>, PackedHash>;

std::vector<int> pack(const UElement& e);
UElement unpack(const std::vector<int>& p);

class ClassBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultClassBudget = 20'000'000;

class EquivalenceClass {
public:
    bool contains(const UElement& e) const { return members_.count(pack(e)) != 0; }
    std::size_t size() const { return members_.size(); }
    // lexicographically least (m, K)
    UElement canonical() const;
    int min_exponent() const { return min_m_; }
    int max_exponent() const { return max_m_; }
    std::vector<UElement> members() const;
    void for_each(const std::function<void(const UElement&)>& f) const;

private:
    friend EquivalenceClass explore_class(const UElement&, const IntersectionForm&, std::size_t);
    PackedSet members_;
    int min_m_ = 0, max_m_ = 0;
};

// Breadth-first closure under move_targets. Classes are finite since 2m - deg(K)
// is conserved and -K^2 is bounded below on a negative definite lattice.
EquivalenceClass explore_class(const UElement& start, const IntersectionForm& form,
                               std::size_t max_size = kDefaultClassBudget);

// BFS from a, stopping as soon as b is reached.
bool equivalent(const UElement& a, const UElement& b, const IntersectionForm& form,
                std::size_t max_size = kDefaultClassBudget);

struct RootSet {
    std::set<UElement> roots;
    bool complete = true;
    std::size_t states = 0;

    std::set<CharVector> vectors() const;
};

inline constexpr std::size_t kDefaultBranchBudget = 500'000;

// R1 while the vector is not terminal and some <K,v> = -m(v); else R2 (exponent > 0,
// <K,v> + m(v) = -2, lowers the exponent); else R3 (<K,v> + m(v) = 2, raises it).
// All branch choices are followed; states where nothing applies are the roots.
RootSet root_vectors(const UElement& e, const IntersectionForm& form,
                     std::size_t branch_budget = kDefaultBranchBudget);

bool roots_intersect(const RootSet& a, const RootSet& b);

}  // namespace plumbhf

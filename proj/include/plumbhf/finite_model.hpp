#pragma once

#include "plumbhf/gf2.hpp"
#include "plumbhf/ladder.hpp"

#include <vector>

namespace plumbhf {

struct ModelClass {
    int level = 0;
    Rational grading;
    int label = -1;         // ladder label at this level
    int max_exponent = 0;   // largest j with the class in the image of u^j
    UElement representative;  // U^{max_exponent} of the oldest generator in the class
    std::vector<int> members;  // local generator indices
};

// Dual model of Ker U^{N+1}: classes of the lattice complex whose exponent can
// be pushed down to at most N. Everything else is the ZERO class.
class FiniteModel {
public:
    int depth() const { return depth_; }
    int spinc_id() const { return spinc_; }
    const Rational& d() const { return d_; }
    const std::vector<ModelClass>& classes() const { return classes_; }
    int top_level() const { return top_level_; }

    // u(c): class one level up containing c, or -1 for ZERO.
    int up(int c) const { return up_[c]; }
    std::vector<int> classes_at_level(int t) const;
    int rank_at_level(int t) const { return static_cast<int>(classes_at_level(t).size()); }
    int rank_at_grading(const Rational& g) const;
    // Class at level t containing generator i (local), or -1.
    int class_of(int t, int generator) const;

    // U on the dual space: U(c*) = sum of c'* over c' with u(c') = c.
    BitVector apply_u(const BitVector& x) const;
    // Matrix of U^k from the duals at level t + k to the duals at level t.
    BitMatrix u_power_matrix(int t, int k) const;

private:
    friend FiniteModel build_model(const SpincLadder&, int);
    int depth_ = 0;
    int spinc_ = -1;
    Rational d_;
    int top_level_ = -1;
    std::vector<ModelClass> classes_;
    std::vector<int> up_;
    std::vector<std::vector<int>> by_level_;
};

// Throws NotStabilized if the sweep did not reach the levels this depth needs.
FiniteModel build_model(const SpincLadder& ladder, int depth);

}  // namespace plumbhf

#pragma once

#include "plumbhf/graph.hpp"
#include "plumbhf/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace plumbhf {

using IntMatrix = std::vector<std::vector<long long>>;
using BigMatrix = std::vector<std::vector<BigInt>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

class SingularFormError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IntersectionForm {
public:
    explicit IntersectionForm(const PlumbingGraph& g);

    int n() const { return n_; }
    const IntMatrix& matrix() const { return matrix_; }
    const std::vector<int>& weights() const { return weights_; }
    int weight(int v) const { return weights_[v]; }
    const BigInt& determinant() const { return det_; }
    // adjugate() == determinant() * inverse()
    const BigMatrix& adjugate() const { return adj_; }
    RationalMatrix inverse() const;

    // x^T adj x, so that x^T I^{-1} x = quadratic_numerator(x) / det.
    BigInt quadratic_numerator(const std::vector<int>& x) const;
    // adj * x reduced mod 2|det|, the spin^c key.
    std::vector<std::int64_t> spinc_key(const std::vector<int>& x) const;

private:
    int n_;
    std::vector<int> weights_;
    IntMatrix matrix_;
    BigInt det_;
    BigMatrix adj_;
    bool small_ = false;  // adj_ and 2|det| fit comfortably in 64 bits
    std::vector<std::int64_t> adj64_;
    std::int64_t mod64_ = 0;
};

// Fraction-free determinant with row pivoting.
BigInt bareiss_determinant(const IntMatrix& a);
// Leading principal minors D_1..D_n (Bareiss without pivoting).
std::vector<BigInt> leading_minors(const IntMatrix& a);
// Fraction-free Gauss-Jordan on [A | I]; returns (det, adj). Throws on singular input.
std::pair<BigInt, BigMatrix> fraction_free_inverse(const IntMatrix& a);

IntMatrix intersection_matrix(const PlumbingGraph& g);

enum class Support { Full, EvenDegreesOnly, Unsupported };
std::string to_string(Support s);

struct ValidationReport {
    bool is_tree = false;
    std::string structure_message;
    bool is_negative_definite = false;
    std::vector<BigInt> leading_minors;
    BigInt determinant;
    int bad_vertex_count = 0;
    std::vector<int> bad_vertices;
    Support support = Support::Unsupported;
};

ValidationReport validate(const PlumbingGraph& g);

}  // namespace plumbhf

#include "plumbhf/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace plumbhf {

bool BitVector::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
    BitVector y(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < cols_; ++c) acc ^= rows_[r].get(c) && x.get(c);
        y.set(r, acc);
    }
    return y;
}

std::size_t BitMatrix::rank() const {
    std::vector<BitVector> m = rows_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && !m[p].get(c)) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != rank && m[r].get(c)) m[r] ^= m[rank];
        ++rank;
    }
    return rank;
}

std::optional<BitVector> BitMatrix::solve(const BitVector& b) const {
    if (b.size() != rows()) throw std::invalid_argument("dimension mismatch");
    // augmented rows [A | b]
    const std::size_t n = rows();
    std::vector<BitVector> m(n, BitVector(cols_ + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (rows_[r].get(c)) m[r].set(c);
        if (b.get(r)) m[r].set(cols_);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < n; ++c) {
        std::size_t p = rank;
        while (p < n && !m[p].get(c)) ++p;
        if (p == n) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < n; ++r)
            if (r != rank && m[r].get(c)) m[r] ^= m[rank];
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < n; ++r)
        if (m[r].get(cols_)) return std::nullopt;
    BitVector x(cols_);
    for (std::size_t r = 0; r < rank; ++r)
        if (m[r].get(cols_)) x.set(pivot_col[r]);
    return x;
}

}  // namespace plumbhf

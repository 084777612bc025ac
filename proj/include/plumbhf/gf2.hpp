#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace plumbhf {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v) w_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }
    BitVector& operator^=(const BitVector& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool any() const;
    std::size_t count() const;
    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense matrix over F_2, stored by rows.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }

    BitVector multiply(const BitVector& x) const;
    std::size_t rank() const;
    // Some x with A x = b, if one exists.
    std::optional<BitVector> solve(const BitVector& b) const;

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
};

}  // namespace plumbhf

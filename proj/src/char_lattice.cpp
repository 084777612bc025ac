#include "plumbhf/char_lattice.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace plumbhf {

bool is_characteristic(const CharVector& k, const IntersectionForm& form) {
    if (static_cast<int>(k.size()) != form.n()) return false;
    for (int i = 0; i < form.n(); ++i)
        if ((k[i] - form.weight(i)) % 2 != 0) return false;
    return true;
}

void add_2pd_inplace(CharVector& k, int v, const IntersectionForm& form, int sign) {
    const auto& row = form.matrix()[v];
    for (int i = 0; i < form.n(); ++i) k[i] += 2 * sign * static_cast<int>(row[i]);
}

CharVector add_2pd(const CharVector& k, int v, const IntersectionForm& form, int sign) {
    if (v < 0 || v >= form.n()) throw std::out_of_range("vertex index out of range");
    CharVector out = k;
    add_2pd_inplace(out, v, form, sign);
    return out;
}

Rational square(const CharVector& k, const IntersectionForm& form) {
    return make_rational(form.quadratic_numerator(k), form.determinant());
}

Rational degree(const CharVector& k, const IntersectionForm& form) {
    return (square(k, form) + form.n()) / 4;
}

namespace {

// Mixed-radix box: coordinate i runs lo[i], lo[i]+2, ..., lo[i]+2*(len[i]-1).
struct Box {
    std::vector<int> lo;
    std::vector<std::uint64_t> len;
    std::uint64_t total = 1;

    CharVector at(std::uint64_t idx) const {
        const int n = static_cast<int>(lo.size());
        CharVector x(n);
        for (int i = n - 1; i >= 0; --i) {
            x[i] = lo[i] + 2 * static_cast<int>(idx % len[i]);
            idx /= len[i];
        }
        return x;
    }
};

Box box_bn(const IntersectionForm& form, int nlevel) {
    Box b;
    for (int i = 0; i < form.n(); ++i) {
        // bound has the parity of m_i, so the box is symmetric
        int hi = -form.weight(i) + 2 * nlevel;
        int lo = -hi;
        std::uint64_t len = hi >= 0 ? static_cast<std::uint64_t>(hi + 1) : 0;
        b.lo.push_back(lo);
        b.len.push_back(len);
        b.total *= len;
    }
    return b;
}

Box box_initial(const IntersectionForm& form) {
    Box b;
    for (int i = 0; i < form.n(); ++i) {
        int lo = form.weight(i) + 2, hi = -form.weight(i);
        std::uint64_t len = hi >= lo ? static_cast<std::uint64_t>((hi - lo) / 2 + 1) : 0;
        b.lo.push_back(lo);
        b.len.push_back(len);
        b.total *= len;
    }
    return b;
}

constexpr std::uint64_t kMaxBox = 50'000'000;

std::vector<CharVector> expand_parallel(const Box& box) {
    if (box.total > kMaxBox) throw std::length_error("enumeration box too large");
    std::vector<CharVector> out(box.total);
    const long long total = static_cast<long long>(box.total);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < total; ++i) out[i] = box.at(static_cast<std::uint64_t>(i));
    return out;
}

std::vector<CharVector> expand_serial(const Box& box) {
    if (box.total > kMaxBox) throw std::length_error("enumeration box too large");
    std::vector<CharVector> out;
    out.reserve(box.total);
    if (box.total == 0) return out;
    CharVector x = box.lo;
    const int n = static_cast<int>(x.size());
    while (true) {
        out.push_back(x);
        int i = n - 1;
        while (i >= 0) {
            x[i] += 2;
            if (x[i] <= box.lo[i] + 2 * static_cast<int>(box.len[i] - 1)) break;
            x[i] = box.lo[i];
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace

std::vector<CharVector> enumerate_b_n(const IntersectionForm& form, int nlevel) {
    if (nlevel < 0) throw std::invalid_argument("nlevel must be non-negative");
    return expand_parallel(box_bn(form, nlevel));
}

std::vector<CharVector> initial_candidates(const IntersectionForm& form) {
    return expand_parallel(box_initial(form));
}

std::uint64_t initial_candidate_count(const IntersectionForm& form) { return box_initial(form).total; }

bool same_spinc(const CharVector& a, const CharVector& b, const IntersectionForm& form) {
    const int n = form.n();
    // (1/2) adj (a-b) / det must be integral
    const BigInt den = 2 * form.determinant();
    for (int i = 0; i < n; ++i) {
        BigInt s = 0;
        for (int j = 0; j < n; ++j) s += form.adjugate()[i][j] * (a[j] - b[j]);
        if (s % den != 0) return false;
    }
    return true;
}

std::vector<std::vector<std::int64_t>> spinc_keys(const std::vector<CharVector>& vectors,
                                                  const IntersectionForm& form) {
    std::vector<std::vector<std::int64_t>> keys(vectors.size());
    const long long m = static_cast<long long>(vectors.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < m; ++i) keys[i] = form.spinc_key(vectors[i]);
    return keys;
}

std::vector<SpinCClass> partition_spinc(const std::vector<CharVector>& vectors, const IntersectionForm& form) {
    auto keys = spinc_keys(vectors, form);
    std::map<std::vector<std::int64_t>, int> index;
    std::vector<SpinCClass> classes;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        auto [it, fresh] = index.emplace(keys[i], static_cast<int>(classes.size()));
        if (fresh) classes.push_back({vectors[i], {}});
        classes[it->second].member_ids.push_back(static_cast<int>(i));
    }
    return classes;
}

std::string format_vector(const CharVector& k) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
    out << ']';
    return out.str();
}

namespace serial {

std::vector<CharVector> initial_candidates(const IntersectionForm& form) {
    return expand_serial(box_initial(form));
}

std::vector<std::vector<std::int64_t>> spinc_keys(const std::vector<CharVector>& vectors,
                                                  const IntersectionForm& form) {
    std::vector<std::vector<std::int64_t>> keys;
    keys.reserve(vectors.size());
    for (const auto& v : vectors) keys.push_back(form.spinc_key(v));
    return keys;
}

}  // namespace serial

}  // namespace plumbhf

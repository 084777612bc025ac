#include "plumbhf/intersection_form.hpp"

#include <limits>

namespace plumbhf {

IntMatrix intersection_matrix(const PlumbingGraph& g) {
    const int n = g.size();
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = g.weights[i];
    for (auto [a, b] : g.edges) m[a][b] = m[b][a] = 1;
    return m;
}

BigInt bareiss_determinant(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    BigMatrix m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<BigInt> leading_minors(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    BigMatrix m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    std::vector<BigInt> minors;
    BigInt prev = 1;
    for (int k = 0; k < n; ++k) {
        minors.push_back(m[k][k]);
        if (m[k][k] == 0) {
            // Later minors need pivoting; fall back to direct evaluation.
            for (int r = k + 2; r <= n; ++r) {
                IntMatrix sub(r, std::vector<long long>(r));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) sub[i][j] = a[i][j];
                minors.push_back(bareiss_determinant(sub));
            }
            return minors;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return minors;
}

std::pair<BigInt, BigMatrix> fraction_free_inverse(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    BigMatrix m(n, std::vector<BigInt>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) throw SingularFormError("intersection form is singular (det 0)");
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    // Left block is now prev * identity and prev = sign * det.
    BigInt det = sign * prev;
    BigMatrix adj(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adj[i][j] = sign * m[i][n + j];
    return {det, adj};
}

IntersectionForm::IntersectionForm(const PlumbingGraph& g)
    : n_(g.size()), weights_(g.weights), matrix_(intersection_matrix(g)) {
    auto [det, adj] = fraction_free_inverse(matrix_);
    det_ = std::move(det);
    adj_ = std::move(adj);

    const BigInt limit = BigInt(1) << 40;
    small_ = abs(det_) < limit;
    for (const auto& row : adj_)
        for (const auto& x : row) small_ = small_ && abs(x) < limit;
    if (small_) {
        adj64_.reserve(n_ * n_);
        for (const auto& row : adj_)
            for (const auto& x : row) adj64_.push_back(x.convert_to<std::int64_t>());
        mod64_ = 2 * abs(det_).convert_to<std::int64_t>();
    }
}

RationalMatrix IntersectionForm::inverse() const {
    RationalMatrix inv(n_, std::vector<Rational>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) inv[i][j] = make_rational(adj_[i][j], det_);
    return inv;
}

BigInt IntersectionForm::quadratic_numerator(const std::vector<int>& x) const {
    if (small_) {
        __int128 acc = 0;
        for (int i = 0; i < n_; ++i) {
            if (x[i] == 0) continue;
            __int128 row = 0;
            for (int j = 0; j < n_; ++j) row += static_cast<__int128>(adj64_[i * n_ + j]) * x[j];
            acc += row * x[i];
        }
        // |x| stays small in practice; fall through to BigInt if it would not fit.
        if (acc < std::numeric_limits<std::int64_t>::max() && acc > std::numeric_limits<std::int64_t>::min())
            return BigInt(static_cast<std::int64_t>(acc));
    }
    BigInt acc = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) acc += adj_[i][j] * x[i] * x[j];
    return acc;
}

std::vector<std::int64_t> IntersectionForm::spinc_key(const std::vector<int>& x) const {
    std::vector<std::int64_t> key(n_);
    if (small_) {
        for (int i = 0; i < n_; ++i) {
            __int128 s = 0;
            for (int j = 0; j < n_; ++j) s += static_cast<__int128>(adj64_[i * n_ + j]) * x[j];
            s %= mod64_;
            if (s < 0) s += mod64_;
            key[i] = static_cast<std::int64_t>(s);
        }
        return key;
    }
    const BigInt mod = 2 * abs(det_);
    for (int i = 0; i < n_; ++i) {
        BigInt s = 0;
        for (int j = 0; j < n_; ++j) s += adj_[i][j] * x[j];
        s %= mod;
        if (s < 0) s += mod;
        key[i] = s.convert_to<std::int64_t>();  // only reached for huge det; keys may collide
    }
    return key;
}

std::string to_string(Support s) {
    switch (s) {
        case Support::Full: return "FULL";
        case Support::EvenDegreesOnly: return "EVEN_DEGREES_ONLY";
        default: return "UNSUPPORTED";
    }
}

ValidationReport validate(const PlumbingGraph& g) {
    ValidationReport r;
    auto err = structure_error(g);
    r.is_tree = !err;
    if (err) {
        r.structure_message = *err;
        return r;
    }
    IntMatrix m = intersection_matrix(g);
    r.leading_minors = leading_minors(m);
    r.determinant = r.leading_minors.back();
    r.is_negative_definite = true;
    for (std::size_t k = 0; k < r.leading_minors.size(); ++k) {
        // (-1)^k D_k > 0 with k counted from 1
        const BigInt& d = r.leading_minors[k];
        bool ok = (k % 2 == 0) ? d < 0 : d > 0;
        r.is_negative_definite = r.is_negative_definite && ok;
    }
    for (int v = 0; v < g.size(); ++v) {
        if (g.weights[v] + g.degree(v) > 0) r.bad_vertices.push_back(v);
    }
    r.bad_vertex_count = static_cast<int>(r.bad_vertices.size());
    if (!r.is_negative_definite || r.bad_vertex_count > 2) r.support = Support::Unsupported;
    else if (r.bad_vertex_count == 2) r.support = Support::EvenDegreesOnly;
    else r.support = Support::Full;
    return r;
}

}  // namespace plumbhf

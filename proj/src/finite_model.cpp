#include "plumbhf/finite_model.hpp"

#include <algorithm>
#include <map>

namespace plumbhf {

std::vector<int> FiniteModel::classes_at_level(int t) const {
    if (t < 0 || t >= static_cast<int>(by_level_.size())) return {};
    return by_level_[t];
}

int FiniteModel::rank_at_grading(const Rational& g) const {
    Rational half = (g - d_) / 2;
    if (!is_integer(half)) return 0;
    return rank_at_level(static_cast<int>(to_int(half)));
}

int FiniteModel::class_of(int t, int generator) const {
    for (int c : classes_at_level(t))
        if (std::find(classes_[c].members.begin(), classes_[c].members.end(), generator) !=
            classes_[c].members.end())
            return c;
    return -1;
}

BitVector FiniteModel::apply_u(const BitVector& x) const {
    BitVector y(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        if (!x.get(c)) continue;
        // U(c*) collects every c' one level down with u(c') = c
        for (int c2 : classes_at_level(classes_[c].level - 1))
            if (up_[c2] == static_cast<int>(c)) y.flip(c2);
    }
    return y;
}

BitMatrix FiniteModel::u_power_matrix(int t, int k) const {
    auto rows = classes_at_level(t);
    auto cols = classes_at_level(t + k);
    BitMatrix a(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int c = rows[r];
        for (int s = 0; s < k && c >= 0; ++s) c = up_[c];
        if (c < 0) continue;
        auto it = std::find(cols.begin(), cols.end(), c);
        if (it != cols.end()) a.set(r, static_cast<std::size_t>(it - cols.begin()));
    }
    return a;
}

FiniteModel build_model(const SpincLadder& L, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    FiniteModel fm;
    fm.depth_ = depth;
    fm.spinc_ = L.spinc_id;
    fm.d_ = L.d;
    const int last_birth = *std::max_element(L.birth_level.begin(), L.birth_level.end());
    // A class at level t has max exponent t - (oldest birth), so nothing above
    // last_birth + depth can be in the model.
    const int top = last_birth + depth;
    if (!L.stabilized && top >= L.computed_levels())
        throw NotStabilized("spin^c " + std::to_string(L.spinc_id) + ": sweep did not stabilize below depth " +
                            std::to_string(depth));
    std::map<std::pair<int, int>, int> index;  // (level, label) -> class id
    fm.by_level_.resize(top + 1);
    for (int t = 0; t <= top; ++t) {
        std::map<int, std::vector<int>> groups;
        for (int i = 0; i < L.size(); ++i) {
            int lab = L.label_at(t, i);
            if (lab >= 0) groups[lab].push_back(i);
        }
        for (auto& [lab, mem] : groups) {
            int eld = L.elder(t, lab);
            int maxexp = t - L.birth_level[eld];
            if (maxexp > depth) continue;
            ModelClass mc;
            mc.level = t;
            mc.grading = L.grading_of(t);
            mc.label = lab;
            mc.max_exponent = maxexp;
            mc.representative = {maxexp, L.vectors[eld]};
            mc.members = mem;
            index[{t, lab}] = static_cast<int>(fm.classes_.size());
            fm.by_level_[t].push_back(static_cast<int>(fm.classes_.size()));
            fm.classes_.push_back(std::move(mc));
            fm.top_level_ = std::max(fm.top_level_, t);
        }
    }
    fm.up_.assign(fm.classes_.size(), -1);
    for (std::size_t c = 0; c < fm.classes_.size(); ++c) {
        const auto& mc = fm.classes_[c];
        if (mc.level + 1 > top) continue;  // exponent would exceed depth
        int lab = L.label_at(mc.level + 1, mc.members.front());
        auto it = index.find({mc.level + 1, lab});
        if (it != index.end()) fm.up_[c] = it->second;
    }
    return fm;
}

}  // namespace plumbhf

#include "plumbhf/equivalence.hpp"

#include "plumbhf/full_paths.hpp"

#include <algorithm>
#include <deque>

namespace plumbhf {

Rational grading(const UElement& e, const IntersectionForm& form) { return 2 * e.m - degree(e.k, form); }

std::vector<int> pack(const UElement& e) {
    std::vector<int> p;
    p.reserve(e.k.size() + 1);
    p.push_back(e.m);
    p.insert(p.end(), e.k.begin(), e.k.end());
    return p;
}

UElement unpack(const std::vector<int>& p) { return {p.front(), CharVector(p.begin() + 1, p.end())}; }

namespace {

// Packed neighbours of a packed element, appended to out.
void packed_moves(const std::vector<int>& p, const IntersectionForm& form, std::vector<std::vector<int>>& out) {
    const int n = form.n();
    const int m = p[0];
    for (int v = 0; v < n; ++v) {
        const int x = p[v + 1], w = form.weight(v);
        const auto& row = form.matrix()[v];
        const int nf = (x + w) / 2;  // exact: x = w mod 2
        if (m + nf >= 0) {
            std::vector<int> q = p;
            q[0] = m + nf;
            for (int i = 0; i < n; ++i) q[i + 1] += 2 * static_cast<int>(row[i]);
            out.push_back(std::move(q));
        }
        const int nb = (x - w) / 2;
        if (m - nb >= 0) {
            std::vector<int> q = p;
            q[0] = m - nb;
            for (int i = 0; i < n; ++i) q[i + 1] -= 2 * static_cast<int>(row[i]);
            out.push_back(std::move(q));
        }
    }
}

}  // namespace

std::vector<UElement> move_targets(const UElement& e, const IntersectionForm& form) {
    std::vector<std::vector<int>> raw;
    packed_moves(pack(e), form, raw);
    std::vector<UElement> out;
    out.reserve(raw.size());
    for (auto& p : raw) out.push_back(unpack(p));
    return out;
}

UElement EquivalenceClass::canonical() const {
    const std::vector<int>* best = nullptr;
    for (const auto& p : members_)
        if (!best || p < *best) best = &p;
    return unpack(*best);
}

std::vector<UElement> EquivalenceClass::members() const {
    std::vector<UElement> out;
    out.reserve(members_.size());
    for (const auto& p : members_) out.push_back(unpack(p));
    std::sort(out.begin(), out.end());
    return out;
}

void EquivalenceClass::for_each(const std::function<void(const UElement&)>& f) const {
    for (const auto& p : members_) f(unpack(p));
}

EquivalenceClass explore_class(const UElement& start, const IntersectionForm& form, std::size_t max_size) {
    EquivalenceClass cls;
    std::deque<std::vector<int>> queue;
    auto first = pack(start);
    cls.members_.insert(first);
    cls.min_m_ = cls.max_m_ = start.m;
    queue.push_back(std::move(first));
    std::vector<std::vector<int>> next;
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        next.clear();
        packed_moves(cur, form, next);
        for (auto& q : next) {
            if (cls.members_.count(q)) continue;
            cls.min_m_ = std::min(cls.min_m_, q[0]);
            cls.max_m_ = std::max(cls.max_m_, q[0]);
            cls.members_.insert(q);
            if (cls.members_.size() > max_size)
                throw ClassBudgetExceeded("equivalence class exceeded " + std::to_string(max_size) + " elements");
            queue.push_back(std::move(q));
        }
    }
    return cls;
}

bool equivalent(const UElement& a, const UElement& b, const IntersectionForm& form, std::size_t max_size) {
    if (a == b) return true;
    if (grading(a, form) != grading(b, form)) return false;
    PackedSet seen;
    std::deque<std::vector<int>> queue;
    const auto target = pack(b);
    seen.insert(pack(a));
    queue.push_back(pack(a));
    std::vector<std::vector<int>> next;
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        next.clear();
        packed_moves(cur, form, next);
        for (auto& q : next) {
            if (q == target) return true;
            if (!seen.insert(q).second) continue;
            if (seen.size() > max_size)
                throw ClassBudgetExceeded("equivalence class exceeded " + std::to_string(max_size) + " elements");
            queue.push_back(std::move(q));
        }
    }
    return false;
}

std::set<CharVector> RootSet::vectors() const {
    std::set<CharVector> out;
    for (const auto& r : roots) out.insert(r.k);
    return out;
}

RootSet root_vectors(const UElement& e, const IntersectionForm& form, std::size_t branch_budget) {
    RootSet result;
    const int n = form.n();
    std::set<UElement> seen;
    std::vector<UElement> stack{e};
    std::vector<UElement> next;
    while (!stack.empty()) {
        UElement cur = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        if (seen.size() > branch_budget) {
            result.complete = false;
            break;
        }
        next.clear();
        const bool terminal = is_good_terminal(cur.k, form) || is_bad_terminal(cur.k, form);
        if (!terminal) {
            for (int v = 0; v < n; ++v)
                if (cur.k[v] == -form.weight(v)) next.push_back({cur.m, add_2pd(cur.k, v, form)});
        }
        if (next.empty() && cur.m > 0) {
            for (int v = 0; v < n; ++v)
                if (cur.k[v] + form.weight(v) == -2) next.push_back({cur.m - 1, add_2pd(cur.k, v, form)});
        }
        if (next.empty()) {
            for (int v = 0; v < n; ++v)
                if (cur.k[v] + form.weight(v) == 2) next.push_back({cur.m + 1, add_2pd(cur.k, v, form)});
        }
        if (next.empty()) result.roots.insert(cur);
        for (auto& x : next) stack.push_back(std::move(x));
    }
    result.states = seen.size();
    return result;
}

bool roots_intersect(const RootSet& a, const RootSet& b) {
    for (const auto& r : a.roots)
        if (b.roots.count(r)) return true;
    return false;
}

}  // namespace plumbhf

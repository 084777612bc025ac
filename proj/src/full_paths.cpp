#include "plumbhf/full_paths.hpp"

#include <algorithm>
#include <exception>
#include <random>

namespace plumbhf {

bool is_initial(const CharVector& k, const IntersectionForm& form) {
    for (int i = 0; i < form.n(); ++i) {
        const int m = form.weight(i);
        if (k[i] < m + 2 || k[i] > -m) return false;
    }
    return true;
}

bool is_good_terminal(const CharVector& k, const IntersectionForm& form) {
    for (int i = 0; i < form.n(); ++i) {
        const int m = form.weight(i);
        if (k[i] < m || k[i] > -m - 2) return false;
    }
    return true;
}

bool is_bad_terminal(const CharVector& k, const IntersectionForm& form) {
    for (int i = 0; i < form.n(); ++i)
        if (k[i] > -form.weight(i)) return true;
    return false;
}

namespace {

template <class Pick>
FullPath walk(const CharVector& k0, const IntersectionForm& form, std::uint64_t budget, bool record, Pick pick) {
    FullPath p;
    p.start = k0;
    CharVector x = k0;
    std::vector<int> eligible;
    for (std::uint64_t step = 0;; ++step) {
        if (is_good_terminal(x, form)) { p.verdict = Verdict::Good; break; }
        if (is_bad_terminal(x, form)) { p.verdict = Verdict::Bad; break; }
        if (step >= budget) throw StepBudgetExceeded("full path exceeded step budget from " + format_vector(k0));
        eligible.clear();
        for (int v = 0; v < form.n(); ++v)
            if (x[v] == -form.weight(v)) eligible.push_back(v);
        if (eligible.empty())
            throw std::invalid_argument("full path stuck (pairing below m(v)) from " + format_vector(k0));
        int v = pick(eligible);
        if (record) p.steps.push_back(v);
        add_2pd_inplace(x, v, form);
    }
    p.terminal = std::move(x);
    return p;
}

}  // namespace

FullPath run_full_path(const CharVector& k0, const IntersectionForm& form, Tiebreak tb, std::uint64_t step_budget) {
    if (!is_characteristic(k0, form)) throw std::invalid_argument("start vector is not characteristic");
    switch (tb.rule) {
        case TiebreakRule::SmallestIndex:
            return walk(k0, form, step_budget, true, [](const std::vector<int>& e) { return e.front(); });
        case TiebreakRule::Random: {
            std::mt19937_64 rng(tb.seed);
            return walk(k0, form, step_budget, true, [&](const std::vector<int>& e) {
                std::uniform_int_distribution<std::size_t> d(0, e.size() - 1);
                return e[d(rng)];
            });
        }
        default: {
            int last = -1;
            return walk(k0, form, step_budget, true, [&](const std::vector<int>& e) {
                auto it = std::upper_bound(e.begin(), e.end(), last);
                last = it == e.end() ? e.front() : *it;
                return last;
            });
        }
    }
}

Verdict path_verdict(const CharVector& k0, const IntersectionForm& form, std::uint64_t step_budget) {
    return walk(k0, form, step_budget, false, [](const std::vector<int>& e) { return e.front(); }).verdict;
}

std::vector<char> classify_candidates(const std::vector<CharVector>& candidates, const IntersectionForm& form,
                                      std::uint64_t step_budget) {
    std::vector<char> good(candidates.size(), 0);
    std::exception_ptr failure;
    const long long m = static_cast<long long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < m; ++i) {
        try {
            good[i] = path_verdict(candidates[i], form, step_budget) == Verdict::Good;
        } catch (...) {
#pragma omp critical(plumbhf_classify)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return good;
}

namespace {

GoodVectorSet collect(const std::vector<CharVector>& candidates, const std::vector<char>& good,
                      const IntersectionForm& form) {
    GoodVectorSet gvs;
    gvs.candidate_count = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (good[i]) gvs.vectors.push_back(candidates[i]);
    for (const auto& k : gvs.vectors) gvs.degrees.push_back(degree(k, form));
    gvs.classes = partition_spinc(gvs.vectors, form);
    gvs.spinc_ids.assign(gvs.vectors.size(), -1);
    for (std::size_t c = 0; c < gvs.classes.size(); ++c)
        for (int id : gvs.classes[c].member_ids) gvs.spinc_ids[id] = static_cast<int>(c);
    return gvs;
}

}  // namespace

GoodVectorSet good_vectors(const IntersectionForm& form, std::uint64_t step_budget) {
    auto candidates = initial_candidates(form);
    auto good = classify_candidates(candidates, form, step_budget);
    return collect(candidates, good, form);
}

Rational correction_term(const SpinCClass& cls, const GoodVectorSet& gvs) {
    if (cls.member_ids.empty()) throw std::logic_error("spin^c class has no good vector");
    Rational best = gvs.degrees.at(cls.member_ids.front());
    for (int id : cls.member_ids) best = std::max(best, gvs.degrees.at(id));
    return -best;
}

namespace serial {

std::vector<char> classify_candidates(const std::vector<CharVector>& candidates, const IntersectionForm& form,
                                      std::uint64_t step_budget) {
    std::vector<char> good;
    good.reserve(candidates.size());
    for (const auto& k : candidates) good.push_back(path_verdict(k, form, step_budget) == Verdict::Good);
    return good;
}

GoodVectorSet good_vectors(const IntersectionForm& form, std::uint64_t step_budget) {
    auto candidates = serial::initial_candidates(form);
    auto good = serial::classify_candidates(candidates, form, step_budget);
    return collect(candidates, good, form);
}

}  // namespace serial

}  // namespace plumbhf

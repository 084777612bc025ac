#pragma once

#include "plumbhf/finite_model.hpp"
#include "plumbhf/full_paths.hpp"
#include "plumbhf/intersection_form.hpp"
#include "plumbhf/ladder.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace plumbhf {

class UnsupportedGraph : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AnalysisOptions {
    int depth_cap = depth_cap_from_env();
    bool check_roots = true;
    std::size_t class_budget = kDefaultClassBudget;
    std::size_t branch_budget = kDefaultBranchBudget;
    std::uint64_t step_budget = kDefaultStepBudget;
};

struct Analysis {
    PlumbingGraph graph;
    ValidationReport validation;
    std::shared_ptr<const IntersectionForm> form_ptr;
    GoodVectorSet gvs;
    std::vector<SpincLadder> ladders;
    std::vector<HFPlusModule> modules;
    std::vector<Relation> relations;
    int depth_cap = kDefaultDepthCap;
    bool stabilized = true;
    int depth_used = 0;
    std::vector<std::string> diagnostics;

    const IntersectionForm& form() const { return *form_ptr; }
    int spinc_count() const { return static_cast<int>(gvs.classes.size()); }
    // Spin^c class of a characteristic vector, -1 if no good vector shares it.
    int spinc_of(const CharVector& k) const;
};

// Throws UnsupportedGraph when validation reports UNSUPPORTED.
Analysis analyze(const PlumbingGraph& g, const AnalysisOptions& opt = {});

}  // namespace plumbhf

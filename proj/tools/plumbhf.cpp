// plumbhf: HF+ of negative definite plumbing trees, contact invariants, sigma.

#include "plumbhf/analysis.hpp"
#include "plumbhf/contact.hpp"
#include "plumbhf/family.hpp"
#include "plumbhf/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace plumbhf;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kUnstable = 3, kInput = 4 };

int cap_from(int cli_depth) { return cli_depth >= 0 ? cli_depth : depth_cap_from_env(); }

std::vector<int> parse_csv(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad rotation '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

void emit(const Json& j, const std::string& text, bool json) {
    if (json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

int run_validate(const std::string& path, bool json) {
    PlumbingGraph g = load_graph(path);
    ValidationReport v = validate(g);
    Json j{{"graph", graph_json(g)}, {"validation", validation_json(v)}};
    emit(j, validation_text(g, v), json);
    return v.support == Support::Unsupported ? kInvalid : kOk;
}

int run_hf(const std::string& path, int depth, bool json) {
    PlumbingGraph g = load_graph(path);
    AnalysisOptions opt;
    opt.depth_cap = cap_from(depth);
    Analysis a = analyze(g, opt);
    emit(hf_json(a), hf_text(a), json);
    return a.stabilized ? kOk : kUnstable;
}

int contact_on(const Analysis& a, const CharVector& chern, bool json, Json extra = {}) {
    if (!a.ladders.empty() && !a.ladders[std::max(0, a.spinc_of(chern))].stabilized)
        throw NotStabilized("model did not stabilize; sigma undecided");
    ContactReport r = contact_report(chern, a);
    Json j = contact_json(r, a);
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(j, contact_text(r, a), json);
    return kOk;
}

int run_contact(const std::string& path, const std::string& rot, int depth, bool json) {
    PlumbingGraph g = load_graph(path);
    SteinData s{parse_csv(rot)};
    CharVector chern = chern_from_rotations(s, g);
    AnalysisOptions opt;
    opt.depth_cap = cap_from(depth);
    opt.check_roots = false;
    Analysis a = analyze(g, opt);
    return contact_on(a, chern, json);
}

int run_family(int n, int depth, bool json) {
    if (n < 1 || n > 8) throw std::invalid_argument("family index must be in 1..8");
    PlumbingGraph g = family_graph(n);
    AnalysisOptions opt;
    opt.depth_cap = cap_from(depth);
    opt.check_roots = false;
    Analysis a = analyze(g, opt);
    CharVector kn = family_generator(n, n), kn1 = family_generator(n, n + 1);
    ContactReport other = contact_report(kn1, a);
    Json extra;
    extra["family"] = {{"n", n},
                       {"expected_sigma", -(family_p(n) - 1)},
                       {"conjugate_chern", kn1},
                       {"conjugate_sigma", other.sigma.neg_infinity ? "-inf" : std::to_string(other.sigma.value)}};
    if (!json) std::cout << "family n = " << n << " (Sigma(2," << 2 * n + 1 << "," << 4 * n + 3 << "))\n";
    return contact_on(a, kn, json, extra);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heegaard Floer HF+ of negative definite plumbing trees"};
    app.require_subcommand(1);
    bool json = false;
    int depth = -1;
    std::string path, rot;
    int n = 0;

    auto* val = app.add_subcommand("validate", "check a graph file");
    val->add_option("file", path, "graph file")->required();
    val->add_flag("--json", json, "JSON output");

    auto* hf = app.add_subcommand("hf", "compute HF+ per spin^c structure");
    hf->add_option("file", path, "graph file")->required();
    hf->add_option("--depth", depth, "depth cap (overrides PLUMBHF_MAX_DEPTH)")->check(CLI::NonNegativeNumber);
    hf->add_flag("--json", json, "JSON output");

    auto* ct = app.add_subcommand("contact", "locate the contact invariant of a Stein structure");
    ct->add_option("file", path, "graph file")->required();
    ct->add_option("--rot", rot, "rotation numbers, comma separated, in vertex order")->required();
    ct->add_option("--depth", depth, "depth cap")->check(CLI::NonNegativeNumber);
    ct->add_flag("--json", json, "JSON output");

    auto* fam = app.add_subcommand("family", "sigma for Sigma(2,2n+1,4n+3)");
    fam->add_option("n", n, "family index")->required();
    fam->add_option("--depth", depth, "depth cap")->check(CLI::NonNegativeNumber);
    fam->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInput;
    }

    try {
        if (*val) return run_validate(path, json);
        if (*hf) return run_hf(path, depth, json);
        if (*ct) return run_contact(path, rot, depth, json);
        if (*fam) return run_family(n, depth, json);
    } catch (const GraphError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const ParityError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const NotStein& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const UnsupportedGraph& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kInvalid;
    } catch (const UnsupportedOperation& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kInvalid;
    } catch (const SingularFormError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kInvalid;
    } catch (const StepBudgetExceeded& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return kInvalid;
    } catch (const NotStabilized& e) {
        std::cerr << "not stabilized: " << e.what() << "\n";
        return kUnstable;
    } catch (const ClassBudgetExceeded& e) {
        std::cerr << "not stabilized: " << e.what() << "\n";
        return kUnstable;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kOk;
}

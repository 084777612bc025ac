#include "oracle.hpp"

#include "plumbhf/report.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace plumbhf;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(PLUMBHF_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

Run run_err(const std::string& args) {
    std::string cmd = std::string(PLUMBHF_CLI) + " " + args + " 2>&1 >/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string fx(const std::string& name) { return oracle::fixture(name); }

std::string temp_graph(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("plumbhf_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("validate exit codes") {
    auto d4 = run("validate " + fx("d4.graph") + " --json");
    CHECK(d4.code == 0);
    auto j = Json::parse(d4.out);
    CHECK(j["validation"]["bad_vertex_count"] == 1);
    CHECK(j["validation"]["support"] == "FULL");

    CHECK(run("validate " + fx("positive.graph")).code == 2);

    auto star = run("validate " + fx("seifert_star8.graph") + " --json");
    CHECK(star.code == 0);
    CHECK(Json::parse(star.out)["validation"]["determinant"] == "128");

    auto bad = temp_graph("selfloop.graph", "v 0 -2\nv 1 -2\ne 0 1\ne 1 1\n");
    auto e = run_err("validate " + bad);
    CHECK(e.code == 4);
    CHECK(e.out.find("line 4") != std::string::npos);

    CHECK(run("validate /nonexistent/file.graph").code == 4);
    CHECK(run("frobnicate").code == 4);
}

TEST_CASE("hf reports") {
    auto s = run("hf " + fx("sigma357.graph") + " --json");
    CHECK(s.code == 0);
    auto j = Json::parse(s.out);
    CHECK(j["good_vector_count"] == 4);
    REQUIRE(j["spinc"].size() == 1);
    CHECK(j["spinc"][0]["correction_term"] == "-2");
    CHECK(j["relations"].size() == 6);
    for (auto& r : j["relations"]) CHECK(r["root_confirmed"] == true);

    auto st = Json::parse(run("hf " + fx("seifert_star8.graph") + " --json").out);
    CHECK(st["initial_candidates"] == 768);
    CHECK(st["good_vector_count"] == 138);
    int rank2 = 0;
    bool saw_15_8 = false;
    for (auto& c : st["spinc"]) {
        if (c["generators"].size() == 2) ++rank2;
        if (c["hf_plus"]["notation"] == "T+(-15/8) + F(1/8)") saw_15_8 = true;
    }
    CHECK(rank2 == 10);
    CHECK(saw_15_8);

    auto d4 = Json::parse(run("hf " + fx("d4.graph") + " --json").out);
    for (auto& c : d4["spinc"]) CHECK(c["hf_plus"]["reduced"].empty());
}

TEST_CASE("hf: depth cap and non-stabilization exit") {
    CHECK(run("hf " + fx("sigma357.graph"), "PLUMBHF_MAX_DEPTH=0").code == 3);
    CHECK(run("hf " + fx("sigma357.graph") + " --depth 0").code == 3);
    CHECK(run("hf " + fx("sigma357.graph") + " --depth 4", "PLUMBHF_MAX_DEPTH=0").code == 0);
    auto partial = Json::parse(run("hf " + fx("sigma357.graph") + " --json --depth 0").out);
    CHECK(partial["diagnostics"]["stabilized"] == false);
}

TEST_CASE("contact reports") {
    auto st = run("contact " + fx("seifert_star8.graph") + " --rot 2,0,0,0,0,0,0,-1 --json");
    CHECK(st.code == 0);
    auto j = Json::parse(st.out);
    CHECK(j["contact"]["planar_verdict"] == "OBSTRUCTED");
    CHECK(j["contact"]["grading"] == "-7/8");

    auto d4 = Json::parse(run("contact " + fx("d4.graph") + " --rot 0,0,0,0 --json").out);
    CHECK(d4["contact"]["sigma"] == "-inf");
    CHECK(d4["contact"]["planar_verdict"] == "NO_OBSTRUCTION");

    for (auto rot : {"0,1,0,0,0,0,0,0,0,0,0,0", "0,-1,0,0,0,0,0,0,0,0,0,0"}) {
        auto s = Json::parse(run("contact " + fx("sigma357.graph") + " --rot " + rot + " --json").out);
        CHECK(s["contact"]["sigma"] == "0");
        CHECK(s["contact"]["planar_verdict"] == "OBSTRUCTED");
    }

    CHECK(run("contact " + fx("d4.graph") + " --rot 1,0,0,0").code == 4);
    CHECK(run("contact " + fx("d4.graph") + " --rot 0,0,0").code == 4);
    CHECK(run("contact " + fx("d4.graph") + " --rot a,b,c,d").code == 4);
}

TEST_CASE("family") {
    const char* expect[] = {"0", "0", "-1", "-1"};
    for (int n = 1; n <= 4; ++n) {
        auto r = run("family " + std::to_string(n) + " --json");
        CHECK(r.code == 0);
        auto j = Json::parse(r.out);
        CHECK(j["contact"]["sigma"] == expect[n - 1]);
        CHECK(j["family"]["conjugate_sigma"] == expect[n - 1]);
    }
    CHECK(run("family 0").code == 4);
}

TEST_CASE("determinism: byte-identical JSON") {
    for (auto args : {"hf " + fx("seifert_star8.graph") + " --json",
                      "contact " + fx("sigma357.graph") + " --rot 0,1,0,0,0,0,0,0,0,0,0,0 --json",
                      std::string("family 3 --json")}) {
        auto a = run(args), b = run(args);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
    auto a = run("hf " + fx("sigma357.graph") + " --json", "OMP_NUM_THREADS=1");
    auto b = run("hf " + fx("sigma357.graph") + " --json", "OMP_NUM_THREADS=4");
    CHECK(a.out == b.out);
}

TEST_CASE("text and JSON carry the same numbers") {
    auto text = run("contact " + fx("seifert_star8.graph") + " --rot 2,0,0,0,0,0,0,-1").out;
    auto j = Json::parse(run("contact " + fx("seifert_star8.graph") + " --rot 2,0,0,0,0,0,0,-1 --json").out);
    for (auto key : {"d3", "grading", "degree", "correction_term", "sigma"}) {
        std::string v = j["contact"][key].get<std::string>();
        CHECK_MESSAGE(text.find(v) != std::string::npos, key);
    }
    CHECK(text.find(j["contact"]["planar_verdict"].get<std::string>()) != std::string::npos);

    auto htext = run("hf " + fx("sigma357.graph")).out;
    auto hj = Json::parse(run("hf " + fx("sigma357.graph") + " --json").out);
    CHECK(htext.find(hj["spinc"][0]["hf_plus"]["notation"].get<std::string>()) != std::string::npos);
    for (auto& g : hj["generators"]) CHECK(htext.find(g["degree"].get<std::string>()) != std::string::npos);
}

TEST_CASE("rationals serialize as exact strings") {
    CHECK(to_string(Rational(-15, 8)) == "-15/8");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(parse_rational("-15/8") == Rational(-15, 8));
    CHECK(parse_rational(to_string(make_rational(7, -8))) == Rational(-7, 8));
    auto a = analyze(load_graph(fx("seifert_star8.graph")));
    auto j = hf_json(a);
    for (auto& g : j["generators"]) CHECK(g["degree"].is_string());
    CHECK(j.dump() == hf_json(a).dump());
}

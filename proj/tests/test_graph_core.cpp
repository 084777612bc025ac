#include "oracle.hpp"

#include "plumbhf/intersection_form.hpp"

#include <doctest.h>

using namespace plumbhf;

namespace {

int error_line(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const GraphError& e) {
        return e.line();
    }
    return -1;
}

std::string error_text(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const GraphError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse: single vertex") {
    auto g = parse_graph("v 0 -2\n");
    CHECK(g.size() == 1);
    CHECK(g.weights == std::vector<int>{-2});
    CHECK(g.edges.empty());
}

TEST_CASE("parse: D4 fixture is a 4-star") {
    auto g = load_graph(oracle::fixture("d4.graph"));
    REQUIRE(g.size() == 4);
    CHECK(g.degree(0) == 3);
    for (int v = 1; v < 4; ++v) CHECK(g.degree(v) == 1);
    for (int w : g.weights) CHECK(w == -2);
}

TEST_CASE("parse: comments, blank lines, file order") {
    auto g = parse_graph("# header\n\nv 1 -2   # leaf\nv 0 -3\ne 1 0\n");
    CHECK(g.ids == std::vector<int>{1, 0});
    CHECK(g.weights == std::vector<int>{-2, -3});
    REQUIRE(g.edges.size() == 1);
    auto round = parse_graph(to_text(g));
    CHECK(round.ids == g.ids);
    CHECK(round.weights == g.weights);
    CHECK(round.edges == g.edges);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("v 0 -2\ne 0 0\n") == 2);
    CHECK(error_text("v 0 -2\ne 0 0\n").find("self-loop") != std::string::npos);
    CHECK(error_line("v 0 -2\nx 1 2\n") == 2);
    CHECK(error_line("v 0 -2\nv 0 -3\n") == 2);
    CHECK(error_text("v 0 -2\nv 0 -3\n").find("duplicate") != std::string::npos);
    CHECK(error_line("v 0 -2\nv 1 -2\ne 0 5\n") == 3);
    CHECK(error_line("v 0 -2\nv 1 -2\ne 0 1\ne 1 0\n") == 4);
    CHECK(error_line("v 0 -2\nv 1 -2\nv 2 -2\ne 0 1\ne 1 2\ne 2 0\n") == 6);
    CHECK(error_text("v 0 -2\nv 1 -2\nv 2 -2\ne 0 1\ne 1 2\ne 2 0\n").find("cycle") != std::string::npos);
    CHECK(error_text("v 0 -2\nv 1 -2\n").find("disconnected") != std::string::npos);
    CHECK(error_text("v 0 -2 7\n").find("malformed") != std::string::npos);
    CHECK(error_text("v 0 -2\nv 2 -2\ne 0 2\n").find("0..n-1") != std::string::npos);
    CHECK_THROWS_AS(parse_graph(""), GraphError);
}

TEST_CASE("intersection form: single vertex -5") {
    IntersectionForm f(make_graph({-5}, {}));
    CHECK(f.matrix() == IntMatrix{{-5}});
    CHECK(f.determinant() == -5);
    CHECK(f.inverse()[0][0] == Rational(-1, 5));
}

TEST_CASE("intersection form: fixture determinants") {
    CHECK(abs(IntersectionForm(load_graph(oracle::fixture("d4.graph"))).determinant()) == 4);
    CHECK(abs(IntersectionForm(load_graph(oracle::fixture("seifert_star8.graph"))).determinant()) == 128);
    CHECK(abs(IntersectionForm(load_graph(oracle::fixture("sigma357.graph"))).determinant()) == 1);
}

TEST_CASE("intersection form: entries") {
    auto g = load_graph(oracle::fixture("sigma357.graph"));
    IntersectionForm f(g);
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) {
            if (i == j) CHECK(f.matrix()[i][j] == g.weights[i]);
            else CHECK((f.matrix()[i][j] == 0 || f.matrix()[i][j] == 1));
        }
    for (auto [a, b] : g.edges) CHECK(f.matrix()[a][b] == 1);
}

TEST_CASE("intersection form: singular rejected") {
    CHECK_THROWS_AS(IntersectionForm(make_graph({-1, -1}, {{0, 1}})), SingularFormError);
}

TEST_CASE("validate examples") {
    auto d4 = validate(load_graph(oracle::fixture("d4.graph")));
    CHECK(d4.is_tree);
    CHECK(d4.is_negative_definite);
    CHECK(d4.bad_vertex_count == 1);
    CHECK(d4.bad_vertices == std::vector<int>{0});
    CHECK(d4.support == Support::Full);

    auto s = validate(load_graph(oracle::fixture("sigma357.graph")));
    CHECK(s.support == Support::Full);
    CHECK(s.bad_vertex_count == 1);

    auto pos = validate(make_graph({1}, {}));
    CHECK_FALSE(pos.is_negative_definite);
    CHECK(pos.support == Support::Unsupported);

    // two -3 hubs, each with three -2 leaves
    auto two = make_graph({-3, -3, -2, -2, -2, -2, -2, -2},
                          {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
    auto r2 = validate(two);
    CHECK(r2.is_negative_definite);
    CHECK(r2.bad_vertex_count == 2);
    CHECK(r2.support == Support::EvenDegreesOnly);

    PlumbingGraph cyc;
    cyc.ids = {0, 1, 2};
    cyc.weights = {-2, -2, -2};
    cyc.edges = {{0, 1}, {1, 2}, {2, 0}};
    auto rc = validate(cyc);
    CHECK_FALSE(rc.is_tree);
    CHECK(rc.support == Support::Unsupported);
}

TEST_CASE("property: matrix * inverse = identity exactly; adjugate agrees with rational Gauss-Jordan") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        auto g = oracle::random_full_graph(rng, 7, 1'000'000);
        IntersectionForm f(g);
        auto inv = f.inverse();
        auto ref = oracle::rational_inverse(f.matrix());
        const int n = g.size();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int k = 0; k < n; ++k) s += Rational(f.matrix()[i][k]) * inv[k][j];
                CHECK(s == (i == j ? 1 : 0));
                CHECK(inv[i][j] == ref[i][j]);
            }
    }
}

TEST_CASE("property: negative definiteness agrees with brute force on <= 6 vertices") {
    std::mt19937_64 rng(12);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 150; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        std::vector<int> w(n);
        std::vector<std::pair<int, int>> e;
        for (auto& x : w) x = std::uniform_int_distribution<int>(-4, 0)(rng);
        for (int v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
        auto g = make_graph(w, e);
        bool verdict = validate(g).is_negative_definite;
        CHECK(verdict == oracle::brute_negative_definite(intersection_matrix(g)));
        (verdict ? yes : no)++;
    }
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("leading minors match direct determinants") {
    auto g = load_graph(oracle::fixture("seifert_star8.graph"));
    auto m = intersection_matrix(g);
    auto minors = leading_minors(m);
    for (int k = 1; k <= g.size(); ++k) {
        IntMatrix sub(k, std::vector<long long>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = m[i][j];
        CHECK(minors[k - 1] == bareiss_determinant(sub));
    }
}

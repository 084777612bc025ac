#include "oracle.hpp"

#include "plumbhf/char_lattice.hpp"
#include "plumbhf/full_paths.hpp"

#include <doctest.h>

#include <algorithm>

using namespace plumbhf;

namespace {
IntersectionForm form_of(const std::string& f) { return IntersectionForm(load_graph(oracle::fixture(f))); }
const CharVector S_K1{0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
const CharVector S_K3{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2};
}  // namespace

TEST_CASE("add_2pd examples") {
    auto d4 = form_of("d4.graph");
    CHECK(add_2pd({0, 2, 0, 0}, 1, d4) == CharVector{2, -2, 0, 0});
    CharVector z{0, 0, 0, 0};
    for (int v = 0; v < 4; ++v) CHECK(add_2pd(add_2pd(z, v, d4), v, d4, -1) == z);

    auto s = form_of("sigma357.graph");
    auto pushed = add_2pd(S_K1, 1, s);
    CHECK(pushed == oracle::pushed(S_K1, 1, s.matrix()));
    CHECK(pushed[1] == -7);
}

TEST_CASE("square and degree examples") {
    auto d4 = form_of("d4.graph");
    CHECK(square({0, 0, 0, 0}, d4) == 0);
    CHECK(square({0, 2, 0, 0}, d4) == -4);
    CHECK(degree({0, 0, 0, 0}, d4) == 1);
    CHECK(degree({0, 2, 0, 0}, d4) == 0);

    auto s = form_of("sigma357.graph");
    CHECK(square(S_K3, s) == -4);
    CHECK(degree(S_K3, s) == 2);

    auto star = form_of("seifert_star8.graph");
    CHECK(degree({2, 0, 0, 0, 0, 0, 0, -1}, star) == Rational(7, 8));
    CHECK(degree({0, 0, 0, 0, 0, 0, 0, -1}, star) == Rational(15, 8));
    CHECK(degree({-2, 0, 0, 0, 0, 0, 0, -3}, star) == Rational(-17, 8));
}

TEST_CASE("enumerate_b_n") {
    auto d4 = form_of("d4.graph");
    auto b0 = enumerate_b_n(d4, 0);
    CHECK(b0.size() == 81);
    CHECK(std::is_sorted(b0.begin(), b0.end()));
    CHECK(b0 == oracle::box(d4.weights(), 0));
    CHECK(enumerate_b_n(d4, 1) == oracle::box(d4.weights(), 1));

    IntersectionForm one(make_graph({-2}, {}));
    CHECK(enumerate_b_n(one, 0) == std::vector<CharVector>{{-2}, {0}, {2}});

    CHECK(initial_candidates(d4).size() == 16);
    CHECK(initial_candidate_count(form_of("seifert_star8.graph")) == 768);
}

TEST_CASE("same_spinc examples") {
    auto d4 = form_of("d4.graph");
    CHECK(same_spinc({0, 2, 0, 0}, {0, 2, 0, 0}, d4));
    CHECK_FALSE(same_spinc({0, 2, 0, 0}, {0, 0, 2, 0}, d4));
    CHECK(same_spinc(S_K1, S_K3, form_of("sigma357.graph")));
}

TEST_CASE("partition_spinc on good vectors") {
    auto d4 = form_of("d4.graph");
    auto g4 = good_vectors(d4);
    auto p4 = partition_spinc(g4.vectors, d4);
    CHECK(p4.size() == 4);
    for (auto& c : p4) CHECK(c.member_ids.size() == 1);

    auto s = form_of("sigma357.graph");
    auto ps = partition_spinc(good_vectors(s).vectors, s);
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].member_ids.size() == 4);

    auto star = form_of("seifert_star8.graph");
    auto pst = partition_spinc(good_vectors(star).vectors, star);
    CHECK(pst.size() == 128);
    CHECK(std::count_if(pst.begin(), pst.end(), [](auto& c) { return c.member_ids.size() == 2; }) == 10);
    CHECK(std::all_of(pst.begin(), pst.end(), [](auto& c) { return c.member_ids.size() <= 2; }));
}

TEST_CASE("property: degree(K + 2PD(v)) - degree(K) = <K,v> + m(v)") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = oracle::random_full_graph(rng, 7);
        IntersectionForm f(g);
        auto b = enumerate_b_n(f, 1);
        auto k = b[std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng)];
        int v = std::uniform_int_distribution<int>(0, g.size() - 1)(rng);
        CHECK(degree(add_2pd(k, v, f), f) - degree(k, f) == k[v] + g.weights[v]);
        CHECK(degree(k, f) == oracle::degree(k, f.matrix()));
    }
}

TEST_CASE("property: same_spinc is an equivalence relation and agrees with the key") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_full_graph(rng, 6);
        IntersectionForm f(g);
        auto b = enumerate_b_n(f, 0);
        std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
        auto x = b[pick(rng)], y = b[pick(rng)], z = b[pick(rng)];
        CHECK(same_spinc(x, x, f));
        CHECK(same_spinc(x, y, f) == same_spinc(y, x, f));
        if (same_spinc(x, y, f) && same_spinc(y, z, f)) CHECK(same_spinc(x, z, f));
        CHECK(same_spinc(x, y, f) == (f.spinc_key(x) == f.spinc_key(y)));
        int v = std::uniform_int_distribution<int>(0, g.size() - 1)(rng);
        CHECK(same_spinc(x, add_2pd(x, v, f), f));
    }
}

TEST_CASE("property: spin^c classes over B_0 number |det|") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_full_graph(rng, 6);
        IntersectionForm f(g);
        auto b = enumerate_b_n(f, 0);
        if (b.size() > 200000) continue;
        CHECK(partition_spinc(b, f).size() == static_cast<std::size_t>(abs(f.determinant())));
    }
}

TEST_CASE("serial and parallel kernels agree") {
    for (auto name : {"d4.graph", "sigma357.graph", "seifert_star8.graph"}) {
        auto f = form_of(name);
        auto a = initial_candidates(f);
        CHECK(a == serial::initial_candidates(f));
        CHECK(spinc_keys(a, f) == serial::spinc_keys(a, f));
    }
}

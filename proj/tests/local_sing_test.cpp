#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <curvelab/errors.hpp>
#include <curvelab/local_sing.hpp>

using namespace curvelab;

namespace {

// Independent oracle: count standard monomials u^a v^b under the monomial
// ideal generated by u^{p-1}, v^{q-1} and all u^a v^b with aq + bp >= pq.
int staircase_count(int p, int q) {
    int count = 0;
    for (int a = 0; a <= p + q; ++a) {
        for (int b = 0; b <= p + q; ++b) {
            bool in_ideal = a >= p - 1 || b >= q - 1;
            if (!in_ideal) {
                for (int ap = 0; ap <= a && !in_ideal; ++ap)
                    for (int bp = 0; bp <= b && !in_ideal; ++bp)
                        if (ap * q + bp * p >= p * q) in_ideal = true;
            }
            if (!in_ideal) ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("printed germ tables") {
    TpqSing g45 = tpq_invariants(4, 5);
    CHECK(g45.mu == 12);
    CHECK(g45.tau_es == 11);
    CHECK(g45.m_es == 1);

    TpqSing g56 = tpq_invariants(5, 6);
    CHECK(g56.mu == 20);
    CHECK(g56.tau_es == 17);
    CHECK(g56.m_es == 3);

    TpqSing g23 = tpq_invariants(2, 3);
    CHECK(g23.mu == 2);
    CHECK(g23.m_es == 0);
    CHECK(g23.is_simple());
}

TEST_CASE("named germs") {
    TpqSing a1 = named_type("A_1");
    CHECK(a1.p == 2);
    CHECK(a1.q == 2);
    CHECK(a1.mu == 1);

    TpqSing d4 = named_type("D4");
    CHECK(d4.p == 3);
    CHECK(d4.q == 3);
    CHECK(d4.mu == 4);

    TpqSing e6 = named_type("E6");
    CHECK(e6.p == 3);
    CHECK(e6.q == 4);
    CHECK(e6.mu == 6);
    CHECK(e6.m_es == 0);

    CHECK(named_type("T(4,5)").tau_es == 11);
    CHECK(named_type("A_35").mu == 35);

    CHECK_THROWS_AS(named_type("E7"), UnsupportedGermType);
    CHECK_THROWS_AS(named_type("E8"), UnsupportedGermType);
    CHECK_THROWS_AS(named_type("D5"), UnsupportedGermType);
    CHECK_THROWS_AS(named_type("T(3,2)"), UnsupportedGermType);
    CHECK_THROWS_AS(named_type("Q12"), UnsupportedGermType);
    CHECK_THROWS_AS(named_type(""), UnsupportedGermType);
}

TEST_CASE("germ list parsing") {
    auto l1 = parse_germ_list("A_2,A_2,T(4,5)");
    REQUIRE(l1.size() == 3);
    CHECK(l1[0].mu == 2);
    CHECK(l1[2].tau_es == 11);

    auto l2 = parse_germ_list("D4,D4,D4,A_1x7");
    REQUIRE(l2.size() == 10);
    int tau = 0;
    for (const auto& g : l2) tau += g.tau();
    CHECK(tau == 3 * 4 + 7);

    auto l3 = parse_germ_list("D4,D4,D4,A_1\xc3\x97""7");  // UTF-8 multiplication sign
    CHECK(l3.size() == 10);

    CHECK(parse_germ_list("").empty());
    CHECK(parse_germ_list("A_17").size() == 1);
    CHECK(parse_germ_list("A_17")[0].mu == 17);
}

TEST_CASE("staircase oracle over the full supported grid") {
    for (int p = 2; p <= 12; ++p)
        for (int q = p; q <= 12; ++q) {
            TpqSing g = tpq_invariants(p, q);
            CHECK(g.tau_es == staircase_count(p, q));
            CHECK(g.mu == (p - 1) * (q - 1));
            CHECK(g.m_es == g.mu - g.tau_es);
            CHECK(g.m_es >= 0);
        }
}

TEST_CASE("A-series is simple") {
    for (int n = 1; n <= 20; ++n) CHECK(named_type("A_" + std::to_string(n)).m_es == 0);
}

TEST_CASE("tau_es monotone in q") {
    for (int p = 2; p <= 8; ++p) {
        int prev = 0;
        for (int q = p; q <= 14; ++q) {
            TpqSing g = tpq_invariants(p, q);
            CHECK(g.tau_es >= prev);
            prev = g.tau_es;
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(tpq_invariants(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(tpq_invariants(3, 2), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "ratgenus/theta.hpp"

using namespace ratgenus;

namespace {

// Brute-force oracle: max_s { d(s+k) - d(s) } evaluated with plain rational
// scans over the table, no engine, no scaling.
struct BruteBound {
    Rational max_diff;
    std::vector<long long> maximizers;
};

BruteBound brute_bound(const std::vector<Rational>& d, long long k) {
    const long long p = static_cast<long long>(d.size());
    BruteBound out;
    bool first = true;
    for (long long s = 0; s < p; ++s) {
        Rational diff = d[static_cast<size_t>((s + k) % p)] - d[static_cast<size_t>(s)];
        if (first || diff > out.max_diff) {
            out.max_diff = diff;
            out.maximizers = {s};
            first = false;
        } else if (diff == out.max_diff) {
            out.maximizers.push_back(s);
        }
    }
    return out;
}

// closed-form table for L(p,1), built directly from the formula
std::vector<Rational> closed_form_table(long long p) {
    std::vector<Rational> d;
    for (long long i = 0; i < p; ++i) d.push_back(Rational((2 * i - p) * (2 * i - p) - p, 4 * p));
    return d;
}

}  // namespace

TEST_CASE("worked example: class 2 in L(5,1)") {
    CorrectionTerms d = d_all({5, 1});
    REQUIRE(d.values == std::vector<Rational>{Rational(1), Rational(1, 5), Rational(-1, 5),
                                              Rational(-1, 5), Rational(1, 5)});
    ThetaReport rep = theta_lower_bound(d, {2});
    CHECK(rep.raw_bound == Rational(1, 5));
    CHECK(rep.theta_lb == Rational(1, 5));
    CHECK(rep.maximizers == std::vector<long long>{3});
    CHECK_FALSE(rep.exact);
    CHECK_FALSE(rep.chi.has_value());
    CHECK_FALSE(rep.fibered.has_value());
    CHECK(rep.order_m == 5);
}

TEST_CASE("zero class is trivial") {
    CorrectionTerms d = d_all({7, 3});
    ThetaReport rep = theta_lower_bound(d, {0});
    CHECK(rep.raw_bound == Rational(-1));
    CHECK(rep.theta_lb == Rational(0));
    CHECK(rep.maximizers.size() == 7);  // every label attains d(s) - d(s) = 0
}

TEST_CASE("half class in L(100,1) reproduces the p/4-scale bound") {
    ThetaReport rep = theta_lower_bound(d_all({100, 1}), {50});
    CHECK(rep.raw_bound + Rational(1) == Rational(25));  // max difference k(p-k)/p
    CHECK(rep.raw_bound == Rational(24));
    CHECK(rep.theta_lb == Rational(24));
}

TEST_CASE("engine agrees with the brute-force oracle") {
    for (long long p = 1; p <= 40; ++p)
        for (long long q = (p == 1 ? 0 : 1); q < std::max<long long>(p, 1); ++q) {
            if (p > 1 && std::gcd(p, q) != 1) continue;
            CorrectionTerms d = d_all({p, q});
            ThetaEngine engine(d);
            for (long long k = 0; k < p; ++k) {
                BruteBound expect = brute_bound(d.values, k);
                auto got = engine.class_bound(k);
                CHECK(got.max_diff == expect.max_diff);
                CHECK(got.maximizers == expect.maximizers);
            }
            if (p == 1) break;
        }
}

TEST_CASE("L(p,1) bound closed form k(p-k)/p") {
    for (long long p = 1; p <= 120; ++p) {
        std::vector<Rational> table = closed_form_table(p);
        for (long long k = 0; k < p; ++k) {
            BruteBound b = brute_bound(table, k);
            CHECK(b.max_diff == Rational(k * (p - k), p));
        }
    }
}

TEST_CASE("raw bound is invariant under class conjugation k -> p-k") {
    for (long long p = 2; p <= 50; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CorrectionTerms d = d_all({p, q});
            ThetaEngine engine(d);
            for (long long k = 1; 2 * k <= p; ++k)
                CHECK(engine.class_bound(k).max_diff == engine.class_bound(p - k).max_diff);
        }
}

TEST_CASE("simple knot worked examples in L(5,1) and L(4,1)") {
    ThetaReport a = simple_knot_invariants(LensSpaceId{5, 1}, {1});
    CHECK(a.raw_bound + Rational(1) == Rational(4, 5));
    CHECK(a.order_m == 5);
    CHECK(a.chi == 1);
    CHECK(a.rational_norm == Rational(0));
    CHECK(a.theta_lb == Rational(0));
    CHECK(a.exact);
    CHECK_FALSE(a.degenerate);

    ThetaReport b = simple_knot_invariants(LensSpaceId{5, 1}, {2});
    CHECK(b.raw_bound + Rational(1) == Rational(6, 5));
    CHECK(b.order_m == 5);
    CHECK(b.chi == -1);
    CHECK(b.rational_norm == Rational(1, 10));
    CHECK(b.theta_lb == Rational(1, 5));
    CHECK(b.theta_lb == Rational(2) * *b.rational_norm);
    CHECK(b.fibered == true);
    CHECK(b.maximizers == std::vector<long long>{3});

    ThetaReport c = simple_knot_invariants(LensSpaceId{4, 1}, {2});
    CHECK(c.raw_bound + Rational(1) == Rational(1));
    CHECK(c.order_m == 2);
    CHECK(c.chi == 0);
    CHECK(c.rational_norm == Rational(0));
    CHECK(c.theta_lb == Rational(0));
}

TEST_CASE("zero class simple report is the degenerate disk case") {
    ThetaReport rep = simple_knot_invariants(LensSpaceId{6, 1}, {0});
    CHECK(rep.degenerate);
    CHECK(rep.exact);
    CHECK(rep.order_m == 1);
    CHECK(rep.chi == 1);
    CHECK(rep.theta_lb == Rational(0));
    CHECK(rep.rational_norm == Rational(0));
    CHECK_FALSE(rep.fibered.has_value());
}

TEST_CASE("fiberedness of simple knots") {
    CHECK(is_fibered_simple({2, 1}, {1}));
    CHECK(is_fibered_simple({5, 1}, {2}));
    CHECK_THROWS_AS(is_fibered_simple({5, 1}, {0}), DegenerateClassError);
    CHECK_THROWS_AS(is_fibered_simple({5, 1}, {5}), DegenerateClassError);
}

TEST_CASE("integrality gate and exactness dominance") {
    for (long long p = 2; p <= 60; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long long k = 0; k < p; ++k) {
                ThetaReport rep = simple_knot_invariants(LensSpaceId{p, q}, {k});  // must not throw
                REQUIRE(rep.chi.has_value());
                CHECK(*rep.chi <= 1);
                Rational twice_norm = Rational(2) * *rep.rational_norm;
                CHECK(twice_norm >= rep.theta_lb);
                if (*rep.chi <= 0) CHECK(twice_norm == rep.theta_lb);
            }
        }
}

TEST_CASE("generator class of L(p,1) bounds a disk") {
    for (long long p = 2; p <= 60; ++p) {
        ThetaReport rep = simple_knot_invariants(LensSpaceId{p, 1}, {1});
        CHECK(rep.chi == 1);
        CHECK(rep.theta_lb == Rational(0));
        CHECK(rep.fibered == true);
    }
}

TEST_CASE("class assignment configuration point") {
    // identity is the default; an explicit unit of 1 changes nothing
    ThetaReport a = simple_knot_invariants(LensSpaceId{7, 2}, {3});
    ThetaReport b = simple_knot_invariants(LensSpaceId{7, 2}, {3}, 1);
    CHECK(a.raw_bound == b.raw_bound);
    CHECK(a.chi == b.chi);
    // a non-unit multiplier is rejected, not silently remapped
    CHECK_THROWS_AS(simple_knot_invariants(LensSpaceId{6, 1}, {2}, 2), DomainError);
    // batch engine path matches the convenience path
    auto table = scaled_d_table(11, 3);
    REQUIRE(table != nullptr);
    ThetaEngine engine(table);
    for (long long k = 0; k < 11; ++k) {
        ThetaReport single = simple_knot_invariants(LensSpaceId{11, 3}, {k});
        ThetaReport batch = simple_knot_invariants(engine, {k});
        CHECK(single.raw_bound == batch.raw_bound);
        CHECK(single.chi == batch.chi);
        CHECK(single.maximizers == batch.maximizers);
    }
}

TEST_CASE("malformed tables are rejected") {
    CorrectionTerms bad;
    bad.p = 3;
    bad.values = {Rational(0), Rational(1)};
    CHECK_THROWS_AS(theta_lower_bound(bad, {1}), InvariantViolationError);
}

TEST_CASE("engine handles tables that do not fit the compact path") {
    // a synthetic table with a huge prime denominator forces the rational scan
    BigInt huge = BigInt::from_decimal("170141183460469231731687303715884105727");  // 2^127 - 1
    CorrectionTerms d;
    d.p = 4;
    d.values = {Rational(BigInt(1), huge), Rational(BigInt(3), huge), Rational(BigInt(-1), huge),
                Rational(BigInt(2), huge)};
    ThetaReport rep = theta_lower_bound(d, {1});
    // differences*huge: s=0: 2, s=1: -4, s=2: 3, s=3: -1 -> max 3/huge at s=2
    CHECK(rep.raw_bound == Rational(BigInt(3), huge) - Rational(1));
    CHECK(rep.maximizers == std::vector<long long>{2});
}

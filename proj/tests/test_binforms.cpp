#include <doctest.h>

#include <random>

#include "eislat/binforms.hpp"

using namespace eislat;

namespace {

BinaryForm monomial_form(size_t degree, size_t xpow, Rat c = Rat(1)) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[xpow] = c;
    return BinaryForm(degree, std::move(v));
}

}  // namespace

TEST_SUITE("binforms") {

TEST_CASE("discriminant form") {
    BinaryForm x4 = monomial_form(4, 4);   // X^4
    BinaryForm y6 = monomial_form(6, 0);   // Y^6
    BinaryForm d = discriminant_form(x4, y6);
    CHECK(d.degree == 12);
    CHECK(d.c[12] == Rat(1));
    CHECK(d.c[0] == Rat(1));
    for (size_t i = 1; i < 12; ++i) CHECK(d.c[i].is_zero());
    CHECK(multiplicity_profile(d) == MultiplicityProfile(12, 1));

    // zero f0: the profile of f1^2 doubles the multiplicities of f1
    BinaryForm zero4(4, std::vector<Rat>(5, Rat(0)));
    BinaryForm f1 = monomial_form(6, 2);  // X^2 Y^4
    BinaryForm d2 = discriminant_form(zero4, f1);
    CHECK(multiplicity_profile(d2) == MultiplicityProfile({8, 4}));

    // (XY)^2, (XY)^3: discriminant 2 (XY)^6, profile (6, 6)
    BinaryForm xy2 = monomial_form(4, 2);
    BinaryForm xy3 = monomial_form(6, 3);
    BinaryForm d3 = discriminant_form(xy2, xy3);
    CHECK(d3.c[6] == Rat(2));
    CHECK(multiplicity_profile(d3) == MultiplicityProfile({6, 6}));

    // the excluded 3D0 = 2D1 locus
    BinaryForm fa = monomial_form(4, 2, Rat(-1));  // -X^2 Y^2
    BinaryForm fb = monomial_form(6, 3);           // X^3 Y^3
    CHECK_THROWS_AS(discriminant_form(fa, fb), std::domain_error);
}

TEST_CASE("multiplicity profiles") {
    CHECK(multiplicity_profile(monomial_form(12, 6)) == MultiplicityProfile({6, 6}));
    CHECK(multiplicity_profile(monomial_form(12, 7)) == MultiplicityProfile({7, 5}));
    // X^12 + Y^12 is square-free
    std::vector<Rat> c(13, Rat(0));
    c[0] = Rat(1);
    c[12] = Rat(1);
    CHECK(multiplicity_profile(BinaryForm(12, c)) == MultiplicityProfile(12, 1));
    // (X - Y)^2 (X + 2Y): profile (2, 1)
    BinaryForm lin1(1, {Rat(-1), Rat(1)});
    BinaryForm lin2(1, {Rat(2), Rat(1)});
    CHECK(multiplicity_profile(lin1 * lin1 * lin2) == MultiplicityProfile({2, 1}));
    CHECK_THROWS_AS(multiplicity_profile(BinaryForm(3, std::vector<Rat>(4, Rat(0)))),
                    std::invalid_argument);
}

TEST_CASE("square-free decomposition") {
    // f = (x+1)(x-2)^2 x^3
    RatPoly a = {Rat(1), Rat(1)};
    RatPoly b = {Rat(-2), Rat(1)};
    RatPoly x = {Rat(0), Rat(1)};
    RatPoly f = poly_mul(poly_mul(a, poly_mul(b, b)), poly_mul(x, poly_mul(x, x)));
    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 3);
    CHECK(poly_deg(sq[0]) == 1);
    CHECK(poly_deg(sq[1]) == 1);
    CHECK(poly_deg(sq[2]) == 1);

    // random reassembly property: prod A_i^i has the same square-free parts
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int64_t> d(-3, 3);
    for (int t = 0; t < 100; ++t) {
        RatPoly p = {Rat(d(rng)), Rat(1)};
        int64_t qa = d(rng), qb = d(rng);
        if (qb == 0) qb = 1;
        RatPoly q = {Rat(qa), Rat(qb)};
        RatPoly f2 = poly_mul(p, poly_mul(q, q));
        auto s2 = squarefree_decomposition(f2);
        size_t total = 0;
        for (size_t i = 0; i < s2.size(); ++i) {
            size_t deg = poly_deg(s2[i]);
            if (deg != static_cast<size_t>(-1)) total += (i + 1) * deg;
        }
        CHECK(total == poly_deg(f2));
    }
}

TEST_CASE("divisor stability") {
    CHECK(divisor_stability(MultiplicityProfile(12, 1)) == DivisorStability::stable);
    CHECK(divisor_stability({6, 6}) == DivisorStability::minimal_strictly_semistable);
    CHECK(divisor_stability({7, 1, 1, 1, 1, 1}) == DivisorStability::unstable);
    CHECK(divisor_stability({6, 5, 1}) == DivisorStability::strictly_semistable);
    CHECK(divisor_stability({5, 5, 2}) == DivisorStability::stable);
    CHECK(divisor_stability({12}) == DivisorStability::unstable);
    CHECK_THROWS_AS(divisor_stability({3, 3}), std::invalid_argument);
}

TEST_CASE("pair stability") {
    BinaryForm x4 = monomial_form(4, 4), y6 = monomial_form(6, 0);
    CHECK(pair_stability(x4, y6) == PairStability::stable);
    CHECK(pair_stability(monomial_form(4, 2), monomial_form(6, 3)) ==
          PairStability::semistable_not_stable);
    // common zero at 0 of order min(9, 10) = 9 > 6
    CHECK(pair_stability(monomial_form(4, 3), monomial_form(6, 5)) == PairStability::unstable);
    // f0 = 0: order at a zero of f1 is 2 ord f1
    BinaryForm zero4(4, std::vector<Rat>(5, Rat(0)));
    CHECK(pair_stability(zero4, monomial_form(6, 4)) == PairStability::unstable);   // 2*4 = 8 > 6
    CHECK(pair_stability(zero4, monomial_form(6, 3)) ==
          PairStability::semistable_not_stable);                                    // 2*3 = 6
    BinaryForm zero6(6, std::vector<Rat>(7, Rat(0)));
    CHECK_THROWS_AS(pair_stability(zero4, zero6), std::invalid_argument);

    // stability against the discriminant divisor: the divisor class never
    // exceeds the pair class (unstable < semistable < stable)
    auto pair_rank = [](PairStability s) {
        return s == PairStability::stable ? 2 : (s == PairStability::semistable_not_stable ? 1 : 0);
    };
    auto div_rank = [](DivisorStability s) {
        return s == DivisorStability::stable ? 2 : (s == DivisorStability::unstable ? 0 : 1);
    };
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int64_t> d(-2, 2);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rat> c0(5), c1(7);
        for (auto& c : c0) c = Rat(d(rng));
        for (auto& c : c1) c = Rat(d(rng));
        BinaryForm f0(4, c0), f1(6, c1);
        if (f0.is_zero() && f1.is_zero()) continue;
        BinaryForm disc = f0.pow(3) + f1.pow(2);
        if (disc.is_zero()) continue;
        int pr = pair_rank(pair_stability(f0, f1));
        int dr = div_rank(divisor_stability(multiplicity_profile(disc)));
        CHECK(dr <= pr);
    }
}

TEST_CASE("boundary J-invariant") {
    CHECK(minimal_ss_j_invariant(Rat(0), Rat(1)) == std::make_pair<int64_t, int64_t>(0, 1));
    CHECK(minimal_ss_j_invariant(Rat(1), Rat(0)) == std::make_pair<int64_t, int64_t>(1, 1));
    CHECK(minimal_ss_j_invariant(Rat(-1), Rat(1)) == std::make_pair<int64_t, int64_t>(1, 0));
    CHECK(minimal_ss_j_invariant(Rat(2), Rat(1)) == std::make_pair<int64_t, int64_t>(8, 9));
    CHECK_THROWS_AS(minimal_ss_j_invariant(Rat(0), Rat(0)), std::invalid_argument);
}

}  // TEST_SUITE

#include <doctest.h>

#include <random>

#include "eislat/eisenstein.hpp"

using namespace eislat;

namespace {

// Independent oracle: multiply (a1 + b1 x)(a2 + b2 x) as polynomials and
// reduce by x^2 = x - 1. Never touches Eis::operator*.
Eis poly_mul_oracle(const Eis& x, const Eis& y) {
    int64_t c0 = x.a * y.a;
    int64_t c1 = x.a * y.b + x.b * y.a;
    int64_t c2 = x.b * y.b;
    return Eis{c0 - c2, c1 + c2};
}

}  // namespace

TEST_SUITE("eisenstein") {

TEST_CASE("multiplication follows the minimal polynomial") {
    CHECK(omega() * omega() == Eis{-1, 1});  // w^2 = w - 1
    CHECK(theta() * theta() == Eis{-3, 0});
    // (1+w)(1-w) = 2 - w, via the independent polynomial oracle
    Eis x{1, 1}, y{1, -1};
    CHECK(poly_mul_oracle(x, y) == Eis{2, -1});
    CHECK(x * y == Eis{2, -1});

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int64_t> d(-50, 50);
    for (int i = 0; i < 500; ++i) {
        Eis u{d(rng), d(rng)}, v{d(rng), d(rng)};
        CHECK(u * v == poly_mul_oracle(u, v));
        CHECK(conj(u * v) == conj(u) * conj(v));
        CHECK(norm(u * v) == norm(u) * norm(v));
    }
}

TEST_CASE("conjugation and norm") {
    CHECK(conj(omega()) == Eis{1, -1});
    CHECK(norm(theta()) == 3);
    CHECK(norm(Eis{1, 1}) == 3);  // a^2 + ab + b^2 at (1, 1)
    CHECK(conj(theta()) == -theta());
    CHECK(norm(Eis{0, 0}) == 0);
    CHECK(norm(Eis{-2, 1}) == 3);
}

TEST_CASE("units") {
    CHECK(units().size() == 6);
    CHECK(is_unit(omega()));
    CHECK(!is_unit(theta()));
    // closed under multiplication, and all are omega powers
    for (const Eis& u : units()) {
        CHECK(is_unit(u));
        for (const Eis& v : units()) {
            Eis w = u * v;
            bool found = false;
            for (const Eis& t : units()) found = found || t == w;
            CHECK(found);
        }
    }
    for (int k = 0; k < 6; ++k) CHECK(omega_pow(k) == units()[static_cast<size_t>(k)]);
    CHECK(omega_pow(-1) == conj(omega()));
}

TEST_CASE("reduction mod theta") {
    CHECK(reduce_mod_theta(theta()) == F3(0));
    CHECK(reduce_mod_theta(omega()) == F3(2));  // omega acts as -1
    CHECK(reduce_mod_theta(Eis{1, 1}) == F3(0));
    CHECK(reduce_mod_theta(Eis{3, 0}) == F3(0));  // 3 lies in theta*O

    // ring homomorphism, surjective onto the three residues
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int64_t> d(-30, 30);
    bool hit[3] = {false, false, false};
    for (int i = 0; i < 300; ++i) {
        Eis u{d(rng), d(rng)}, v{d(rng), d(rng)};
        CHECK(reduce_mod_theta(u * v) == reduce_mod_theta(u) * reduce_mod_theta(v));
        CHECK(reduce_mod_theta(u + v) == reduce_mod_theta(u) + reduce_mod_theta(v));
        hit[reduce_mod_theta(u).v] = true;
    }
    CHECK((hit[0] && hit[1] && hit[2]));

    // the unit group maps 3-to-1 onto the nonzero residues (kernel mu_3)
    int over[3] = {0, 0, 0};
    for (const Eis& u : units()) over[reduce_mod_theta(u).v]++;
    CHECK(over[0] == 0);
    CHECK(over[1] == 3);
    CHECK(over[2] == 3);
}

TEST_CASE("euclidean division and gcd") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int64_t> d(-40, 40);
    for (int i = 0; i < 1000; ++i) {
        Eis x{d(rng), d(rng)}, y{d(rng), d(rng)};
        if (y.is_zero()) continue;
        auto [q, r] = euclidean_divmod(x, y);
        CHECK(x == q * y + r);
        CHECK(norm(r) < norm(y));
    }
    CHECK_THROWS_AS(euclidean_divmod(Eis{1, 0}, Eis{0, 0}), std::domain_error);

    // gcd(3, theta) is theta up to a unit (canonical associate 1 + w)
    Eis g = gcd(Eis{3, 0}, theta());
    CHECK(g == canonical_associate(theta()));
    CHECK(norm(g) == 3);
    CHECK(gcd(Eis{2, 0}, omega()) == Eis{1, 0});

    // divmod contract on the worked pair
    auto [q, r] = euclidean_divmod(omega() - Eis{1}, omega());
    CHECK(omega() - Eis{1} == q * omega() + r);
    CHECK(norm(r) < 1);

    // gcd generates the ideal: both inputs divisible by it
    for (int i = 0; i < 200; ++i) {
        Eis a{d(rng), d(rng)}, b{d(rng), d(rng)};
        if (a.is_zero() && b.is_zero()) continue;
        Eis g2 = gcd(a, b);
        CHECK(euclidean_divmod(a, g2).second.is_zero());
        CHECK(euclidean_divmod(b, g2).second.is_zero());
    }
}

TEST_CASE("canonical associates pick the 0..60 degree sector") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int64_t> d(-20, 20);
    for (int i = 0; i < 300; ++i) {
        Eis x{d(rng), d(rng)};
        if (x.is_zero()) continue;
        Eis c = canonical_associate(x);
        CHECK(c.a > 0);
        CHECK(c.b >= 0);
        for (const Eis& u : units()) CHECK(canonical_associate(u * x) == c);
    }
}

TEST_CASE("exact division") {
    CHECK(exact_div(Eis{-3, 0}, theta()) == theta());
    CHECK_THROWS_AS(exact_div(Eis{1, 0}, Eis{2, 0}), std::domain_error);
    CHECK_THROWS_AS(exact_div(Eis{1, 0}, Eis{0, 0}), std::domain_error);
}

TEST_CASE("rational Eisenstein scalars") {
    EisQ x{Rat(1, 2), Rat(1, 3)};
    CHECK(x * inv(x) == EisQ(Eis{1}));
    CHECK(conj(conj(x)) == x);
    CHECK(norm_q(EisQ(theta())) == Rat(3));
    CHECK_THROWS_AS(inv(EisQ()), std::domain_error);
}

}  // TEST_SUITE

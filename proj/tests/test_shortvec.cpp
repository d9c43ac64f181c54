#include <doctest.h>

#include <set>

#include "eislat/shortvec.hpp"

using namespace eislat;

namespace {

// Brute-force oracle: enumerate every coordinate box vector and count the
// ones of the requested norm. Only usable for small ranks.
std::set<std::vector<int64_t>> box_oracle(const LatticePtr& L, int64_t n, int64_t box) {
    std::set<std::vector<int64_t>> out;
    size_t dim = 2 * L->rank;
    std::vector<int64_t> c(dim, -box);
    while (true) {
        LatticeVector v = from_z_coords(L, c);
        if (L->product(v, v) == Eis{n}) out.insert(c);
        size_t i = 0;
        while (i < dim && c[i] == box) c[i++] = -box;
        if (i == dim) break;
        ++c[i];
    }
    return out;
}

}  // namespace

TEST_SUITE("shortvec") {

TEST_CASE("counts in the definite chain lattices") {
    CHECK(vectors_of_norm(lambda_lattice(1), 3).size() == 6);
    CHECK(vectors_of_norm(lambda_lattice(2), 3).size() == 24);
    CHECK(vectors_of_norm(lambda_lattice(3), 3).size() == 72);
    CHECK(vectors_of_norm(lambda_lattice(4), 3).size() == 240);
    CHECK(vectors_of_norm(lambda_lattice(4), 6).size() == 2160);
}

TEST_CASE("enumeration agrees with the box oracle on small ranks") {
    for (size_t k = 1; k <= 3; ++k) {
        LatticePtr L = lambda_lattice(k);
        auto vs = vectors_of_norm(L, 3);
        auto oracle = box_oracle(L, 3, 4);
        CHECK(vs.size() == oracle.size());
        for (const auto& v : vs) CHECK(oracle.count(z_coords(v)) == 1);
    }
    // norm-6 vectors of the rank-2 lattice as well
    LatticePtr l2 = lambda_lattice(2);
    auto v6 = vectors_of_norm(l2, 6);
    auto o6 = box_oracle(l2, 6, 4);
    CHECK(v6.size() == o6.size());
}

TEST_CASE("output contract") {
    LatticePtr L = lambda_lattice(4);
    auto vs = vectors_of_norm(L, 3);
    // norms exact, sorted canonically, closed under units and negation
    std::set<std::vector<int64_t>> have;
    for (const auto& v : vs) {
        CHECK(L->product(v, v) == Eis{3});
        have.insert(z_coords(v));
    }
    CHECK(have.size() == vs.size());
    for (size_t i = 1; i < vs.size(); ++i) CHECK(vs[i - 1] < vs[i]);
    for (const auto& v : vs) {
        CHECK(have.count(z_coords(-v)) == 1);
        for (const Eis& u : units()) CHECK(have.count(z_coords(u * v)) == 1);
    }
    // determinism
    auto vs2 = vectors_of_norm(L, 3);
    CHECK(vs == vs2);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(vectors_of_norm(lambda_lattice(2), 4), std::invalid_argument);
    CHECK_THROWS_AS(vectors_of_norm(lambda_lattice(2), -3), std::invalid_argument);
    CHECK_THROWS_AS(vectors_of_norm(lambda_lattice(10), 3), std::invalid_argument);
    CHECK_THROWS_AS(vectors_of_norm(hyperbolic_lattice(), 3), std::invalid_argument);
}

TEST_CASE("unit orbit representatives") {
    LatticePtr L = lambda_lattice(4);
    auto v3 = vectors_of_norm(L, 3);
    auto reps3 = unit_orbit_representatives(v3);
    CHECK(reps3.size() == 40);
    auto v6 = vectors_of_norm(L, 6);
    CHECK(unit_orbit_representatives(v6).size() == 360);
    CHECK(unit_orbit_representatives(vectors_of_norm(lambda_lattice(1), 3)).size() == 1);

    // each representative is the lexicographic minimum of its orbit
    for (const auto& r : reps3)
        for (const Eis& u : units()) CHECK(!(u * r < r));

    // a non-closed input is rejected
    std::vector<LatticeVector> partial(v3.begin(), v3.begin() + 5);
    CHECK_THROWS_AS(unit_orbit_representatives(partial), std::invalid_argument);
}

}  // TEST_SUITE

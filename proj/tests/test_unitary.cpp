#include <doctest.h>

#include <algorithm>

#include "eislat/shortvec.hpp"
#include "eislat/unitary.hpp"

using namespace eislat;

TEST_SUITE("unitary") {

TEST_CASE("triflections") {
    LatticePtr l2 = lambda_lattice(2);
    LatticeVector r1 = l2->basis_vector(0), r2 = l2->basis_vector(1);
    UnitaryMap s = triflection(l2, r1);

    // s_r multiplies r by -omega and fixes the mirror
    CHECK(s(r1) == (-omega()) * r1);
    LatticeVector perp = l2->vector({omega_pow(2), Eis{1}});  // psi(perp, r1+r2) .. not needed
    // a vector perpendicular to r1: solve psi(x, r1) = 0 with x = a r1 + b r2
    LatticeVector x = l2->vector({theta(), Eis{-3, 0}});
    if (l2->product(x, r1).is_zero()) CHECK(s(x) == x);

    // s_{r1}(r2) = r2 - omega^{-1} phi(r2, r1) r1, and the map has order 3
    Eis coef = conj(omega()) * l2->skew_product(r2, r1);
    CHECK(s(r2) == r2 - coef * r1);
    CHECK(s.power(3).is_identity());
    CHECK(!s.power(1).is_identity());

    // triflections only depend on the unit orbit of the mirror vector
    for (const Eis& u : units()) CHECK(triflection(l2, u * r1) == s);

    CHECK_THROWS_AS(triflection(l2, r1 + r2), std::invalid_argument);  // a 6-vector
}

TEST_CASE("triflection fixes the orthogonal complement pointwise") {
    LatticePtr l4 = lambda_lattice(4);
    LatticeVector r = l4->basis_vector(1);
    UnitaryMap s = triflection(l4, r);
    for (const auto& v : orthogonal_complement(l4, {r})) CHECK(s(v) == v);
}

TEST_CASE("heisenberg transvections") {
    LatticePtr L = big_lambda_lattice();
    LatticeVector e = L->basis_vector(8);
    LatticeVector v = L->basis_vector(0) - L->basis_vector(1);  // psi(v,v) = 6
    CHECK(L->product(v, v) == Eis{6});
    UnitaryMap t = heisenberg_transvection(L, e, v);  // unitarity checked inside
    CHECK(t(e) == e);
    // action on e-perp: x -> x + phi(x, v) e
    LatticeVector x = L->basis_vector(2);
    LatticeVector expect = x;
    Eis c = L->skew_product(x, v);
    std::vector<Eis> add(10);
    add[8] = c;
    expect = expect + L->vector(add);
    CHECK(t(x) == expect);

    CHECK(heisenberg_transvection(L, e, L->zero_vector()).is_identity());

    // preconditions
    LatticeVector r3 = L->basis_vector(2);
    CHECK_THROWS_AS(heisenberg_transvection(L, r3, v), std::invalid_argument);  // base not isotropic
    CHECK_THROWS_AS(heisenberg_transvection(L, e, L->basis_vector(0)), std::invalid_argument);  // psi(v,v)=3
    LatticeVector f = L->basis_vector(9);
    CHECK_THROWS_AS(heisenberg_transvection(L, e, f), std::invalid_argument);  // not perpendicular

    // commutators are central: they fix e and shift everything along e only
    LatticeVector u = L->vector({Eis{1}, Eis{0}, Eis{0, 1}, Eis{1}, Eis{0}, Eis{0}, Eis{0}, Eis{0},
                                 Eis{0}, Eis{0}});
    REQUIRE(L->product(u, u).a % 6 == 0);
    UnitaryMap tu = heisenberg_transvection(L, e, u);
    UnitaryMap comm = tu * t * tu.inverse() * t.inverse();
    for (size_t j = 0; j < 10; ++j)
        for (size_t i = 0; i < 10; ++i) {
            Eis expect_ij = (i == j) ? Eis{1} : Eis{0};
            if (i != 8) CHECK(comm.m(i, j) == expect_ij);
        }
}

TEST_CASE("mod-theta reduction") {
    LatticePtr l4 = lambda_lattice(4);
    CHECK(reduce_map_mod_theta(identity_map(l4)).key() ==
          reduce_map_mod_theta(scalar_map(l4, omega_pow(2))).key());  // w^2 = 1 mod theta
    // omega * id reduces to minus the identity
    Mat<F3> mi(4, 4);
    for (size_t i = 0; i < 4; ++i) mi(i, i) = F3(2);
    CHECK(reduce_map_mod_theta(scalar_map(l4, omega())).m == mi);

    // homomorphism, and triflections reduce to order-3 transvections
    LatticeVector r1 = l4->basis_vector(0), r2 = l4->basis_vector(1);
    UnitaryMap s1 = triflection(l4, r1), s2 = triflection(l4, r2);
    SymplecticMapF3 a = reduce_map_mod_theta(s1), b = reduce_map_mod_theta(s2);
    SymplecticMapF3 ab = reduce_map_mod_theta(s1 * s2);
    CHECK((a.m * b.m) == ab.m);
    Mat<F3> id(4, 4);
    for (size_t i = 0; i < 4; ++i) id(i, i) = F3(1);
    CHECK(a.m * a.m * a.m == id);
    CHECK(a.m != id);
}

TEST_CASE("group generation on the rank-1 lattice") {
    LatticePtr l1 = lambda_lattice(1);
    std::vector<UnitaryMap> gens;
    for (const auto& r : unit_orbit_representatives(vectors_of_norm(l1, 3)))
        gens.push_back(triflection(l1, r));
    gens.push_back(scalar_map(l1, omega()));
    FiniteGroup g = generate_group(gens, 100);
    CHECK(g.order() == 6);  // the full unit group

    auto orb = orbit(gens, l1->basis_vector(0), 100);
    CHECK(orb.size() == 6);
    CHECK(stabilizer_order(g, gens, l1->basis_vector(0)) == 1);
}

TEST_CASE("group generation on the rank-2 lattice") {
    // |U(Lambda^2)| = 3 * |Sp(2, F3)| = 3 * 24 = 72, by the same scalar-kernel
    // counting as in rank 4.
    LatticePtr l2 = lambda_lattice(2);
    std::vector<UnitaryMap> gens;
    for (const auto& r : unit_orbit_representatives(vectors_of_norm(l2, 3)))
        gens.push_back(triflection(l2, r));
    gens.push_back(scalar_map(l2, omega()));
    FiniteGroup g = generate_group(gens, 1000);
    CHECK(g.order() == 72);
    auto orb = orbit(gens, l2->basis_vector(0), 1000);
    CHECK(orb.size() == 24);  // transitive on the 24 norm-3 vectors
    CHECK(g.order() % orb.size() == 0);
}

TEST_CASE("group closure is deterministic") {
    LatticePtr l2 = lambda_lattice(2);
    std::vector<UnitaryMap> gens;
    for (const auto& r : unit_orbit_representatives(vectors_of_norm(l2, 3)))
        gens.push_back(triflection(l2, r));
    gens.push_back(scalar_map(l2, omega()));
    FiniteGroup a = generate_group(gens, 1000);
    std::reverse(gens.begin(), gens.end());  // input order must not matter
    FiniteGroup b = generate_group(gens, 1000);
    REQUIRE(a.order() == b.order());
    for (size_t i = 0; i < a.order(); ++i) CHECK(a.elements[i] == b.elements[i]);
}

TEST_CASE("cap is enforced") {
    LatticePtr l2 = lambda_lattice(2);
    std::vector<UnitaryMap> gens;
    for (const auto& r : unit_orbit_representatives(vectors_of_norm(l2, 3)))
        gens.push_back(triflection(l2, r));
    CHECK_THROWS_AS(generate_group(gens, 10), std::runtime_error);
}

TEST_CASE("unitary map validation") {
    LatticePtr l2 = lambda_lattice(2);
    EMat notiso = EMat::identity(2);
    notiso(0, 0) = Eis{2};
    CHECK_THROWS_AS(UnitaryMap(l2, notiso), std::invalid_argument);
    UnitaryMap s = triflection(l2, l2->basis_vector(0));
    CHECK((s * s.inverse()).is_identity());
}

}  // TEST_SUITE

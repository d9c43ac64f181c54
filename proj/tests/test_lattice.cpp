#include <doctest.h>

#include "eislat/lattice.hpp"
#include "eislat/shortvec.hpp"

using namespace eislat;

TEST_SUITE("lattice") {

TEST_CASE("standard grams") {
    CHECK(lambda_lattice(1)->gram(0, 0) == Eis{3});
    LatticePtr h = hyperbolic_lattice();
    CHECK(h->gram(0, 0).is_zero());
    CHECK(h->gram(0, 1) == theta());
    CHECK(h->gram(1, 0) == -theta());
    LatticePtr l2 = lambda_lattice(2);
    CHECK(l2->gram(0, 1) == theta());
    CHECK(l2->gram(1, 0) == conj(theta()));
    CHECK_THROWS_AS(standard_lattice("nonsense"), std::invalid_argument);
    CHECK(standard_lattice("H")->rank == 2);
    CHECK(standard_lattice("Lambda")->rank == 10);
    CHECK(standard_lattice("lambda7")->rank == 7);
}

TEST_CASE("hermitian products") {
    LatticePtr l2 = lambda_lattice(2);
    LatticeVector r1 = l2->basis_vector(0), r2 = l2->basis_vector(1);
    CHECK(l2->product(r1, r2) == theta());
    CHECK(l2->product(r1, r1) == Eis{3});
    CHECK(l2->product(r2, r1) == conj(theta()));
    LatticePtr h = hyperbolic_lattice();
    CHECK(h->product(h->basis_vector(0), h->basis_vector(1)) == theta());

    // sesquilinearity and conjugate symmetry
    LatticeVector x = l2->vector({Eis{1, 2}, Eis{-1, 1}});
    LatticeVector y = l2->vector({Eis{0, 1}, Eis{2, -1}});
    CHECK(l2->product(omega() * x, y) == omega() * l2->product(x, y));
    CHECK(l2->product(x, omega() * y) == conj(omega()) * l2->product(x, y));
    CHECK(l2->product(y, x) == conj(l2->product(x, y)));
    // psi(x, x) is always an integer multiple of 3
    Eis n = l2->product(x, x);
    CHECK(n.b == 0);
    CHECK(n.a % 3 == 0);

    // cross-lattice products are a type error
    LatticePtr l2b = lambda_lattice(3);
    CHECK_THROWS_AS(l2->product(x, l2b->basis_vector(0)), std::invalid_argument);
}

TEST_CASE("underlying integral forms") {
    // Lambda^1 -> A2: rank 2, determinant 3, even, minimum 2
    IMat a2 = lambda_lattice(1)->underlying_integral_form();
    CHECK(a2.rows == 2);
    CHECK(a2(0, 0) == 2);
    CHECK(a2(1, 1) == 2);
    CHECK(a2(0, 0) * a2(1, 1) - a2(0, 1) * a2(1, 0) == 3);
    CHECK(vectors_of_norm(lambda_lattice(1), 3).size() == 6);

    // Lambda^4 -> E8: even, determinant 1
    IMat e8 = lambda_lattice(4)->underlying_integral_form();
    CHECK(e8.rows == 8);
    for (size_t i = 0; i < 8; ++i) CHECK(e8(i, i) % 2 == 0);
    EMat e8e(8, 8);
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) e8e(i, j) = Eis{e8(i, j)};
    CHECK(det_eis(e8e) == Eis{1});

    // H -> even unimodular of rank 4
    IMat hu = hyperbolic_lattice()->underlying_integral_form();
    CHECK(hu.rows == 4);
    for (size_t i = 0; i < 4; ++i) CHECK(hu(i, i) % 2 == 0);
    EMat hue(4, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) hue(i, j) = Eis{hu(i, j)};
    Eis dh = det_eis(hue);
    CHECK(norm(dh) == 1);

    // (x.x) = (2/3) psi(x,x)
    LatticePtr l3 = lambda_lattice(3);
    LatticeVector x = l3->vector({Eis{1, -1}, Eis{2, 0}, Eis{0, 1}});
    IMat q = l3->underlying_integral_form();
    std::vector<int64_t> zc = z_coords(x);
    int64_t qx = 0;
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) qx += zc[i] * q(i, j) * zc[j];
    Eis px = l3->product(x, x);
    CHECK(3 * qx == 2 * px.a);
}

TEST_CASE("signatures") {
    CHECK(lambda_lattice(4)->signature() == Inertia{4, 0, 0});
    CHECK(lambda_lattice(10)->signature() == Inertia{9, 1, 0});
    CHECK(lambda_lattice(5)->signature() == Inertia{4, 0, 1});
    CHECK(hyperbolic_lattice()->signature() == Inertia{1, 1, 0});
    CHECK(big_lambda_lattice()->signature() == Inertia{9, 1, 0});
    CHECK(lambda_lattice(4)->is_positive_definite());
    CHECK(!lambda_lattice(10)->is_positive_definite());
}

TEST_CASE("discriminants and the minor recurrence") {
    CHECK(lambda_lattice(2)->discriminant() == 6);
    EMat d18(2, 2);
    d18(0, 0) = Eis{6};
    d18(1, 1) = Eis{3};
    CHECK(HermitianLattice::create(d18)->discriminant() == 18);
    CHECK(lambda_lattice(4)->discriminant() == 9);

    // d_k = 3 d_{k-1} - 3 d_{k-2} for the chain lattices, k <= 12
    int64_t d1 = 3, d2 = 6;
    CHECK(lambda_lattice(1)->discriminant() == d1);
    CHECK(lambda_lattice(2)->discriminant() == d2);
    for (size_t k = 3; k <= 12; ++k) {
        int64_t dk = 3 * d2 - 3 * d1;
        CHECK(lambda_lattice(k)->discriminant() == dk);
        d1 = d2;
        d2 = dk;
    }
    // the values used by the complement comparisons
    CHECK(lambda_lattice(6)->discriminant() == -27);
    CHECK(lambda_lattice(7)->discriminant() == -81);
    CHECK(lambda_lattice(8)->discriminant() == -162);
    CHECK(lambda_lattice(10)->discriminant() == -243);
    CHECK(big_lambda_lattice()->discriminant() == -243);

    // nondegenerate lattices have sign(disc) = (-1)^q
    for (size_t k = 1; k <= 12; ++k) {
        LatticePtr L = lambda_lattice(k);
        Inertia s = L->signature();
        if (s.z != 0) continue;  // k = 5 is degenerate
        int64_t d = L->discriminant();
        CHECK((d > 0) == (s.q % 2 == 0));
    }
}

TEST_CASE("orthogonal complements") {
    LatticePtr l2 = lambda_lattice(2);
    LatticeVector z = l2->basis_vector(0) + l2->basis_vector(1);
    auto comp = orthogonal_complement(l2, {z});
    REQUIRE(comp.size() == 1);
    LatticeVector w = l2->vector({omega_pow(2), Eis{1}});
    CHECK(in_span(comp, w));

    LatticePtr h = hyperbolic_lattice();
    auto compe = orthogonal_complement(h, {h->basis_vector(0)});
    REQUIRE(compe.size() == 1);
    CHECK(in_span(compe, h->basis_vector(0)));

    // complement of r_1..r_{k-1} in Lambda^10 contains r_{k+1}..r_10
    LatticePtr l10 = lambda_lattice(10);
    for (size_t k = 2; k <= 4; ++k) {
        std::vector<LatticeVector> s;
        for (size_t i = 0; i + 1 < k; ++i) s.push_back(l10->basis_vector(i));
        auto c = orthogonal_complement(l10, s);
        for (size_t i = k; i < 10; ++i) CHECK(in_span(c, l10->basis_vector(i)));
    }

    // complement is perpendicular and saturated
    LatticePtr l4 = lambda_lattice(4);
    LatticeVector z4 = l4->basis_vector(0) + l4->basis_vector(1);
    auto c4 = orthogonal_complement(l4, {z4});
    CHECK(c4.size() == 3);
    for (const auto& v : c4) CHECK(l4->product(v, z4).is_zero());
    CHECK(is_primitive(l4, c4));
}

TEST_CASE("primitivity and saturation") {
    LatticePtr l2 = lambda_lattice(2);
    LatticeVector z = l2->basis_vector(0) + l2->basis_vector(1);
    LatticeVector w = l2->vector({omega_pow(2), Eis{1}});
    CHECK(!is_primitive(l2, {z, w}));
    auto sat = saturation(l2, {z, w});
    CHECK(sat.size() == 2);
    CHECK(span_discriminant(sat) == 6);  // saturation is the full rank-2 chain lattice

    LatticePtr h = hyperbolic_lattice();
    CHECK(is_primitive(h, {h->basis_vector(0)}));

    // span{z_o, r_4'} in the frame lattice is primitive of type delta_18
    LatticePtr L = big_lambda_lattice();
    std::vector<Eis> zc(10);
    zc[0] = Eis{1};
    zc[1] = Eis{1};
    LatticeVector zo = L->vector(zc);
    LatticeVector r4p = L->basis_vector(3);
    CHECK(is_primitive(L, {zo, r4p}));
    CHECK(span_discriminant({zo, r4p}) == 18);
}

TEST_CASE("basis identification of the rank-10 frame") {
    BigLambdaBasis b = big_lambda_basis();
    REQUIRE(b.images.size() == 10);
    // the defining products of the solver vector s
    for (size_t i = 0; i < 3; ++i)
        CHECK(b.frame->product(b.s, b.frame->basis_vector(4 + i)).is_zero());
    CHECK(b.frame->product(b.s, b.frame->basis_vector(7)) == theta());
    // the images carry the chain Gram exactly
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j)
            CHECK(b.frame->product(b.images[i], b.images[j]) == b.lambda10->gram(i, j));
    // and they span the frame lattice (unimodular change of basis)
    CHECK(is_primitive(b.frame, b.images));
    CHECK(span_rank(b.images) == 10);
}

TEST_CASE("gram validation") {
    EMat bad(1, 1);
    bad(0, 0) = Eis{1};  // not divisible by 3
    CHECK_THROWS_AS(HermitianLattice::create(bad), std::invalid_argument);
    EMat bad2(2, 2);
    bad2(0, 0) = Eis{3};
    bad2(1, 1) = Eis{3};
    bad2(0, 1) = theta();
    bad2(1, 0) = theta();  // not the conjugate
    CHECK_THROWS_AS(HermitianLattice::create(bad2), std::invalid_argument);
}

}  // TEST_SUITE

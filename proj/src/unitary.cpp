#include "eislat/unitary.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace eislat {

UnitaryMap::UnitaryMap(LatticePtr l, EMat mat) : lat(std::move(l)), m(std::move(mat)) {
    if (!lat || m.rows != lat->rank || m.cols != lat->rank)
        throw std::invalid_argument("unitary map shape mismatch");
    // psi(Ux, Uy) = psi(x, y) with psi linear in the first argument reads
    // U^T G conj(U) = G on Gram matrices.
    if (m.transposed() * lat->gram * conj_entries(m) != lat->gram)
        throw std::invalid_argument("matrix does not preserve the Hermitian form");
}

LatticeVector UnitaryMap::operator()(const LatticeVector& x) const {
    if (x.lat->gram != lat->gram) throw std::invalid_argument("vector bound to a different lattice");
    return lat->vector(m.apply(x.c));
}

UnitaryMap operator*(const UnitaryMap& x, const UnitaryMap& y) {
    if (x.lat->gram != y.lat->gram) throw std::invalid_argument("maps on different lattices");
    return UnitaryMap(x.lat, x.m * y.m);
}

UnitaryMap UnitaryMap::inverse() const {
    // det is a unit; inverse = conj(det) * adjugate.
    size_t n = m.rows;
    Eis det = det_eis(m);
    if (!is_unit(det)) throw std::logic_error("isometry with non-unit determinant");
    EMat adj(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            EMat minor(n - 1, n - 1);
            for (size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc) = m(r, c);
                    ++cc;
                }
                ++rr;
            }
            Eis cof = det_eis(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    EMat inv(n, n);
    Eis dbar = conj(det);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = dbar * adj(i, j);
    return UnitaryMap(lat, std::move(inv));
}

UnitaryMap UnitaryMap::power(uint64_t e) const { return UnitaryMap(lat, mat_pow(m, e)); }

bool UnitaryMap::is_identity() const { return m == EMat::identity(m.rows); }

bool operator<(const UnitaryMap& x, const UnitaryMap& y) {
    for (size_t i = 0; i < x.m.d.size() && i < y.m.d.size(); ++i) {
        if (x.m.d[i].a != y.m.d[i].a) return x.m.d[i].a < y.m.d[i].a;
        if (x.m.d[i].b != y.m.d[i].b) return x.m.d[i].b < y.m.d[i].b;
    }
    return x.m.d.size() < y.m.d.size();
}

UnitaryMap identity_map(const LatticePtr& L) { return UnitaryMap(L, EMat::identity(L->rank)); }

UnitaryMap scalar_map(const LatticePtr& L, const Eis& u) {
    if (!is_unit(u)) throw std::invalid_argument("scalar isometry needs a unit");
    EMat m(L->rank, L->rank);
    for (size_t i = 0; i < L->rank; ++i) m(i, i) = u;
    return UnitaryMap(L, std::move(m));
}

UnitaryMap triflection(const LatticePtr& L, const LatticeVector& r) {
    if (L->product(r, r) != Eis{3}) throw std::invalid_argument("triflection needs a 3-vector");
    size_t n = L->rank;
    EMat m(n, n);
    Eis winv = conj(omega());
    for (size_t j = 0; j < n; ++j) {
        LatticeVector bj = L->basis_vector(j);
        Eis coef = winv * L->skew_product(bj, r);
        for (size_t i = 0; i < n; ++i) {
            Eis v = (i == j) ? Eis{1} : Eis{0};
            m(i, j) = v - coef * r.c[i];
        }
    }
    return UnitaryMap(L, std::move(m));
}

UnitaryMap heisenberg_transvection(const LatticePtr& L, const LatticeVector& e,
                                   const LatticeVector& v) {
    if (!L->product(e, e).is_zero()) throw std::invalid_argument("transvection base must be isotropic");
    if (!L->product(e, v).is_zero()) throw std::invalid_argument("transvection parameter must be perpendicular to e");
    Eis nv = L->product(v, v);
    if (nv.b != 0 || nv.a % 6 != 0) throw std::invalid_argument("transvection parameter needs psi(v,v) in 6Z");
    Eis c = exact_div(L->skew_product(v, v), Eis{2});
    size_t n = L->rank;
    EMat m(n, n);
    for (size_t j = 0; j < n; ++j) {
        LatticeVector bj = L->basis_vector(j);
        Eis pe = L->skew_product(bj, e);
        Eis pv = L->skew_product(bj, v);
        for (size_t i = 0; i < n; ++i) {
            Eis val = (i == j) ? Eis{1} : Eis{0};
            val += pe * v.c[i] + (pv + c * pe) * e.c[i];
            m(i, j) = val;
        }
    }
    return UnitaryMap(L, std::move(m));  // constructor verifies unitarity
}

EQMat heisenberg_transvection_q(const LatticePtr& L, const std::vector<EisQ>& e,
                                const std::vector<EisQ>& v) {
    size_t n = L->rank;
    EQMat g(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g(i, j) = EisQ(L->gram(i, j));
    auto psi = [&](const std::vector<EisQ>& x, const std::vector<EisQ>& y) {
        EisQ acc;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) acc += x[i] * g(i, j) * conj(y[j]);
        return acc;
    };
    EisQ thq = EisQ(theta());
    auto phi = [&](const std::vector<EisQ>& x, const std::vector<EisQ>& y) {
        EisQ p = thq * psi(x, y);
        return EisQ{p.a / Rat(3), p.b / Rat(3)};
    };
    if (!psi(e, e).is_zero() || !psi(e, v).is_zero())
        throw std::invalid_argument("transvection preconditions violated");
    EisQ half{Rat(1, 2), Rat(0)};
    EisQ c = half * phi(v, v);
    EQMat m(n, n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<EisQ> bj(n);
        bj[j] = EisQ(Eis{1});
        EisQ pe = phi(bj, e);
        EisQ pv = phi(bj, v);
        for (size_t i = 0; i < n; ++i) {
            EisQ val = (i == j) ? EisQ(Eis{1}) : EisQ();
            val += pe * v[i] + (pv + c * pe) * e[i];
            m(i, j) = val;
        }
    }
    return m;
}

uint32_t SymplecticMapF3::key() const {
    uint32_t k = 0;
    for (size_t i = 0; i < 16; ++i) k |= static_cast<uint32_t>(m.d[i].v) << (2 * i);
    return k;
}

static Mat<F3> symplectic_gram_f3(const LatticePtr& L) {
    size_t n = L->rank;
    Mat<F3> s(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Eis th = theta();
            Eis p = th * L->gram(i, j);
            // phi entry = theta * psi / 3
            s(i, j) = reduce_mod_theta(Eis{p.a / 3, p.b / 3});
        }
    return s;
}

SymplecticMapF3 reduce_map_mod_theta(const UnitaryMap& u) {
    if (u.lat->rank != 4) throw std::invalid_argument("mod-theta reduction is defined on rank-4 lattices here");
    Mat<F3> m(4, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) m(i, j) = reduce_mod_theta(u.m(i, j));
    Mat<F3> s = symplectic_gram_f3(u.lat);
    Mat<F3> mt(4, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) mt(i, j) = m(j, i);
    if (mt * s * m != s) throw std::logic_error("reduction does not preserve the symplectic form");
    return SymplecticMapF3{std::move(m)};
}

namespace {

struct MatKey {
    std::vector<int16_t> v;
    bool operator==(const MatKey& o) const { return v == o.v; }
};

struct MatKeyHash {
    size_t operator()(const MatKey& k) const {
        size_t h = 1469598103934665603ull;
        for (int16_t x : k.v) {
            h ^= static_cast<size_t>(static_cast<uint16_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

MatKey key_of(const EMat& m) {
    MatKey k;
    k.v.reserve(2 * m.d.size());
    for (const Eis& e : m.d) {
        if (e.a < INT16_MIN || e.a > INT16_MAX || e.b < INT16_MIN || e.b > INT16_MAX)
            throw std::overflow_error("group element entry out of the expected range");
        k.v.push_back(static_cast<int16_t>(e.a));
        k.v.push_back(static_cast<int16_t>(e.b));
    }
    return k;
}

}  // namespace

FiniteGroup generate_group(std::vector<UnitaryMap> generators, size_t cap) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    for (const auto& g : generators)
        if (g.lat->gram != generators[0].lat->gram)
            throw std::invalid_argument("generators must share one lattice");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    FiniteGroup grp;
    grp.lat = generators[0].lat;
    std::unordered_set<MatKey, MatKeyHash> seen;
    std::deque<size_t> queue;
    EMat id = EMat::identity(grp.lat->rank);
    seen.insert(key_of(id));
    grp.elements.push_back(id);
    queue.push_back(0);
    while (!queue.empty()) {
        size_t idx = queue.front();
        queue.pop_front();
        EMat cur = grp.elements[idx];
        for (const auto& g : generators) {
            EMat next = g.m * cur;
            MatKey k = key_of(next);
            if (seen.insert(std::move(k)).second) {
                if (grp.elements.size() >= cap)
                    throw std::runtime_error("group closure exceeded the cap");
                grp.elements.push_back(next);
                queue.push_back(grp.elements.size() - 1);
            }
        }
    }
    return grp;
}

std::vector<uint32_t> generate_group_f3(const std::vector<SymplecticMapF3>& generators, size_t cap) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    std::vector<Mat<F3>> gens;
    for (const auto& g : generators) gens.push_back(g.m);
    std::unordered_set<uint32_t> seen;
    std::vector<Mat<F3>> elems;
    std::deque<size_t> queue;
    Mat<F3> id(4, 4);
    for (size_t i = 0; i < 4; ++i) id(i, i) = F3(1);
    auto keyf = [](const Mat<F3>& m) {
        uint32_t k = 0;
        for (size_t i = 0; i < 16; ++i) k |= static_cast<uint32_t>(m.d[i].v) << (2 * i);
        return k;
    };
    seen.insert(keyf(id));
    elems.push_back(id);
    queue.push_back(0);
    std::vector<uint32_t> keys = {keyf(id)};
    while (!queue.empty()) {
        size_t idx = queue.front();
        queue.pop_front();
        Mat<F3> cur = elems[idx];
        for (const auto& g : gens) {
            Mat<F3> next = g * cur;
            uint32_t k = keyf(next);
            if (seen.insert(k).second) {
                if (elems.size() >= cap) throw std::runtime_error("group closure exceeded the cap");
                elems.push_back(next);
                keys.push_back(k);
                queue.push_back(elems.size() - 1);
            }
        }
    }
    return keys;
}

std::vector<LatticeVector> orbit(const std::vector<UnitaryMap>& generators,
                                 const LatticeVector& seed, size_t cap) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    std::vector<UnitaryMap> gens = generators;
    std::sort(gens.begin(), gens.end());
    std::set<std::vector<int64_t>> seen;
    std::deque<LatticeVector> queue;
    std::vector<LatticeVector> out;
    seen.insert(z_coords(seed));
    queue.push_back(seed);
    out.push_back(seed);
    while (!queue.empty()) {
        LatticeVector cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            LatticeVector next = g(cur);
            if (seen.insert(z_coords(next)).second) {
                if (out.size() >= cap) throw std::runtime_error("orbit exceeded the cap");
                out.push_back(next);
                queue.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

size_t stabilizer_order(const FiniteGroup& g, const std::vector<UnitaryMap>& generators,
                        const LatticeVector& seed) {
    std::vector<LatticeVector> orb = orbit(generators, seed, g.order() + 1);
    if (g.order() % orb.size() != 0)
        throw std::logic_error("orbit size does not divide the group order");
    return g.order() / orb.size();
}

}  // namespace eislat

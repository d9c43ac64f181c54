#include "eislat/shortvec.hpp"

#include <algorithm>
#include <set>

namespace eislat {

namespace {

// max integer k with (k - t)^2 <= bound, k >= t  (t, bound rational, bound >= 0)
int64_t floor_t_plus_sqrt(const Rat& t, const Rat& bound) {
    // start from floor(t) + floor(sqrt(ceil(bound))) + 1 and walk down
    int64_t hi = rat_floor(t) + isqrt_ll(rat_ceil(bound)) + 2;
    while (true) {
        Rat d = Rat(hi) - t;
        if (d.sign() <= 0 || d * d <= bound) return hi;
        --hi;
    }
}

int64_t ceil_t_minus_sqrt(const Rat& t, const Rat& bound) {
    int64_t lo = rat_ceil(t) - isqrt_ll(rat_ceil(bound)) - 2;
    while (true) {
        Rat d = t - Rat(lo);
        if (d.sign() <= 0 || d * d <= bound) return lo;
        ++lo;
    }
}

// Exact rational Cholesky data: Q(x) = sum_i D[i] (x_i + sum_{j>i} U[i][j] x_j)^2.
struct CholeskyData {
    std::vector<Rat> diag;
    QMat u;
};

CholeskyData rational_cholesky(const IMat& q) {
    size_t n = q.rows;
    QMat a(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a(i, j) = Rat(q(i, j));
    CholeskyData cd;
    cd.diag.assign(n, Rat(0));
    cd.u = QMat(n, n);
    for (size_t k = 0; k < n; ++k) {
        if (a(k, k).sign() <= 0) throw std::invalid_argument("form is not positive definite");
        cd.diag[k] = a(k, k);
        for (size_t j = k + 1; j < n; ++j) cd.u(k, j) = a(k, j) / a(k, k);
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) a(i, j) -= a(i, k) * a(k, j) / a(k, k);
    }
    return cd;
}

void enumerate_rec(const CholeskyData& cd, size_t level, std::vector<int64_t>& x,
                   std::vector<Rat>& shift, const Rat& budget,
                   std::vector<std::vector<int64_t>>& out) {
    // shift[level] = sum_{j>level} U[level][j] x_j, maintained by the caller.
    Rat center = -shift[level];
    Rat bound = budget / cd.diag[level];
    int64_t lo = ceil_t_minus_sqrt(center, bound);
    int64_t hi = floor_t_plus_sqrt(center, bound);
    for (int64_t v = lo; v <= hi; ++v) {
        Rat d = Rat(v) - center;
        Rat used = cd.diag[level] * d * d;
        if (used > budget) continue;
        x[level] = v;
        if (level == 0) {
            if (used == budget) out.push_back(x);
            continue;
        }
        Rat rem = budget - used;
        size_t nl = level - 1;
        shift[nl] = Rat(0);
        for (size_t j = nl + 1; j < x.size(); ++j)
            if (x[j] != 0) shift[nl] += cd.u(nl, j) * Rat(x[j]);
        enumerate_rec(cd, nl, x, shift, rem, out);
    }
    x[level] = 0;
}

}  // namespace

std::vector<LatticeVector> vectors_of_norm(const LatticePtr& L, int64_t n) {
    if (n <= 0 || n % 3 != 0) throw std::invalid_argument("norm must be a positive multiple of 3");
    if (!L->is_positive_definite())
        throw std::invalid_argument("enumeration requires a positive definite lattice");
    IMat q = L->underlying_integral_form();
    int64_t target = 2 * n / 3;  // (x.x) = (2/3) psi(x,x)

    CholeskyData cd = rational_cholesky(q);
    size_t dim = q.rows;
    std::vector<int64_t> x(dim, 0);
    std::vector<Rat> shift(dim, Rat(0));
    std::vector<std::vector<int64_t>> raw;
    enumerate_rec(cd, dim - 1, x, shift, Rat(target), raw);

    std::vector<LatticeVector> out;
    out.reserve(raw.size());
    for (const auto& zc : raw) {
        LatticeVector v = from_z_coords(L, zc);
        if (L->product(v, v) != Eis{n}) throw std::logic_error("enumerated vector has wrong norm");
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticeVector> unit_orbit_representatives(const std::vector<LatticeVector>& vecs) {
    std::set<std::vector<int64_t>> have;
    for (const auto& v : vecs) have.insert(z_coords(v));
    for (const auto& v : vecs)
        for (const Eis& u : units())
            if (!have.count(z_coords(u * v)))
                throw std::invalid_argument("input is not closed under the unit group");
    std::vector<LatticeVector> reps;
    std::set<std::vector<int64_t>> seen;
    for (const auto& v : vecs) {
        if (seen.count(z_coords(v))) continue;
        LatticeVector best = v;
        for (const Eis& u : units()) {
            LatticeVector w = u * v;
            seen.insert(z_coords(w));
            if (w < best) best = w;
        }
        reps.push_back(std::move(best));
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

}  // namespace eislat

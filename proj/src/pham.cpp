#include "eislat/pham.hpp"

#include <algorithm>

namespace eislat {

EtaPolynomial EtaPolynomial::monomial(int k, const Eis& coef) {
    EtaPolynomial p;
    k %= 12;
    if (k < 0) k += 12;
    p.c[static_cast<size_t>(k)] = coef;
    return p;
}

EtaPolynomial operator+(const EtaPolynomial& x, const EtaPolynomial& y) {
    EtaPolynomial r;
    for (size_t i = 0; i < 12; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}

EtaPolynomial operator-(const EtaPolynomial& x, const EtaPolynomial& y) {
    EtaPolynomial r;
    for (size_t i = 0; i < 12; ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
}

EtaPolynomial operator*(const Eis& s, const EtaPolynomial& x) {
    EtaPolynomial r;
    for (size_t i = 0; i < 12; ++i) r.c[i] = s * x.c[i];
    return r;
}

EtaPolynomial EtaPolynomial::eta_shift(int k) const {
    EtaPolynomial r;
    for (size_t i = 0; i < 12; ++i) r.c[(i + static_cast<size_t>(((k % 12) + 12))) % 12] = c[i];
    return r;
}

Eis psi_table(int i) {
    i %= 12;
    if (i < 0) i += 12;
    if (i == 0) return Eis{3};
    if (i == 1) return -(Eis{1} + omega());        // -1 - omega
    if (i == 11) return -(Eis{1} + conj(omega())); // -1 - omega^{-1}
    return Eis{0};
}

Eis pham_form(const EtaPolynomial& x, const EtaPolynomial& y) {
    Eis acc{0};
    for (int i = 0; i < 12; ++i) {
        if (x.c[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < 12; ++j) {
            if (y.c[static_cast<size_t>(j)].is_zero()) continue;
            acc += x.c[static_cast<size_t>(i)] * conj(y.c[static_cast<size_t>(j)]) * psi_table(j - i);
        }
    }
    return acc;
}

AggregateForm aggregate_form(const EtaPolynomial& x, const EtaPolynomial& y) {
    AggregateForm out{};
    for (int k = 0; k < 12; ++k) out[static_cast<size_t>(k)] = pham_form(x, y.eta_shift(k));
    return out;
}

PhamVector reduce_to_basis(const EtaPolynomial& p) {
    // Solve the two relations for eta^0 and eta^11:
    //   eta^11 = sum_{i=1}^{10} omega^{-1}(omega^i - 1) eta^i
    //   eta^0  = sum_{i=1}^{10} (omega^{-1} - 1 - omega^{i-1}) eta^i
    PhamVector out(10);
    Eis winv = conj(omega());
    for (int i = 1; i <= 10; ++i) {
        Eis coef = p.c[static_cast<size_t>(i)];
        coef += p.c[11] * (winv * (omega_pow(i) - Eis{1}));
        coef += p.c[0] * (winv - Eis{1} - omega_pow(i - 1));
        // eta^i = omega^{-i} r_i
        out[static_cast<size_t>(i - 1)] = omega_pow(-i) * coef;
    }
    return out;
}

static EtaPolynomial r_monomial(int i) { return EtaPolynomial::monomial(i, omega_pow(i)); }

EMat gram_in_r_basis() {
    EMat g(10, 10);
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j)
            g(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) =
                pham_form(r_monomial(i), r_monomial(j));
    return g;
}

LatticePtr pham_lattice() {
    static LatticePtr cached = HermitianLattice::create(gram_in_r_basis());
    return cached;
}

std::vector<Eis> unit_normalize_to_lambda10() {
    EMat g = gram_in_r_basis();
    LatticePtr l10 = lambda_lattice(10);
    std::vector<Eis> u(10);
    u[0] = Eis{1};
    for (size_t i = 0; i + 1 < 10; ++i) {
        Eis gi = g(i, i + 1);
        if (norm(gi) != 3) throw std::domain_error("superdiagonal entry is not theta times a unit");
        // need u_i * conj(u_{i+1}) * g_i = theta
        Eis cu = exact_div(theta(), u[i] * gi);
        if (!is_unit(cu)) throw std::domain_error("no unit rescaling to the standard Gram");
        u[i + 1] = conj(cu);
    }
    // verify: the rescaled Gram is the standard chain Gram on the nose
    EMat gs(10, 10);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) gs(i, j) = u[i] * conj(u[j]) * g(i, j);
    if (gs != l10->gram) throw std::domain_error("unit rescaling failed to reach the standard Gram");
    return u;
}

UnitaryMap eta_map() {
    LatticePtr L = pham_lattice();
    EMat m(10, 10);
    for (int j = 1; j <= 10; ++j) {
        PhamVector col = reduce_to_basis(r_monomial(j).eta_shift(1));
        for (size_t i = 0; i < 10; ++i) m(i, static_cast<size_t>(j - 1)) = col[i];
    }
    return UnitaryMap(L, std::move(m));
}

UnitaryMap monodromy_T(int k) {
    LatticePtr L = pham_lattice();
    EtaPolynomial ek = EtaPolynomial::monomial(k);
    PhamVector ek_r = reduce_to_basis(ek);
    EMat m(10, 10);
    Eis winv = conj(omega());
    for (int j = 1; j <= 10; ++j) {
        Eis p = pham_form(r_monomial(j), ek);
        // omega^{-1} theta^{-1} p, theta^{-1} = -theta/3
        Eis t = -(theta() * p);
        if (t.a % 3 != 0 || t.b % 3 != 0) throw std::logic_error("form value not divisible by theta");
        Eis coef = winv * Eis{t.a / 3, t.b / 3};
        for (size_t i = 0; i < 10; ++i) {
            Eis v = (i == static_cast<size_t>(j - 1)) ? Eis{1} : Eis{0};
            m(i, static_cast<size_t>(j - 1)) = v + coef * ek_r[i];
        }
    }
    return UnitaryMap(L, std::move(m));
}

BraidReport verify_braid_and_R() {
    BraidReport rep;
    std::vector<EMat> t;
    for (int k = 0; k < 12; ++k) t.push_back(monodromy_T(k).m);
    EMat id = EMat::identity(10);
    for (int k = 0; k < 12; ++k)
        if (mat_pow(t[static_cast<size_t>(k)], 3) != id) rep.t_cubed_identity = false;
    for (int k = 0; k < 12; ++k) {
        const EMat& a = t[static_cast<size_t>(k)];
        const EMat& b = t[static_cast<size_t>((k + 1) % 12)];
        if (a * b * a != b * a * b) rep.braid_relations = false;
    }
    for (int k = 0; k < 12; ++k)
        for (int l = 0; l < 12; ++l) {
            int d = (k - l + 12) % 12;
            if (d == 1 || d == 11 || k == l) continue;
            if (t[static_cast<size_t>(k)] * t[static_cast<size_t>(l)] !=
                t[static_cast<size_t>(l)] * t[static_cast<size_t>(k)])
                rep.distant_commutations = false;
        }
    EMat r = id, rstar = id;
    for (int k = 1; k <= 11; ++k) r = r * t[static_cast<size_t>(k)];
    for (int k = 11; k >= 1; --k) rstar = rstar * t[static_cast<size_t>(k)];
    EMat eta = eta_map().m;
    EMat weta(10, 10);
    for (size_t i = 0; i < 10; ++i)
        for (size_t j = 0; j < 10; ++j) weta(i, j) = omega() * eta(i, j);
    rep.r_is_tau_eta = (r == weta);
    rep.r_star_is_eta_inverse = (rstar == mat_pow(eta, 11));
    EMat womega(10, 10);
    for (size_t i = 0; i < 10; ++i) womega(i, i) = omega();
    rep.r_rstar_is_omega = (r * rstar == womega);
    rep.r_star_order_12 = (mat_pow(rstar, 12) == id);
    return rep;
}

EisensteinImage eisenstein_image() {
    EtaPolynomial upoly;
    for (int i = 0; i < 12; ++i) upoly.c[static_cast<size_t>(i)] = (i % 2 == 0) ? Eis{1} : Eis{-1};
    EtaPolynomial zpoly;
    Eis winv = conj(omega());
    zpoly.c[2] = winv;
    zpoly.c[8] = winv;
    zpoly.c[3] = Eis{1};
    zpoly.c[4] = Eis{1};
    zpoly.c[9] = Eis{1};
    zpoly.c[10] = Eis{1};
    zpoly.c[5] = omega();
    zpoly.c[11] = omega();

    EisensteinImage out;
    out.u = reduce_to_basis(upoly);
    out.z = reduce_to_basis(zpoly);
    Eis nu = pham_form(upoly, upoly);
    Eis nz = pham_form(zpoly, zpoly);
    if (nu.b != 0 || nz.b != 0) throw std::logic_error("norms must be rational integers");
    out.norm_u = nu.a;
    out.norm_z = nz.a;
    Eis two_theta = Eis{2} * theta();
    out.u_equals_2theta_z = true;
    for (size_t i = 0; i < 10; ++i)
        if (out.u[i] != two_theta * out.z[i]) out.u_equals_2theta_z = false;
    return out;
}

IsotropicL0Report isotropic_l0_check() {
    EtaPolynomial l0;
    l0.c[0] = Eis{1};
    l0.c[1] = Eis{1} + omega();
    l0.c[2] = Eis{2} * omega();
    l0.c[3] = Eis{2} * omega() - Eis{1};
    l0.c[4] = omega() - Eis{1};
    IsotropicL0Report rep;
    rep.l0_isotropic = pham_form(l0, l0).is_zero();
    rep.perp_to_non5_powers = true;
    for (int i = 0; i < 12; ++i) {
        Eis p = pham_form(l0, EtaPolynomial::monomial(i));
        if (i % 6 == 5) {
            if (i == 5) rep.pairs_with_eta5 = !p.is_zero();
        } else if (!p.is_zero()) {
            rep.perp_to_non5_powers = false;
        }
    }
    return rep;
}

// --- integral module --------------------------------------------------------

std::vector<int64_t> group_ring_mul(const std::vector<int64_t>& x, const std::vector<int64_t>& y) {
    std::vector<int64_t> r(72, 0);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 12; ++b) {
            int64_t xa = x[static_cast<size_t>(a * 12 + b)];
            if (xa == 0) continue;
            for (int c = 0; c < 6; ++c)
                for (int d = 0; d < 12; ++d) {
                    int64_t yc = y[static_cast<size_t>(c * 12 + d)];
                    if (yc == 0) continue;
                    size_t idx = static_cast<size_t>(((a + c) % 6) * 12 + (b + d) % 12);
                    r[idx] = chk_add(r[idx], chk_mul(xa, yc));
                }
        }
    return r;
}

std::vector<int64_t> group_ring_conj(const std::vector<int64_t>& x) {
    std::vector<int64_t> r(72, 0);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 12; ++b)
            r[static_cast<size_t>(((6 - a) % 6) * 12 + (12 - b) % 12)] =
                x[static_cast<size_t>(a * 12 + b)];
    return r;
}

std::vector<int64_t> IntegralPhamModule::pairing(size_t i, size_t j) const {
    std::vector<int64_t> x(72, 0), y(72, 0);
    for (size_t c = 0; c < 72; ++c) {
        x[c] = sections(i, c);
        y[c] = sections(j, c);
    }
    std::vector<int64_t> f(72, 0);
    // (1 - tau)(1 - eta) = 1 - tau - eta + tau*eta
    f[0 * 12 + 0] = 1;
    f[1 * 12 + 0] = -1;
    f[0 * 12 + 1] = -1;
    f[1 * 12 + 1] = 1;
    std::vector<int64_t> g(72, 0);  // tau*eta - 1
    g[1 * 12 + 1] = 1;
    g[0 * 12 + 0] = -1;
    return group_ring_mul(group_ring_mul(f, x), group_ring_conj(group_ring_mul(y, g)));
}

IntegralPhamModule integral_pham_module() {
    // relation rows: m * g for each monomial m and each defining generator g
    IMat rel(216, 72);
    size_t row = 0;
    auto add_rel = [&](int a, int b, int which) {
        for (int i = 0; i < (which == 0 ? 6 : 12); ++i) {
            int aa = a, bb = b;
            if (which == 0) aa = (a + i) % 6;               // sum tau^i
            if (which == 1) bb = (b + i) % 12;              // sum eta^i
            if (which == 2) {                               // sum (tau eta)^i
                aa = (a + i) % 6;
                bb = (b + i) % 12;
            }
            rel(row, static_cast<size_t>(aa * 12 + bb)) = chk_add(rel(row, static_cast<size_t>(aa * 12 + bb)), 1);
        }
        ++row;
    };
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 12; ++b) {
            add_rel(a, b, 0);
            add_rel(a, b, 1);
            add_rel(a, b, 2);
        }

    // Diagonalize the relation matrix with untracked row operations and
    // column operations mirrored on V (and inversely on W = V^{-1}):
    // rel_current = rel_original * V throughout.
    IMat m = rel;
    IMat v = IMat::identity(72), w = IMat::identity(72);
    auto col_sub = [&](size_t j, size_t i, int64_t q) {  // col_j -= q * col_i
        for (size_t t = 0; t < m.rows; ++t) m(t, j) = chk_sub(m(t, j), chk_mul(q, m(t, i)));
        for (size_t t = 0; t < 72; ++t) v(t, j) = chk_sub(v(t, j), chk_mul(q, v(t, i)));
        for (size_t t = 0; t < 72; ++t) w(i, t) = chk_add(w(i, t), chk_mul(q, w(j, t)));
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t t = 0; t < m.rows; ++t) std::swap(m(t, i), m(t, j));
        for (size_t t = 0; t < 72; ++t) std::swap(v(t, i), v(t, j));
        for (size_t t = 0; t < 72; ++t) std::swap(w(i, t), w(j, t));
    };
    size_t r = 0;
    while (r < m.rows && r < 72) {
        // locate a smallest nonzero entry in the remaining block
        size_t pi = r, pj = r;
        int64_t best = 0;
        for (size_t i = r; i < m.rows; ++i)
            for (size_t j = r; j < 72; ++j)
                if (m(i, j) != 0) {
                    int64_t a = m(i, j) < 0 ? -m(i, j) : m(i, j);
                    if (best == 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
        if (best == 0) break;
        for (size_t t = 0; t < 72; ++t) std::swap(m(r, t), m(pi, t));
        if (pj != r) col_swap(r, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = r + 1; i < m.rows; ++i)
                while (m(i, r) != 0) {
                    int64_t q = m(i, r) / m(r, r);
                    for (size_t t = 0; t < 72; ++t) m(i, t) = chk_sub(m(i, t), chk_mul(q, m(r, t)));
                    if (m(i, r) != 0)
                        for (size_t t = 0; t < 72; ++t) std::swap(m(r, t), m(i, t));
                }
            for (size_t j = r + 1; j < 72; ++j)
                while (m(r, j) != 0) {
                    int64_t q = m(r, j) / m(r, r);
                    col_sub(j, r, q);
                    if (m(r, j) != 0) {
                        col_swap(r, j);
                        clean = false;
                    }
                }
        }
        ++r;
    }
    IntegralPhamModule out;
    for (size_t i = 0; i < r; ++i) {
        int64_t d = m(i, i) < 0 ? -m(i, i) : m(i, i);
        if (d != 1) out.presentation_torsion.push_back(d);
    }
    out.rank = 72 - r;
    // class coordinates of monomial e_c are the trailing coordinates of e_c V
    out.reduction = IMat(out.rank, 72);
    for (size_t col = 0; col < 72; ++col)
        for (size_t k = 0; k < out.rank; ++k) out.reduction(k, col) = v(col, r + k);
    // representative of basis element k is row r+k of W
    out.sections = IMat(out.rank, 72);
    for (size_t k = 0; k < out.rank; ++k)
        for (size_t col = 0; col < 72; ++col) out.sections(k, col) = w(r + k, col);
    // sanity: reduction is a retraction of the section
    IMat id_check = out.reduction * out.sections.transposed();
    if (id_check != IMat::identity(out.rank))
        throw std::logic_error("quotient section is not a retraction");

    // integral monodromy on monomials: T(tau^a eta^b) = tau^a eta^b + tau^a Delta_b
    IMat t72(72, 72);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 12; ++b) {
            size_t col = static_cast<size_t>(a * 12 + b);
            t72(col, col) = 1;
            if (b == 0) {
                t72(static_cast<size_t>(a * 12), col) -= 1;                 // -e
                t72(static_cast<size_t>(((a + 1) % 6) * 12), col) -= 1;     // -tau e
            } else if (b == 1) {
                t72(static_cast<size_t>(a * 12), col) += 1;                  // +e
            } else if (b == 11) {
                t72(static_cast<size_t>(((a + 1) % 6) * 12), col) += 1;      // +tau e
            }
        }
    IMat eta72(72, 72), tau72(72, 72);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 12; ++b) {
            eta72(static_cast<size_t>(a * 12 + (b + 1) % 12), static_cast<size_t>(a * 12 + b)) = 1;
            tau72(static_cast<size_t>(((a + 1) % 6) * 12 + b), static_cast<size_t>(a * 12 + b)) = 1;
        }
    IMat st = out.sections.transposed();
    out.monodromy = out.reduction * (t72 * st);
    out.eta = out.reduction * (eta72 * st);
    out.tau = out.reduction * (tau72 * st);
    return out;
}

}  // namespace eislat

#include "eislat/classify.hpp"

#include <algorithm>
#include <set>

namespace eislat {

const char* to_string(Rank2Type t) {
    switch (t) {
        case Rank2Type::d6: return "d6";
        case Rank2Type::d9: return "d9";
        case Rank2Type::d15: return "d15";
        case Rank2Type::d18: return "d18";
    }
    return "?";
}

const char* to_string(RelativePosition p) {
    switch (p) {
        case RelativePosition::a: return "a";
        case RelativePosition::b: return "b";
        case RelativePosition::c: return "c";
        case RelativePosition::d: return "d";
        case RelativePosition::e: return "e";
    }
    return "?";
}

const char* to_string(IsotropicType t) {
    return t == IsotropicType::theta ? "theta" : "zero";
}

bool operator<(const Flag& x, const Flag& y) {
    for (size_t i = 0; i < 4; ++i)
        if (x.v[i].v != y.v[i].v) return x.v[i].v < y.v[i].v;
    return x.plane_line_ids < y.plane_line_ids;
}

Rank2Type rank2_type(const LatticePtr& L, const LatticeVector& z, const LatticeVector& r) {
    if (L->product(z, z) != Eis{6}) throw std::invalid_argument("z must be a 6-vector");
    if (L->product(r, r) != Eis{3}) throw std::invalid_argument("r must be a 3-vector");
    std::vector<LatticeVector> span = {z, r};
    if (span_rank(span) != 2) throw std::invalid_argument("z and r are proportional");
    int64_t disc = span_discriminant(span);
    if (disc <= 0) throw std::invalid_argument("span is not positive definite");
    if (!is_primitive(L, span)) throw std::domain_error("imprimitive span has no rank-2 type");
    switch (disc) {
        case 6: return Rank2Type::d6;
        case 9: return Rank2Type::d9;
        case 15: return Rank2Type::d15;
        case 18: return Rank2Type::d18;
    }
    throw std::logic_error("rank-2 discriminant outside {6, 9, 15, 18}");
}

RelativePosition relative_position(const LatticeVector& r, const LatticeVector& z) {
    const LatticePtr& L = r.lat;
    if (L->product(r, r) != Eis{3} || L->product(z, z) != Eis{6})
        throw std::invalid_argument("relative position needs a 3-vector and a 6-vector");
    int64_t n = norm(L->product(r, z));
    switch (n) {
        case 12: return RelativePosition::b;
        case 3: return RelativePosition::c;
        case 9: return RelativePosition::d;
        case 0:
            return is_primitive(L, {z, r}) ? RelativePosition::e : RelativePosition::a;
    }
    throw std::logic_error("unexpected product norm between a 3- and a 6-vector");
}

ThetaDecomposition theta_decompositions(const LatticeVector& z,
                                        const std::vector<LatticeVector>& three_vectors) {
    const LatticePtr& L = z.lat;
    if (L->product(z, z) != Eis{6}) throw std::invalid_argument("z must be a 6-vector");
    ThetaDecomposition out;
    for (const auto& r1 : three_vectors) {
        LatticeVector r2 = z - r1;
        if (L->product(r2, r2) != Eis{3}) continue;
        if (L->product(r1, r2) != theta()) continue;
        out.pairs.emplace_back(r1, r2);
    }
    std::sort(out.pairs.begin(), out.pairs.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    if (out.pairs.size() != 3)
        throw std::logic_error("a 6-vector must admit exactly 3 theta-pair decompositions");
    std::vector<LatticeVector> first = {out.pairs[0].first, out.pairs[0].second};
    for (const auto& [p, q] : out.pairs) {
        if (!in_span(first, p) || !in_span(first, q))
            throw std::logic_error("theta-pairs do not span a common sublattice");
    }
    out.lz_basis = first;
    return out;
}

Flag flag_of(const LatticeVector& z, const std::vector<LatticeVector>& three_vectors) {
    ThetaDecomposition dec = theta_decompositions(z, three_vectors);
    const LatticePtr& L = z.lat;
    F3Vec4 v = reduce_vector_mod_theta(z);
    if (f3_is_zero(v)) throw std::logic_error("6-vector reduces to zero mod theta");
    F3Vec4 b1 = reduce_vector_mod_theta(dec.lz_basis[0]);
    F3Vec4 b2 = reduce_vector_mod_theta(dec.lz_basis[1]);
    if (symplectic_product(L, b1, b2).is_zero())
        throw std::logic_error("reduction of L_z is a degenerate plane");
    std::set<size_t> ids;
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
            if (s == 0 && t == 0) continue;
            F3Vec4 w;
            for (size_t i = 0; i < 4; ++i) w[i] = F3(s) * b1[i] + F3(t) * b2[i];
            ids.insert(f3_line_id(w));
        }
    Flag f;
    f.v = v;
    f.plane_line_ids.assign(ids.begin(), ids.end());
    return f;
}

std::vector<std::pair<LatticeVector, LatticeVector>> perpendicular_decompositions(
    const LatticeVector& z, const std::vector<LatticeVector>& three_vectors) {
    const LatticePtr& L = z.lat;
    if (L->product(z, z) != Eis{6}) throw std::invalid_argument("z must be a 6-vector");
    std::vector<std::pair<LatticeVector, LatticeVector>> pairs;
    std::set<std::vector<int64_t>> seen;
    for (const auto& r : three_vectors) {
        LatticeVector r2 = z - r;
        if (L->product(r2, r2) != Eis{3}) continue;
        if (!L->product(r, r2).is_zero()) continue;
        LatticeVector lo = r < r2 ? r : r2;
        LatticeVector hi = r < r2 ? r2 : r;
        if (seen.insert(z_coords(lo)).second) pairs.emplace_back(lo, hi);
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (pairs.size() != 4)
        throw std::logic_error("a 6-vector must admit exactly 4 perpendicular decompositions");
    return pairs;
}

LatticeVector standard_zo() {
    LatticePtr L = big_lambda_lattice();
    std::vector<Eis> c(10);
    c[0] = Eis{1};
    c[1] = Eis{1};
    return L->vector(std::move(c));
}

IsotropicType isotropic_line_type(const LatticeVector& z_o_frame) {
    LatticePtr L = big_lambda_lattice();
    if (z_o_frame.lat->gram != L->gram)
        throw std::invalid_argument("expected a vector of the standard frame lattice");
    if (L->product(z_o_frame, z_o_frame) != Eis{6})
        throw std::invalid_argument("z_o must be a 6-vector");
    LatticeVector e = L->basis_vector(8);
    if (!L->product(z_o_frame, e).is_zero())
        throw std::invalid_argument("z_o must be perpendicular to e");
    LatticePtr l4 = lambda_lattice(4);
    std::vector<Eis> xp(z_o_frame.c.begin(), z_o_frame.c.begin() + 4);
    std::vector<Eis> xpp(z_o_frame.c.begin() + 4, z_o_frame.c.begin() + 8);
    LatticeVector vp = l4->vector(xp), vpp = l4->vector(xpp);
    Eis np = l4->product(vp, vp), npp = l4->product(vpp, vpp);
    if ((np == Eis{6} && npp == Eis{0}) || (np == Eis{0} && npp == Eis{6}))
        return IsotropicType::theta;
    if (np == Eis{3} && npp == Eis{3}) return IsotropicType::zero;
    throw std::invalid_argument("component norms are not a valid (6,0)/(0,6)/(3,3) split");
}

DClassProfile dclass_profile(IsotropicType type) {
    LatticePtr L8 = lambda4_perp_lambda4();
    LatticePtr l4 = lambda_lattice(4);
    std::vector<LatticeVector> pool;
    for (const auto& r : vectors_of_norm(l4, 3)) {
        std::vector<Eis> c(8);
        for (size_t i = 0; i < 4; ++i) c[i] = r.c[i];
        pool.push_back(L8->vector(c));
        std::vector<Eis> c2(8);
        for (size_t i = 0; i < 4; ++i) c2[4 + i] = r.c[i];
        pool.push_back(L8->vector(c2));
    }

    std::vector<Eis> zc(8);
    zc[0] = Eis{1};
    zc[type == IsotropicType::theta ? 1 : 4] = Eis{1};
    LatticeVector zo = L8->vector(zc);

    // I(d)/I is computed relative to z_o: the span of the images is measured
    // after projecting along z_o, using the integral projection
    // p(r) = 6 r - psi(r, z_o) z_o.
    std::vector<LatticeVector> p6, p9;
    for (const auto& r : pool) {
        int64_t n = norm(L8->product(r, zo));
        int64_t d;
        if (n == 12)
            d = 6;
        else if (n == 9)
            d = 9;
        else if (n == 3)
            d = 15;
        else if (n == 0) {
            // d-invariant 18 when primitive, undefined otherwise; neither
            // contributes to I(6) or I(9).
            continue;
        } else
            throw std::logic_error("unexpected product norm in the cusp pool");
        if (d == 6 || d == 9) {
            LatticeVector p = Eis{6} * r - L8->product(r, zo) * zo;
            (d == 6 ? p6 : p9).push_back(p);
        }
    }

    DClassProfile out;
    out.pool_size = pool.size();
    out.rank_i6 = span_rank(p6);
    out.rank_i9 = span_rank(p9);

    // distinct saturated lines among the d-invariant-9 images
    std::set<std::vector<int64_t>> lines;
    for (const auto& p : p9) {
        // divide by the O-content, then normalize by a unit
        Eis g{0, 0};
        for (const Eis& c : p.c) {
            if (c.is_zero()) continue;
            g = g.is_zero() ? canonical_associate(c) : gcd(g, c);
        }
        std::vector<Eis> prim(p.c.size());
        for (size_t i = 0; i < p.c.size(); ++i) prim[i] = exact_div(p.c[i], g);
        // unit normalization: make the first nonzero coordinate canonical
        Eis lead{0, 0};
        for (const Eis& c : prim)
            if (!c.is_zero()) {
                lead = c;
                break;
            }
        Eis target = canonical_associate(lead);
        Eis u = exact_div(target, lead);
        std::vector<int64_t> key;
        for (const Eis& c : prim) {
            Eis t = u * c;
            key.push_back(t.a);
            key.push_back(t.b);
        }
        lines.insert(key);
    }
    out.nine_lines = lines.size();

    out.perpendicular = true;
    for (const auto& x : p6)
        for (const auto& y : p9)
            if (!L8->product(x, y).is_zero()) out.perpendicular = false;
    return out;
}

namespace {

// Depth-first search for a tuple of 3-vectors realizing an exact Gram match
// with the model and mapping the model's distinguished vector to z.
bool find_pair_isometry(const EMat& model_gram, const std::vector<int>& z_model,
                        const std::vector<LatticeVector>& threes, const LatticeVector& z,
                        std::vector<LatticeVector>& chosen) {
    size_t k = chosen.size();
    if (k == model_gram.rows) {
        LatticeVector img = z.lat->zero_vector();
        for (size_t i = 0; i < k; ++i)
            if (z_model[i]) img = img + chosen[i];
        return img == z;
    }
    for (const auto& cand : threes) {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i)
            if (cand.lat->product(chosen[i], cand) != model_gram(i, k)) ok = false;
        if (!ok) continue;
        chosen.push_back(cand);
        if (find_pair_isometry(model_gram, z_model, threes, z, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

SpanType span_type_with_zo(const std::vector<LatticeVector>& rs) {
    LatticePtr L = big_lambda_lattice();
    LatticeVector zo = standard_zo();
    std::vector<LatticeVector> gens = {zo};
    for (const auto& r : rs) {
        if (r.lat->gram != L->gram) throw std::invalid_argument("spanning vectors must live in the frame lattice");
        Rank2Type d = rank2_type(L, zo, r);
        if (d != Rank2Type::d6 && d != Rank2Type::d9)
            throw std::invalid_argument("spanning vector has stray d-invariant " +
                                        std::string(to_string(d)));
        gens.push_back(r);
    }
    if (!is_primitive(L, gens)) throw std::invalid_argument("span is not primitive");
    std::vector<LatticeVector> basis = saturation(L, gens);
    EMat g = gram_of(basis);
    // positive definiteness of the span via Sylvester on the Hermitian Gram
    for (size_t k = 1; k <= basis.size(); ++k) {
        EMat lead(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
        Eis d = det_eis(lead);
        if (d.b != 0 || d.a <= 0) throw std::invalid_argument("span is not positive definite");
    }

    // abstract copy of the span so its 3-vectors can be enumerated
    LatticePtr abstract = HermitianLattice::create(g);
    std::vector<LatticeVector> threes = vectors_of_norm(abstract, 3);
    // z_o in the basis of the span: solve exactly over Q
    size_t k = basis.size();
    IMat a(2 * L->rank, 2 * k);
    for (size_t i = 0; i < k; ++i) {
        std::vector<int64_t> v = z_coords(basis[i]);
        std::vector<int64_t> w = z_coords(omega() * basis[i]);
        for (size_t j = 0; j < 2 * L->rank; ++j) {
            a(j, 2 * i) = v[j];
            a(j, 2 * i + 1) = w[j];
        }
    }
    std::vector<int64_t> target = z_coords(zo);
    // Gaussian solve over Q (unique since basis is independent)
    QMat aq(a.rows, a.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) aq(i, j) = Rat(a(i, j));
    // least-structure solve: row reduce [aq | target]
    std::vector<Rat> rhs(a.rows);
    for (size_t i = 0; i < a.rows; ++i) rhs[i] = Rat(target[i]);
    std::vector<Rat> sol(a.cols, Rat(0));
    {
        size_t row = 0;
        std::vector<size_t> pivot_col;
        for (size_t col = 0; col < a.cols && row < a.rows; ++col) {
            size_t p = row;
            while (p < a.rows && aq(p, col).is_zero()) ++p;
            if (p == a.rows) continue;
            for (size_t j = 0; j < a.cols; ++j) std::swap(aq(p, j), aq(row, j));
            std::swap(rhs[p], rhs[row]);
            Rat piv = aq(row, col);
            for (size_t j = 0; j < a.cols; ++j) aq(row, j) /= piv;
            rhs[row] /= piv;
            for (size_t i2 = 0; i2 < a.rows; ++i2) {
                if (i2 == row || aq(i2, col).is_zero()) continue;
                Rat f = aq(i2, col);
                for (size_t j = 0; j < a.cols; ++j) aq(i2, j) -= f * aq(row, j);
                rhs[i2] -= f * rhs[row];
            }
            pivot_col.push_back(col);
            ++row;
        }
        for (size_t i2 = row; i2 < a.rows; ++i2)
            if (!rhs[i2].is_zero()) throw std::logic_error("z_o is not in the span");
        for (size_t r2 = 0; r2 < pivot_col.size(); ++r2) sol[pivot_col[r2]] = rhs[r2];
    }
    std::vector<Eis> zo_in_basis(k);
    for (size_t i = 0; i < k; ++i) {
        if (!sol[2 * i].is_integer() || !sol[2 * i + 1].is_integer())
            throw std::logic_error("z_o has non-integral coordinates in the span basis");
        zo_in_basis[i] = Eis{sol[2 * i].num, sol[2 * i + 1].num};
    }
    LatticeVector z_abs = abstract->vector(zo_in_basis);

    struct Model {
        std::string tag;
        LatticePtr lattice;
        std::vector<int> z_coords01;
    };
    std::vector<Model> models;
    models.push_back({"(6)", lambda_lattice(2), {1, 1}});
    {
        EMat g99(2, 2);
        g99(0, 0) = Eis{3};
        g99(1, 1) = Eis{3};
        models.push_back({"(9)", HermitianLattice::create(g99), {1, 1}});
    }
    models.push_back({"(6,9)", lambda_lattice(3), {1, 1, 0}});
    models.push_back({"(9,9)", lambda_lattice(3), {1, 0, 1}});
    models.push_back({"(6,9,9)", lambda_lattice(4), {1, 1, 0, 0}});

    std::string matched;
    for (const auto& model : models) {
        if (model.lattice->rank != k) continue;
        std::vector<LatticeVector> chosen;
        if (find_pair_isometry(model.lattice->gram, model.z_coords01, threes, z_abs, chosen)) {
            if (!matched.empty()) throw std::logic_error("span matched two distinct models");
            matched = model.tag;
        }
    }
    if (matched.empty()) throw std::domain_error("span does not match any of the five models");

    SpanType out;
    out.tag = matched;
    std::vector<LatticeVector> comp = orthogonal_complement(L, basis);
    out.complement_rank = comp.size();
    EMat cg = gram_of(comp);
    LatticePtr comp_lat = HermitianLattice::create(cg);
    out.complement_signature = comp_lat->signature();
    out.complement_discriminant = comp_lat->discriminant();
    return out;
}

}  // namespace eislat

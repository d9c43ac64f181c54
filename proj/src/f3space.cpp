#include "eislat/f3space.hpp"

#include <algorithm>
#include <map>

namespace eislat {

F3Vec4 reduce_vector_mod_theta(const LatticeVector& x) {
    if (x.c.size() != 4) throw std::invalid_argument("mod-theta vector reduction needs rank 4");
    F3Vec4 v;
    for (size_t i = 0; i < 4; ++i) v[i] = reduce_mod_theta(x.c[i]);
    return v;
}

F3 symplectic_product(const LatticePtr& L, const F3Vec4& x, const F3Vec4& y) {
    F3 acc(0);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            Eis p = theta() * L->gram(i, j);
            F3 sij = reduce_mod_theta(Eis{p.a / 3, p.b / 3});
            acc = acc + x[i] * sij * y[j];
        }
    return acc;
}

bool f3_is_zero(const F3Vec4& x) {
    for (F3 t : x)
        if (!t.is_zero()) return false;
    return true;
}

static F3Vec4 scale(const F3Vec4& x, F3 s) {
    F3Vec4 r;
    for (size_t i = 0; i < 4; ++i) r[i] = s * x[i];
    return r;
}

static F3Vec4 add(const F3Vec4& x, const F3Vec4& y) {
    F3Vec4 r;
    for (size_t i = 0; i < 4; ++i) r[i] = x[i] + y[i];
    return r;
}

bool f3_equal_projectively(const F3Vec4& x, const F3Vec4& y) {
    if (f3_is_zero(x) || f3_is_zero(y)) return false;
    return x == y || x == scale(y, F3(2));
}

std::vector<F3Vec4> f3_nonzero_vectors() {
    std::vector<F3Vec4> out;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d) {
                    F3Vec4 v{F3(a), F3(b), F3(c), F3(d)};
                    if (!f3_is_zero(v)) out.push_back(v);
                }
    return out;
}

static F3Vec4 line_rep(const F3Vec4& x) {
    for (size_t i = 0; i < 4; ++i)
        if (!x[i].is_zero()) return x[i] == F3(1) ? x : scale(x, F3(2));
    throw std::invalid_argument("line of the zero vector");
}

std::vector<F3Vec4> f3_lines() {
    std::vector<F3Vec4> out;
    for (const F3Vec4& v : f3_nonzero_vectors()) {
        F3Vec4 r = line_rep(v);
        if (r == v) out.push_back(v);
    }
    return out;  // 40 of them, in enumeration order
}

size_t f3_line_id(const F3Vec4& v) {
    static const std::vector<F3Vec4> lines = f3_lines();
    F3Vec4 r = line_rep(v);
    for (size_t i = 0; i < lines.size(); ++i)
        if (lines[i] == r) return i;
    throw std::logic_error("line lookup failed");
}

std::vector<F3Plane> f3_planes(const LatticePtr& L) {
    std::vector<F3Vec4> lines = f3_lines();
    std::map<std::vector<size_t>, F3Plane> planes;
    auto line_id = [&](const F3Vec4& v) -> size_t {
        F3Vec4 r = line_rep(v);
        for (size_t i = 0; i < lines.size(); ++i)
            if (lines[i] == r) return i;
        throw std::logic_error("line lookup failed");
    };
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            std::vector<size_t> ids;
            for (int s = 0; s < 3; ++s)
                for (int t = 0; t < 3; ++t) {
                    if (s == 0 && t == 0) continue;
                    F3Vec4 v = add(scale(lines[i], F3(s)), scale(lines[j], F3(t)));
                    if (f3_is_zero(v)) continue;
                    size_t id = line_id(v);
                    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
                }
            std::sort(ids.begin(), ids.end());
            if (planes.count(ids)) continue;
            F3Plane p;
            p.basis = {lines[i], lines[j]};
            p.line_ids = ids;
            p.nondegenerate = !symplectic_product(L, lines[i], lines[j]).is_zero();
            planes.emplace(ids, std::move(p));
        }
    std::vector<F3Plane> out;
    for (auto& [k, v] : planes) out.push_back(std::move(v));
    return out;
}

}  // namespace eislat

#pragma once

#include <json.hpp>

#include "eislat/binforms.hpp"
#include "eislat/lattice.hpp"

namespace eislat {

using Json = nlohmann::ordered_json;

inline Json to_json(const Eis& x) { return Json::array({x.a, x.b}); }

inline Eis eis_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("Eisenstein integer must be [a, b]");
    return Eis{j[0].get<int64_t>(), j[1].get<int64_t>()};
}

inline Json to_json(const LatticeVector& v) {
    Json a = Json::array();
    for (const Eis& e : v.c) a.push_back(to_json(e));
    return a;
}

inline Json to_json(const LatticePtr& L) {
    Json g = Json::array();
    for (size_t i = 0; i < L->rank; ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < L->rank; ++j) row.push_back(to_json(L->gram(i, j)));
        g.push_back(row);
    }
    return Json{{"rank", L->rank}, {"gram", g}};
}

inline LatticePtr lattice_from_json(const Json& j) {
    if (j.is_string()) return standard_lattice(j.get<std::string>());
    size_t rank = j.at("rank").get<size_t>();
    EMat g(rank, rank);
    const Json& rows = j.at("gram");
    for (size_t i = 0; i < rank; ++i)
        for (size_t k = 0; k < rank; ++k) g(i, k) = eis_from_json(rows.at(i).at(k));
    return HermitianLattice::create(std::move(g));
}

inline LatticeVector vector_from_json(const LatticePtr& L, const Json& j) {
    std::vector<Eis> c;
    for (const Json& e : j) c.push_back(eis_from_json(e));
    return L->vector(std::move(c));
}

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<int64_t>());
    if (j.is_array() && j.size() == 2) return Rat(j[0].get<int64_t>(), j[1].get<int64_t>());
    throw std::invalid_argument("rational must be an integer or [num, den]");
}

inline BinaryForm form_from_json(size_t degree, const Json& j) {
    if (!j.is_array() || j.size() != degree + 1)
        throw std::invalid_argument("form of degree d needs d+1 coefficients");
    std::vector<Rat> c;
    for (const Json& e : j) c.push_back(rat_from_json(e));
    return BinaryForm(degree, std::move(c));
}

}  // namespace eislat

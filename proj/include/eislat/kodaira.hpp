#pragma once

#include <string>
#include <vector>

namespace eislat {

// Kodaira fiber types: I_k (k >= 0), I*_k (k >= 0), II, III, IV, IV*, III*, II*.
struct KodairaType {
    enum class Kind { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };
    Kind kind = Kind::I;
    int k = 0;  // only for I / Istar

    friend bool operator==(const KodairaType& x, const KodairaType& y) {
        return x.kind == y.kind && x.k == y.k;
    }
    friend bool operator<(const KodairaType& x, const KodairaType& y) {
        if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
        return x.k < y.k;
    }
    std::string name() const;
    static KodairaType parse(const std::string& s);
};

enum class JClass { zero, one, infinity, generic };

// Euler characteristic: I_k -> k, I*_k -> k+6, II,III,IV,IV*,III*,II* ->
// 2,3,4,8,9,10.
int euler_char(const KodairaType& t);

// Rank of the root system spanned by the fiber components other than the one
// met by the section: I_k -> k-1 (k >= 1), I*_k -> 4+k, II -> 0, III -> 1,
// IV -> 2, IV* -> 6, III* -> 7, II* -> 8.
int fiber_root_rank(const KodairaType& t);

// The fiber over a point with modular value j, local degree deg and Euler
// characteristic chi; throws on inconsistent triples.
KodairaType kodaira_type(JClass j, int local_degree, int euler);

// A candidate configuration: multiset of singular fibers.
struct FiberConfiguration {
    std::vector<KodairaType> fibers;  // sorted
    int j_degree = 0;                 // total degree of the modular function

    friend bool operator==(const FiberConfiguration& x, const FiberConfiguration& y) {
        return x.fibers == y.fibers;
    }
    friend bool operator<(const FiberConfiguration& x, const FiberConfiguration& y) {
        return x.fibers < y.fibers;
    }
};

// All multisets of singular Kodaira fibers with total Euler characteristic
// 12 that pass the degree-bookkeeping feasibility over 0, 1, infinity for a
// nonconstant modular function of degree <= 12, and the rank-8 root bound.
// Necessary conditions only: these are candidate configurations.
std::vector<FiberConfiguration> enumerate_configurations();

// The individual feasibility filters (exposed for tests).
bool configuration_feasible(const std::vector<KodairaType>& fibers);

}  // namespace eislat

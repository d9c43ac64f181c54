#include "eislat/kodaira.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eislat {

std::string KodairaType::name() const {
    switch (kind) {
        case Kind::I: return "I" + std::to_string(k);
        case Kind::Istar: return "I" + std::to_string(k) + "*";
        case Kind::II: return "II";
        case Kind::III: return "III";
        case Kind::IV: return "IV";
        case Kind::IVstar: return "IV*";
        case Kind::IIIstar: return "III*";
        case Kind::IIstar: return "II*";
    }
    return "?";
}

KodairaType KodairaType::parse(const std::string& s) {
    if (s == "II") return {Kind::II, 0};
    if (s == "III") return {Kind::III, 0};
    if (s == "IV") return {Kind::IV, 0};
    if (s == "IV*") return {Kind::IVstar, 0};
    if (s == "III*") return {Kind::IIIstar, 0};
    if (s == "II*") return {Kind::IIstar, 0};
    if (s.size() >= 2 && s[0] == 'I') {
        bool star = s.back() == '*';
        std::string num = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos)
            return {star ? Kind::Istar : Kind::I, std::stoi(num)};
    }
    throw std::invalid_argument("unknown Kodaira type: " + s);
}

int euler_char(const KodairaType& t) {
    switch (t.kind) {
        case KodairaType::Kind::I: return t.k;
        case KodairaType::Kind::Istar: return t.k + 6;
        case KodairaType::Kind::II: return 2;
        case KodairaType::Kind::III: return 3;
        case KodairaType::Kind::IV: return 4;
        case KodairaType::Kind::IVstar: return 8;
        case KodairaType::Kind::IIIstar: return 9;
        case KodairaType::Kind::IIstar: return 10;
    }
    throw std::logic_error("bad kodaira kind");
}

int fiber_root_rank(const KodairaType& t) {
    switch (t.kind) {
        case KodairaType::Kind::I: return t.k >= 1 ? t.k - 1 : 0;
        case KodairaType::Kind::Istar: return 4 + t.k;
        case KodairaType::Kind::II: return 0;
        case KodairaType::Kind::III: return 1;
        case KodairaType::Kind::IV: return 2;
        case KodairaType::Kind::IVstar: return 6;
        case KodairaType::Kind::IIIstar: return 7;
        case KodairaType::Kind::IIstar: return 8;
    }
    throw std::logic_error("bad kodaira kind");
}

KodairaType kodaira_type(JClass j, int local_degree, int euler) {
    using K = KodairaType::Kind;
    auto fail = [&] {
        throw std::invalid_argument("inconsistent (j, degree, euler) triple");
    };
    if (euler < 0) fail();
    switch (j) {
        case JClass::infinity: {
            if (local_degree < 1) fail();
            if (euler == local_degree) return {K::I, local_degree};
            if (euler == local_degree + 6) return {K::Istar, local_degree};
            fail();
            break;
        }
        case JClass::zero: {
            if (local_degree < 1) fail();
            switch (local_degree % 3) {
                case 0:
                    if (euler == 0) return {K::I, 0};
                    if (euler == 6) return {K::Istar, 0};
                    fail();
                    break;
                case 1:
                    if (euler == 2) return {K::II, 0};
                    if (euler == 8) return {K::IVstar, 0};
                    fail();
                    break;
                case 2:
                    if (euler == 4) return {K::IV, 0};
                    if (euler == 10) return {K::IIstar, 0};
                    fail();
                    break;
            }
            break;
        }
        case JClass::one: {
            if (local_degree < 1) fail();
            if (local_degree % 2 == 0) {
                if (euler == 0) return {K::I, 0};
                if (euler == 6) return {K::Istar, 0};
                fail();
            } else {
                if (euler == 3) return {K::III, 0};
                if (euler == 9) return {K::IIIstar, 0};
                fail();
            }
            break;
        }
        case JClass::generic: {
            if (euler == 0) return {K::I, 0};
            if (euler == 6) return {K::Istar, 0};
            fail();
            break;
        }
    }
    throw std::logic_error("unreachable");
}

bool configuration_feasible(const std::vector<KodairaType>& fibers) {
    using K = KodairaType::Kind;
    int total_euler = 0, d = 0, rank = 0;
    int s0 = 0;  // sum of residues mod 3 pinned over 0
    int s1 = 0;  // number of fibers pinned over 1 (each of odd degree)
    for (const auto& f : fibers) {
        int chi = euler_char(f);
        if (chi <= 0) return false;  // only singular fibers are listed
        total_euler += chi;
        rank += fiber_root_rank(f);
        switch (f.kind) {
            case K::I:
            case K::Istar:
                d += f.k;
                break;
            case K::II:
            case K::IVstar:
                s0 += 1;
                break;
            case K::IV:
            case K::IIstar:
                s0 += 2;
                break;
            case K::III:
            case K::IIIstar:
                s1 += 1;
                break;
        }
    }
    if (total_euler != 12) return false;
    if (d <= 0 || d > 12) return false;  // nonconstant modular function only
    if (rank > 8) return false;
    // over 0: pinned fibers contribute their residues, all other preimages
    // have degree divisible by 3
    if (d < s0 || (d - s0) % 3 != 0) return false;
    // over 1: pinned fibers have odd degree, others even
    if (d < s1 || (d - s1) % 2 != 0) return false;
    return true;
}

std::vector<FiberConfiguration> enumerate_configurations() {
    // universe of singular types, in a fixed order
    std::vector<KodairaType> universe;
    for (int k = 1; k <= 12; ++k) universe.push_back({KodairaType::Kind::I, k});
    for (int k = 0; k <= 6; ++k) universe.push_back({KodairaType::Kind::Istar, k});
    universe.push_back({KodairaType::Kind::II, 0});
    universe.push_back({KodairaType::Kind::III, 0});
    universe.push_back({KodairaType::Kind::IV, 0});
    universe.push_back({KodairaType::Kind::IVstar, 0});
    universe.push_back({KodairaType::Kind::IIIstar, 0});
    universe.push_back({KodairaType::Kind::IIstar, 0});

    std::vector<FiberConfiguration> out;
    std::vector<KodairaType> cur;
    // multisets: nondecreasing index into the universe
    std::function<void(size_t, int)> rec = [&](size_t start, int remaining) {
        if (remaining == 0) {
            if (configuration_feasible(cur)) {
                FiberConfiguration fc;
                fc.fibers = cur;
                std::sort(fc.fibers.begin(), fc.fibers.end());
                for (const auto& f : fc.fibers)
                    if (f.kind == KodairaType::Kind::I || f.kind == KodairaType::Kind::Istar)
                        fc.j_degree += f.k;
                out.push_back(std::move(fc));
            }
            return;
        }
        for (size_t i = start; i < universe.size(); ++i) {
            int chi = euler_char(universe[i]);
            if (chi > remaining) continue;
            cur.push_back(universe[i]);
            rec(i, remaining - chi);
            cur.pop_back();
        }
    };
    rec(0, 12);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace eislat

#include "eislat/parse.hpp"

#include <cctype>

namespace eislat {

namespace {

struct Parser {
    std::string s;
    size_t pos = 0;

    explicit Parser(const std::string& text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    char take() { return s[pos++]; }

    int64_t integer() {
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) throw std::invalid_argument("expected a number in vector expression");
        return std::stoll(s.substr(start, pos - start));
    }

    // factor := integer | 'w' ['^' int] | 'th' | 'r' int
    // returns either a scalar factor or a basis index (via out-param)
    Eis factor(int& basis_index) {
        if (std::isdigit(static_cast<unsigned char>(peek()))) return Eis{integer()};
        if (peek() == 'w') {
            take();
            int e = 1;
            if (peek() == '^') {
                take();
                e = static_cast<int>(integer());
            }
            return omega_pow(e);
        }
        if (peek() == 't') {
            take();
            if (peek() != 'h') throw std::invalid_argument("unknown symbol in vector expression");
            take();
            return theta();
        }
        if (peek() == 'r') {
            take();
            if (basis_index >= 0) throw std::invalid_argument("two basis symbols in one term");
            basis_index = static_cast<int>(integer());
            return Eis{1};
        }
        throw std::invalid_argument(std::string("unexpected character '") + peek() +
                                    "' in vector expression");
    }

    // term := [sign] factor {'*' factor}
    Eis term(int& basis_index) {
        Eis coef{1};
        basis_index = -1;
        if (peek() == '+' || peek() == '-') {
            if (take() == '-') coef = Eis{-1};
        }
        coef = coef * factor(basis_index);
        while (peek() == '*') {
            take();
            coef = coef * factor(basis_index);
        }
        return coef;
    }
};

}  // namespace

LatticeVector parse_vector(const LatticePtr& L, const std::string& text) {
    Parser p(text);
    std::vector<Eis> coords(L->rank);
    if (p.done()) throw std::invalid_argument("empty vector expression");
    while (!p.done()) {
        int idx = -1;
        Eis coef = p.term(idx);
        if (idx < 1 || static_cast<size_t>(idx) > L->rank)
            throw std::invalid_argument("basis index out of range in vector expression");
        coords[static_cast<size_t>(idx - 1)] += coef;
    }
    return L->vector(std::move(coords));
}

Eis parse_scalar(const std::string& text) {
    Parser p(text);
    Eis acc{0};
    if (p.done()) throw std::invalid_argument("empty scalar expression");
    while (!p.done()) {
        int idx = -1;
        Eis coef = p.term(idx);
        if (idx != -1) throw std::invalid_argument("basis symbol in scalar expression");
        acc += coef;
    }
    return acc;
}

}  // namespace eislat

#include "grk/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace grk {

LaurentPoly LaurentPoly::monomial(const Coeff& c, long exp) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(long exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Coeff(0) : it->second;
}

void LaurentPoly::set_coeff(long exp, const Coeff& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) {
            auto it = r.coeffs_.find(e1 + e2);
            if (it == r.coeffs_.end())
                r.coeffs_.emplace(e1 + e2, c1 * c2);
            else {
                it->second += c1 * c2;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(long exp) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + exp] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Coeff& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, k] : coeffs_) r.coeffs_[e] = k * c;
    return r;
}

bool LaurentPoly::has_negative_coeff() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return true;
    return false;
}

bool LaurentPoly::is_bar_invariant() const {
    for (const auto& [e, c] : coeffs_)
        if (coeff(-e) != c) return false;
    return true;
}

bool LaurentPoly::in_q_nonneg() const {
    for (const auto& [e, c] : coeffs_)
        if (e <= 0 || c < 0) return false;
    return true;
}

LaurentPoly::Coeff LaurentPoly::eval_at_one() const {
    Coeff s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Coeff a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
    LaurentPoly r;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("empty polynomial text");
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (!first || s[i] == '+' || s[i] == '-') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
                throw std::invalid_argument("expected '+' or '-' in: " + s);
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        std::string digits;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
        Coeff a = digits.empty() ? Coeff(1) : Coeff(digits);
        long e = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool neg = false;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
                std::string ed;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) ed += s[i++];
                if (ed.empty()) throw std::invalid_argument("missing exponent in: " + s);
                e = std::stol(ed);
                if (neg) e = -e;
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("expected term in: " + s);
        }
        r += monomial(sign * a, e);
        skip_ws();
        first = false;
    }
    return r;
}

LaurentPoly quantum_int(long n) {
    if (n < 0) throw std::domain_error("quantum_int: n < 0");
    LaurentPoly r;
    for (long k = n - 1; k >= 1 - n; k -= 2) r += LaurentPoly::q(k);
    return r;
}

LaurentPoly quantum_factorial(long n) {
    if (n < 0) throw std::domain_error("quantum_factorial: n < 0");
    LaurentPoly r(1);
    for (long k = 2; k <= n; ++k) r *= quantum_int(k);
    return r;
}

LaurentPoly quantum_binomial(long n, long m) {
    if (m < 0 || m > n) throw std::domain_error("quantum_binomial: need 0 <= m <= n");
    auto q = exact_div(quantum_factorial(n), quantum_factorial(n - m) * quantum_factorial(m));
    if (!q) throw std::logic_error("quantum_binomial: inexact division");
    return *q;
}

LaurentPoly bar(const LaurentPoly& f) {
    LaurentPoly r;
    for (const auto& [e, c] : f.terms()) r.set_coeff(-e, c);
    return r;
}

// Long division from the top exponent.  If f = h*g with h in Z[q,q^-1],
// the exponents of h lie in [min f - min g, max f - max g] (lowest and
// highest products cannot cancel over an integral domain), which bounds
// the loop and detects inexactness.
std::optional<LaurentPoly> exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (f.is_zero()) return LaurentPoly();
    long lo = f.min_exp() - g.min_exp();
    const long gtop = g.max_exp();
    const LaurentPoly::Coeff& b = g.terms().rbegin()->second;
    LaurentPoly h, r = f;
    while (!r.is_zero()) {
        long m = r.max_exp();
        if (m - gtop < lo) return std::nullopt;
        LaurentPoly::Coeff a = r.coeff(m);
        if (a % b != 0) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(a / b, m - gtop);
        h += t;
        r -= t * g;
    }
    return h;
}

} // namespace grk

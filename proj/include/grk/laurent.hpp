#pragma once

#include <gmpxx.h>
#include <map>
#include <optional>
#include <string>

namespace grk {

// Element of Z[q,q^-1]: sparse exponent -> coefficient map, no zero
// coefficients stored, so equality of maps is equality of polynomials.
class LaurentPoly {
public:
    using Coeff = mpz_class;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c) coeffs_[0] = c; }
    LaurentPoly(const Coeff& c) { if (c != 0) coeffs_[0] = c; }

    static LaurentPoly monomial(const Coeff& c, long exp);
    static LaurentPoly q(long exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<long, Coeff>& terms() const { return coeffs_; }

    // zero polynomial has no degrees; callers must check is_zero() first
    long min_exp() const { return coeffs_.begin()->first; }
    long max_exp() const { return coeffs_.rbegin()->first; }

    Coeff coeff(long exp) const;
    void set_coeff(long exp, const Coeff& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator*=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    // multiply by c*q^exp
    LaurentPoly shifted(long exp) const;
    LaurentPoly scaled(const Coeff& c) const;

    bool has_negative_coeff() const;
    bool is_bar_invariant() const;
    // true iff in q*Z_{>=0}[q]: no constant term, no negative exponents, coeffs >= 0
    bool in_q_nonneg() const;

    Coeff eval_at_one() const;

    std::string str() const;
    static LaurentPoly parse(const std::string& s);

private:
    std::map<long, Coeff> coeffs_;
};

// q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0
LaurentPoly quantum_int(long n);
// [n]! = [n][n-1]...[1]; [0]! = 1
LaurentPoly quantum_factorial(long n);
// [n]! / ([n-m]! [m]!)
LaurentPoly quantum_binomial(long n, long m);

// q -> q^-1
LaurentPoly bar(const LaurentPoly& f);

// f/g in Z[q,q^-1] when the division is exact, nullopt otherwise.
// Throws std::domain_error for g = 0.
std::optional<LaurentPoly> exact_div(const LaurentPoly& f, const LaurentPoly& g);

} // namespace grk

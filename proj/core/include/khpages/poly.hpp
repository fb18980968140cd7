#pragma once

#include <map>
#include <string>
#include <utility>

namespace khpages {

/// Integer-coefficient Laurent polynomial in one variable.
class LaurentPoly {
public:
    using Terms = std::map<int, long long>;

    LaurentPoly() = default;
    static LaurentPoly one() { return term(1, 0); }
    static LaurentPoly term(long long coeff, int exp);

    void add_term(long long coeff, int exp);
    LaurentPoly operator+(const LaurentPoly&) const;
    LaurentPoly operator-(const LaurentPoly&) const;
    LaurentPoly operator*(const LaurentPoly&) const;
    LaurentPoly pow(int n) const;  // n >= 0
    bool operator==(const LaurentPoly&) const = default;

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    /// Ascending exponents, e.g. "q^2 + q^6 - q^8"; "1" for the unit, "0" when empty.
    std::string to_string(const std::string& var = "q") const;

    /// Render with exponents halved: a stored exponent j prints as var^(j/2).
    /// Even j renders as an integer power, odd j as "var^(j/2)".
    std::string to_string_half_exponents(const std::string& var = "q") const;

    /// Exact evaluation at var = i (the imaginary unit): returns (re, im).
    std::pair<long long, long long> eval_at_i() const;

private:
    Terms terms_;
};

}  // namespace khpages

#include "khpages/poly.hpp"

#include <cstdlib>
#include <stdexcept>

namespace khpages {

LaurentPoly LaurentPoly::term(long long coeff, int exp) {
    LaurentPoly p;
    p.add_term(coeff, exp);
    return p;
}

void LaurentPoly::add_term(long long coeff, int exp) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (auto [e, c] : rhs.terms_) out.add_term(c, e);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (auto [e, c] : rhs.terms_) out.add_term(-c, e);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (auto [e1, c1] : terms_)
        for (auto [e2, c2] : rhs.terms_) out.add_term(c1 * c2, e1 + e2);
    return out;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly out = one();
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
}

namespace {

std::string monomial(long long coeff, const std::string& var, const std::string& exp_text,
                     bool exp_is_zero) {
    long long mag = std::llabs(coeff);
    std::string s;
    if (exp_is_zero) return std::to_string(mag);
    if (mag != 1) s += std::to_string(mag);
    s += var;
    if (exp_text != "1") s += "^" + exp_text;
    return s;
}

std::string render(const LaurentPoly::Terms& terms, const std::string& var, bool half) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto [e, c] : terms) {
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string exp_text;
        bool zero_exp = e == 0;
        if (!half) {
            exp_text = std::to_string(e);
        } else if (e % 2 == 0) {
            exp_text = std::to_string(e / 2);
        } else {
            exp_text = "(" + std::to_string(e) + "/2)";
        }
        out += monomial(c, var, exp_text, zero_exp);
    }
    return out;
}

}  // namespace

std::string LaurentPoly::to_string(const std::string& var) const { return render(terms_, var, false); }

std::string LaurentPoly::to_string_half_exponents(const std::string& var) const {
    return render(terms_, var, true);
}

std::pair<long long, long long> LaurentPoly::eval_at_i() const {
    long long re = 0, im = 0;
    for (auto [e, c] : terms_) {
        int r = ((e % 4) + 4) % 4;
        switch (r) {
            case 0: re += c; break;
            case 1: im += c; break;
            case 2: re -= c; break;
            case 3: im -= c; break;
        }
    }
    return {re, im};
}

}  // namespace khpages

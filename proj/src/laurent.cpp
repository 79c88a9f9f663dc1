#include "gaussforge/laurent.hpp"

#include <cstdlib>

namespace gaussforge {

LaurentPolynomial LaurentPolynomial::monomial(long long coeff, int exponent) {
    LaurentPolynomial p;
    p.add_term(exponent, coeff);
    return p;
}

bool LaurentPolynomial::is_unit() const {
    return terms_.size() == 1 && terms_.count(0) && terms_.at(0) == 1;
}

long long LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(int exponent, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
    *this = *this * other;
    return *this;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [exponent, coeff] = *it;
        if (out.empty())
            out += coeff < 0 ? "-" : "";
        else
            out += coeff < 0 ? " - " : " + ";
        const long long mag = std::llabs(coeff);
        if (mag != 1 || exponent == 0) out += std::to_string(mag);
        if (exponent != 0) {
            out += "A";
            if (exponent != 1) out += "^" + std::to_string(exponent);
        }
    }
    return out;
}

} // namespace gaussforge

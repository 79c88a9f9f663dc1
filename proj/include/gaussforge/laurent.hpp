#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace gaussforge {

// Laurent polynomial in one variable A with integer coefficients. The default
// value is zero; no zero coefficients are stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    static LaurentPolynomial unit() { return monomial(1, 0); }
    static LaurentPolynomial monomial(long long coeff, int exponent);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_unit() const;
    long long coefficient(int exponent) const;
    const std::map<int, long long>& terms() const noexcept { return terms_; }

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a -= b;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    bool operator==(const LaurentPolynomial&) const = default;

    // Terms in descending exponent, e.g. "A^-4 + A^-12 - A^-16", "1", "0".
    std::string to_string() const;

private:
    void add_term(int exponent, long long coeff);

    std::map<int, long long> terms_;
};

} // namespace gaussforge

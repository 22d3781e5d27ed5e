#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace rookpoly {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial in t with exact integer coefficients; the
// coefficient vector carries no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;  // the zero polynomial
    IntPolynomial(std::initializer_list<long long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial one() { return IntPolynomial{1}; }
    static IntPolynomial t_power(int k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    BigInt operator()(const BigInt& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    // This polynomial times t^k.
    IntPolynomial shifted(int k) const;

    // Exact division by (1 - t); throws std::domain_error when 1 is not a
    // root.
    IntPolynomial divided_by_one_minus_t() const;

    // Human-readable form, e.g. "1 + 12t + 36t^2"; csv() is the bare
    // coefficient list "1,12,36".
    std::string str() const;
    std::string csv() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

}  // namespace rookpoly

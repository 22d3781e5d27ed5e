#include "rookpoly/polynomial.hpp"

#include <stdexcept>

namespace rookpoly {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial IntPolynomial::t_power(int k) {
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[i + k] += a.coeffs_[i] * b.coeffs_[k];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divided_by_one_minus_t() const {
    if (is_zero()) return {};
    // p = q - t q gives q_k = p_k + q_{k-1}, with p_n = -q_{n-1} as the
    // exactness condition.
    std::vector<BigInt> q(coeffs_.size() - 1, 0);
    BigInt carry = 0;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        carry += coeffs_[k];
        q[k] = carry;
    }
    if (coeffs_.back() != -carry)
        throw std::domain_error("divided_by_one_minus_t: 1 is not a root");
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        BigInt c = coeffs_[k];
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (k == 0 || c != 1) out += c.str();
        if (k >= 1) out += "t";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

std::string IntPolynomial::csv() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ',';
        out += coeffs_[k].str();
    }
    return out;
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace rookpoly

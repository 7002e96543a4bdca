#ifndef QPROFILE_QPOLYNOMIAL_HPP
#define QPROFILE_QPOLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qprofile {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer-coefficient polynomial in the formal variable q, constant
// term first, no trailing zeros.
struct QPolynomial {
    std::vector<BigInt> coeffs;

    QPolynomial() = default;
    QPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }
    static QPolynomial constant(BigInt v) {
        return v == 0 ? QPolynomial() : QPolynomial({std::move(v)});
    }
    // c * q^k
    static QPolynomial monomial(BigInt c, std::size_t k) {
        if (c == 0) return {};
        std::vector<BigInt> v(k + 1, 0);
        v[k] = std::move(c);
        return QPolynomial(std::move(v));
    }
    static QPolynomial one() { return constant(1); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    bool operator==(const QPolynomial& o) const { return coeffs == o.coeffs; }

    QPolynomial operator+(const QPolynomial& o) const {
        std::vector<BigInt> c(std::max(coeffs.size(), o.coeffs.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < coeffs.size()) c[i] += coeffs[i];
            if (i < o.coeffs.size()) c[i] += o.coeffs[i];
        }
        return QPolynomial(std::move(c));
    }

    QPolynomial operator-(const QPolynomial& o) const {
        std::vector<BigInt> c(std::max(coeffs.size(), o.coeffs.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < coeffs.size()) c[i] += coeffs[i];
            if (i < o.coeffs.size()) c[i] -= o.coeffs[i];
        }
        return QPolynomial(std::move(c));
    }

    QPolynomial operator*(const QPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<BigInt> c(coeffs.size() + o.coeffs.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs.size(); ++j)
                c[i + j] += coeffs[i] * o.coeffs[j];
        return QPolynomial(std::move(c));
    }

    BigInt eval(const BigInt& q) const {
        BigInt r = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) r = r * q + coeffs[i];
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            const BigInt& c = coeffs[i];
            if (c == 0) continue;
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (s.empty())
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            bool show_coeff = (a != 1) || i == 0;
            if (show_coeff) s += a.str();
            if (i > 0) {
                if (show_coeff) s += "*";
                s += "q";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
};

// Exact division; throws if the remainder is nonzero. Divisor must have a
// unit (invertible over Z is not required: classic polynomial long division
// works whenever each leading coefficient step divides exactly, which the
// callers guarantee).
inline QPolynomial divide_exact(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree())
        throw std::domain_error("exact polynomial division has nonzero remainder");
    std::vector<BigInt> rem = num.coeffs;
    std::vector<BigInt> quo(num.coeffs.size() - den.coeffs.size() + 1, 0);
    const BigInt& lead = den.coeffs.back();
    for (std::size_t i = rem.size(); i-- + 1 > den.coeffs.size();) {
        if (rem[i] == 0) continue;
        if (rem[i] % lead != 0)
            throw std::domain_error("exact polynomial division has nonzero remainder");
        BigInt f = rem[i] / lead;
        std::size_t shift = i + 1 - den.coeffs.size();
        quo[shift] = f;
        for (std::size_t j = 0; j < den.coeffs.size(); ++j)
            rem[shift + j] -= f * den.coeffs[j];
    }
    for (const BigInt& r : rem)
        if (r != 0) throw std::domain_error("exact polynomial division has nonzero remainder");
    return QPolynomial(std::move(quo));
}

// q^n - 1
inline QPolynomial q_pow_minus_one(std::size_t n) {
    std::vector<BigInt> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    return QPolynomial(std::move(c));
}

struct SignedQPolynomial {
    int sign = 1;  // +1 or -1; +1 for zero
    QPolynomial magnitude;

    QPolynomial signed_poly() const {
        return sign >= 0 ? magnitude : QPolynomial() - magnitude;
    }
    std::string to_string() const {
        return (sign >= 0 ? std::string("+") : std::string("-")) +
               (magnitude.degree() > 0 ? "(" + magnitude.to_string() + ")"
                                       : magnitude.to_string());
    }
};

}  // namespace qprofile

#endif

#pragma once

#include "ehrkit/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ehrkit {

/// Dense univariate polynomial over the rationals; coefficients_[d] is the
/// coefficient of t^d. Trailing zeros are trimmed, but the constant slot is
/// always present, so the zero polynomial is {0}.
class Polynomial {
public:
    Polynomial() : coefficients_{Rational(0)} {}

    explicit Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
        trim();
    }

    Polynomial(std::initializer_list<Rational> coefficients)
        : Polynomial(std::vector<Rational>(coefficients)) {}

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    static Polynomial monomial(std::size_t degree, const Rational& c = 1) {
        std::vector<Rational> coefficients(degree + 1, Rational(0));
        coefficients[degree] = c;
        return Polynomial(std::move(coefficients));
    }

    /// t + c
    static Polynomial linear(const Rational& c) { return Polynomial({c, Rational(1)}); }

    std::size_t degree() const { return coefficients_.size() - 1; }
    bool is_zero() const { return coefficients_.size() == 1 && coefficients_[0] == 0; }

    const std::vector<Rational>& coefficients() const { return coefficients_; }

    /// Coefficient of t^d; zero beyond the degree.
    Rational coefficient(std::size_t d) const {
        return d < coefficients_.size() ? coefficients_[d] : Rational(0);
    }

    Rational operator()(const Rational& t) const {
        Rational acc = 0;
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
            acc = acc * t + *it;
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& other) {
        if (other.coefficients_.size() > coefficients_.size()) {
            coefficients_.resize(other.coefficients_.size(), Rational(0));
        }
        for (std::size_t d = 0; d < other.coefficients_.size(); ++d) {
            coefficients_[d] += other.coefficients_[d];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        if (other.coefficients_.size() > coefficients_.size()) {
            coefficients_.resize(other.coefficients_.size(), Rational(0));
        }
        for (std::size_t d = 0; d < other.coefficients_.size(); ++d) {
            coefficients_[d] -= other.coefficients_[d];
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& scale) {
        for (auto& c : coefficients_) {
            c *= scale;
        }
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> product(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
            if (a.coefficients_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
                product[i + j] += a.coefficients_[i] * b.coefficients_[j];
            }
        }
        return Polynomial(std::move(product));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coefficients_ == b.coefficients_;
    }

private:
    void trim() {
        if (coefficients_.empty()) {
            coefficients_.emplace_back(0);
        }
        while (coefficients_.size() > 1 && coefficients_.back() == 0) {
            coefficients_.pop_back();
        }
    }

    std::vector<Rational> coefficients_;
};

inline Polynomial power(Polynomial base, unsigned exponent) {
    Polynomial result = Polynomial::constant(1);
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        base = base * base;
        exponent >>= 1U;
    }
    return result;
}

/// Human-readable form, e.g. "1 + 3/2 t + 1/2 t^2". Zero terms are skipped
/// and a unit coefficient is omitted in front of t.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t d = 0; d <= p.degree(); ++d) {
        const Rational& c = p.coefficients()[d];
        if (c == 0) {
            continue;
        }
        const Rational magnitude = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            out = c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (d == 0) {
            out += to_string(magnitude);
            continue;
        }
        if (magnitude != 1) {
            out += to_string(magnitude) + " ";
        }
        out += d == 1 ? "t" : "t^" + std::to_string(d);
    }
    return out;
}

} // namespace ehrkit

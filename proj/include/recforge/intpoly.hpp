#pragma once

#include "recforge/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace recforge {

// Dense integer polynomial, coefficients stored in ascending degree order.
// Canonical form: no trailing zero coefficients; the zero polynomial is the
// empty sequence and its degree is "none".
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    // Coefficient of x^i; zero above the stored degree.
    const BigInt& coeff(std::size_t i) const {
        static const BigInt zero = 0;
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPoly derivative() const {
        std::vector<BigInt> d;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * BigInt(i));
        return IntPoly(std::move(d));
    }

    // this * x^z
    IntPoly shifted_up(std::size_t z) const {
        if (is_zero()) return {};
        std::vector<BigInt> c(z, BigInt(0));
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return IntPoly(std::move(c));
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const BigInt& s, const IntPoly& a) {
        std::vector<BigInt> c = a.coeffs_;
        for (auto& v : c) v *= s;
        return IntPoly(std::move(c));
    }

    IntPoly operator-() const { return BigInt(-1) * *this; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Human-readable form, e.g. "1 - 2x - x^2". Ascending degree.
    std::string to_string(const std::string& var = "x") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (i == 0 || mag != 1) out += mag.str();
            if (i >= 1) {
                out += var;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<BigInt> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

}  // namespace recforge

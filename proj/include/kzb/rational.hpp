/* Copyright 2026 The kzb authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Exact rationals over BigInt, always reduced, denominator > 0.

#ifndef KZB_RATIONAL_HPP
#define KZB_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include "kzb/bigint.hpp"

namespace kzb {

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) < (b.num_ * a.den_);
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    static Rational factorial(int n) {
        BigInt r(1);
        for (int i = 2; i <= n; ++i) r = r * BigInt(i);
        return Rational(r);
    }
    static Rational binomial(int n, int k) {
        if (k < 0 || k > n) return Rational(0);
        BigInt r(1);
        for (int i = 0; i < k; ++i) r = r * BigInt(n - i);
        return Rational(r) / factorial(k);
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    std::string to_string() const {
        if (den_ == BigInt(1)) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

  private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!(g == BigInt(1))) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

// Bernoulli numbers, B and B' variants; they differ only at index 1.
// B' generates t/(e^t - 1), B generates t/(1 - e^{-t}), so B_1 = 1/2 = -B'_1.
enum class BernoulliVariant { B, Bprime };

inline Rational bernoulli(int l, BernoulliVariant variant = BernoulliVariant::B) {
    if (l < 0) throw std::invalid_argument("bernoulli: negative index");
    // b[m] computed from the recursion sum_{j=0}^{m} binom(m+1, j) B'_j = 0 (m >= 1).
    static std::vector<Rational> cache{Rational(1)};
    while (static_cast<int>(cache.size()) <= l) {
        int m = static_cast<int>(cache.size());
        Rational s(0);
        for (int j = 0; j < m; ++j) s += Rational::binomial(m + 1, j) * cache[j];
        cache.push_back(-s / Rational(m + 1));
    }
    Rational b = cache[l];
    if (l == 1 && variant == BernoulliVariant::B) return -b;
    return b;
}

}  // namespace kzb

#endif

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
// The coefficient field Q(2*pi*i), represented as rational functions in a
// formal indeterminate lambda. Reduced fraction, monic denominator. The
// numeric layer maps lambda to the complex value 2*pi*i.

#ifndef KZB_CYC_HPP
#define KZB_CYC_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "kzb/rational.hpp"

namespace kzb {

// Dense univariate polynomial over Q. Empty coefficient vector means zero.
class PolyQ {
  public:
    PolyQ() = default;
    PolyQ(Rational c) {
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    static PolyQ monomial(int deg, Rational c) {
        PolyQ p;
        if (c.is_zero()) return p;
        p.coeffs_.assign(deg + 1, Rational(0));
        p.coeffs_[deg] = std::move(c);
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int i) const { return coeffs_[i]; }
    const Rational& leading() const { return coeffs_.back(); }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
        PolyQ r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.trim();
        return r;
    }
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }
    friend PolyQ operator-(const PolyQ& a) {
        PolyQ r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return PolyQ();
        PolyQ r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

    static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
        if (b.is_zero()) throw std::domain_error("PolyQ: division by zero");
        PolyQ q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            Rational c = r.leading() / b.leading();
            q = q + monomial(d, c);
            r = r - monomial(d, c) * b;
        }
        return {q, r};
    }

    static PolyQ gcd(PolyQ a, PolyQ b) {
        while (!b.is_zero()) {
            PolyQ r = divmod(a, b).second;
            a = b;
            b = r;
        }
        if (!a.is_zero()) {
            // make monic so the gcd is canonical
            Rational inv = a.leading().inverse();
            for (auto& c : a.coeffs_) c *= inv;
        }
        return a;
    }

    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> r = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i].to_double();
        return r;
    }

    std::string to_string(const std::string& var) const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0)
                s += coeffs_[i].to_string();
            else {
                if (!coeffs_[i].is_one()) s += coeffs_[i].to_string() + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    std::vector<Rational> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

class CycScalar {
  public:
    CycScalar() : num_(), den_(Rational(1)) {}
    CycScalar(int v) : num_(Rational(v)), den_(Rational(1)) {}
    CycScalar(long long v) : num_(Rational(v)), den_(Rational(1)) {}
    CycScalar(Rational v) : num_(std::move(v)), den_(Rational(1)) {}
    CycScalar(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    // lambda stands for 2*pi*i
    static CycScalar lambda(int power = 1) {
        return CycScalar(PolyQ::monomial(power, Rational(1)), PolyQ(Rational(1)));
    }
    static CycScalar lambda_pow(int power) {
        if (power >= 0) return lambda(power);
        return CycScalar(PolyQ(Rational(1)), PolyQ::monomial(-power, Rational(1)));
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == PolyQ(Rational(1)) && den_ == PolyQ(Rational(1)); }
    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        return CycScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) {
        return CycScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend CycScalar operator-(const CycScalar& a) {
        CycScalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        return CycScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) {
        if (b.is_zero()) throw std::domain_error("CycScalar: division by zero");
        return CycScalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    CycScalar& operator+=(const CycScalar& b) { return *this = *this + b; }
    CycScalar& operator-=(const CycScalar& b) { return *this = *this - b; }
    CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    CycScalar inverse() const {
        if (is_zero()) throw std::domain_error("CycScalar: inverse of zero");
        return CycScalar(den_, num_);
    }

    std::complex<double> eval_numeric() const {
        static const std::complex<double> two_pi_i(0.0, 2.0 * 3.14159265358979323846);
        return num_.eval(two_pi_i) / den_.eval(two_pi_i);
    }

    std::string to_string() const {
        std::string n = num_.to_string("2\xCF\x80i");  // 2(pi)i
        if (den_ == PolyQ(Rational(1))) return n;
        return "(" + n + ")/(" + den_.to_string("2\xCF\x80i") + ")";
    }

  private:
    PolyQ num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("CycScalar: zero denominator");
        if (num_.is_zero()) {
            den_ = PolyQ(Rational(1));
            return;
        }
        PolyQ g = PolyQ::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = PolyQ::divmod(num_, g).first;
            den_ = PolyQ::divmod(den_, g).first;
        }
        // monic denominator
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            Rational inv = lead.inverse();
            PolyQ scale(inv);
            num_ = num_ * scale;
            den_ = den_ * scale;
        }
    }
};

inline CycScalar cyc_normalize(const PolyQ& num, const PolyQ& den) { return CycScalar(num, den); }

}  // namespace kzb

#endif

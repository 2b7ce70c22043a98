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
// Truncated Laurent series in q over a generic exact coefficient ring.
// A series knows its truncation order: coefficients of q^k are stored for
// valuation <= k <= order. Negative valuations are supported but every
// model in this library only produces non-negative powers.

#ifndef KZB_QSERIES_HPP
#define KZB_QSERIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace kzb {

template <class C>
class QSeries {
  public:
    QSeries() : val_(0), order_(0) {}
    explicit QSeries(int order) : val_(0), order_(order) {}
    QSeries(C constant, int order) : val_(0), order_(order) {
        coeffs_.push_back(std::move(constant));
        normalize();
    }

    static QSeries zero(int order) { return QSeries(order); }
    static QSeries monomial(int power, C c, int order) {
        QSeries s(order);
        if (power <= order) {
            s.val_ = power;
            s.coeffs_.push_back(std::move(c));
        }
        s.normalize();
        return s;
    }

    int order() const { return order_; }
    int valuation() const { return val_; }
    bool is_zero() const { return coeffs_.empty(); }

    C coeff(int power) const {
        if (power < val_ || power >= val_ + static_cast<int>(coeffs_.size())) return C();
        return coeffs_[power - val_];
    }
    void set_coeff(int power, C c) {
        if (power > order_) return;
        if (coeffs_.empty()) {
            val_ = power;
            coeffs_.push_back(std::move(c));
        } else if (power < val_) {
            coeffs_.insert(coeffs_.begin(), val_ - power, C());
            val_ = power;
            coeffs_[0] = std::move(c);
        } else {
            if (power - val_ >= static_cast<int>(coeffs_.size()))
                coeffs_.resize(power - val_ + 1, C());
            coeffs_[power - val_] = std::move(c);
        }
        normalize();
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order_, b.order_));
        int lo = std::min(a.val_, b.val_);
        r.val_ = lo;
        int hi = r.order_;
        for (int k = lo; k <= hi; ++k) r.coeffs_.push_back(a.coeff(k) + b.coeff(k));
        r.normalize();
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }
    friend QSeries operator-(const QSeries& a) {
        QSeries r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r(std::min(a.order_, b.order_));
        if (a.is_zero() || b.is_zero()) return r;
        r.val_ = a.val_ + b.val_;
        if (r.val_ > r.order_) return r;
        r.coeffs_.assign(r.order_ - r.val_ + 1, C());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (is_zero_coeff(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                int k = a.val_ + static_cast<int>(i) + b.val_ + static_cast<int>(j);
                if (k > r.order_) break;
                r.coeffs_[k - r.val_] = r.coeffs_[k - r.val_] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.normalize();
        return r;
    }

    QSeries scaled(const C& c) const {
        QSeries r = *this;
        for (auto& x : r.coeffs_) x = x * c;
        r.normalize();
        return r;
    }

    template <class Fn>
    QSeries mapped(Fn f) const {
        QSeries r = *this;
        for (auto& c : r.coeffs_) c = f(c);
        r.normalize();
        return r;
    }

    QSeries truncated(int order) const {
        QSeries r(std::min(order, order_));
        r.val_ = val_;
        for (int k = val_; k <= r.order_ && k < val_ + static_cast<int>(coeffs_.size()); ++k)
            r.coeffs_.push_back(coeffs_[k - val_]);
        r.normalize();
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        int lo = std::min(a.val_, b.val_);
        int hi = std::min(a.order_, b.order_);
        for (int k = lo; k <= hi; ++k)
            if (!(a.coeff(k) == b.coeff(k))) return false;
        return true;
    }

    template <class Fn>
    std::string to_string(Fn coeff_to_string) const {
        if (is_zero()) return "O(q^" + std::to_string(order_ + 1) + ")";
        std::string s;
        for (int k = val_; k < val_ + static_cast<int>(coeffs_.size()); ++k) {
            if (is_zero_coeff(coeffs_[k - val_])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeff_to_string(coeffs_[k - val_]) + ")";
            if (k != 0) s += "*q^" + std::to_string(k);
        }
        if (s.empty()) s = "0";
        return s + " + O(q^" + std::to_string(order_ + 1) + ")";
    }

  private:
    int val_;
    int order_;
    std::vector<C> coeffs_;  // coeffs_[i] multiplies q^(val_+i)

    static bool is_zero_coeff(const C& c) {
        if constexpr (requires { c.has_terms(); })
            return !c.has_terms();
        else if constexpr (requires { c.is_zero(); })
            return c.is_zero();
        else
            return c == C();
    }

    void normalize() {
        while (!coeffs_.empty() && val_ + static_cast<int>(coeffs_.size()) - 1 > order_)
            coeffs_.pop_back();
        while (!coeffs_.empty() && is_zero_coeff(coeffs_.front())) {
            coeffs_.erase(coeffs_.begin());
            ++val_;
        }
        while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
        if (coeffs_.empty()) val_ = 0;
    }
};

}  // namespace kzb

#endif

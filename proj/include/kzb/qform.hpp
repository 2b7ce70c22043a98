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
// One- and two-forms on C^n whose coefficients are truncated q-series of
// rational functions: the exact home of the q-expanded connections.

#ifndef KZB_QFORM_HPP
#define KZB_QFORM_HPP

#include <vector>

#include "kzb/qseries.hpp"
#include "kzb/ratform.hpp"

namespace kzb {

using QRat = QSeries<RatFunc>;

// exact zero test coefficient by coefficient (the series container only
// prunes structurally empty coefficients)
inline bool qrat_is_zero(const QRat& s) {
    for (int k = s.valuation(); k <= s.order(); ++k)
        if (!s.coeff(k).is_zero()) return false;
    return true;
}

struct QF1 {
    int n = 0;
    int order = 0;
    std::vector<QRat> comp;  // coefficient of dz_i

    QF1() = default;
    QF1(int nvars, int qorder) : n(nvars), order(qorder), comp(nvars, QRat(qorder)) {}

    bool is_zero() const {
        for (const auto& c : comp)
            if (!qrat_is_zero(c)) return false;
        return true;
    }
    friend QF1 operator+(const QF1& a, const QF1& b) {
        QF1 r(std::max(a.n, b.n), std::min(a.order, b.order));
        for (int i = 0; i < r.n; ++i) {
            if (i < a.n) r.comp[i] = r.comp[i] + a.comp[i];
            if (i < b.n) r.comp[i] = r.comp[i] + b.comp[i];
        }
        return r;
    }
    friend QF1 operator-(const QF1& a, const QF1& b) { return a + b.scaled(CycScalar(-1)); }
    QF1 scaled(const CycScalar& c) const {
        QF1 r = *this;
        for (auto& x : r.comp) x = x.mapped([&](const RatFunc& f) { return f.scaled(c); });
        return r;
    }
    QF1 times(const QRat& s) const {
        QF1 r(n, std::min(order, s.order()));
        for (int i = 0; i < n; ++i) r.comp[i] = comp[i] * s;
        return r;
    }
    RatForm1 q_coeff(int k) const {
        RatForm1 r(n);
        for (int i = 0; i < n; ++i) r.add_comp(i, comp[i].coeff(k));
        return r;
    }
    friend bool operator==(const QF1& a, const QF1& b) { return (a - b).is_zero(); }
};

struct QF2 {
    int n = 0;
    int order = 0;
    std::vector<QRat> comp;  // coefficient of dz_i ^ dz_j, pair-indexed

    QF2() = default;
    QF2(int nvars, int qorder)
        : n(nvars), order(qorder), comp(RatFunc::npairs(nvars), QRat(qorder)) {}

    bool is_zero() const {
        for (const auto& c : comp)
            if (!qrat_is_zero(c)) return false;
        return true;
    }
    friend QF2 operator+(const QF2& a, const QF2& b) {
        QF2 r(std::max(a.n, b.n), std::min(a.order, b.order));
        for (std::size_t p = 0; p < r.comp.size(); ++p) {
            if (p < a.comp.size()) r.comp[p] = r.comp[p] + a.comp[p];
            if (p < b.comp.size()) r.comp[p] = r.comp[p] + b.comp[p];
        }
        return r;
    }
    QF2 scaled(const CycScalar& c) const {
        QF2 r = *this;
        for (auto& x : r.comp) x = x.mapped([&](const RatFunc& f) { return f.scaled(c); });
        return r;
    }

    static QF2 wedge(const QF1& a, const QF1& b) {
        int n = std::max(a.n, b.n);
        QF2 r(n, std::min(a.order, b.order));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int p = RatFunc::pair_index(i, j, n);
                QRat t = a.comp[i] * b.comp[j] - a.comp[j] * b.comp[i];
                r.comp[p] = r.comp[p] + t;
            }
        return r;
    }
    static QF2 d(const QF1& a) {
        QF2 r(a.n, a.order);
        for (int i = 0; i < a.n; ++i)
            for (int j = i + 1; j < a.n; ++j) {
                int p = RatFunc::pair_index(i, j, a.n);
                QRat t = a.comp[j].mapped([&](const RatFunc& f) { return f.ddz(i); }) -
                         a.comp[i].mapped([&](const RatFunc& f) { return f.ddz(j); });
                r.comp[p] = r.comp[p] + t;
            }
        return r;
    }
};

}  // namespace kzb

#endif

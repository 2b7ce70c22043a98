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
// Exact q-expansions of the coefficients of the Kronecker function: the
// functions g^(l) written on the multiplicative coordinates, as Laurent
// series in q with coefficients rational over Q(2 pi i) with poles on the
// fixed divisor. Conventions (checked against the theta quotient numerically
// and by the p' images):
//   g^(0) = 1
//   g^(1)(z) = pi i + 2 pi i/(z - 1)
//            - 2 pi i sum_{n>=1} sum_{d|n} (z^{n/d} - z^{-n/d}) q^n
//   g^(l)(z) = (2 pi i)^l B_l / l!
//            - (2 pi i)^l/(l-1)! sum_{n>=1} sum_{d|n} d^{l-1}
//              (z^{n/d} + (-1)^l z^{-n/d}) q^n,   l > 1,
// with z = z_i / z_j and z_0 := 1. The forms phi^(k)_{i,j} are
// g^(k)(z_i/z_j) (dz_i/(2 pi i z_i) - dz_j/(2 pi i z_j)).

#ifndef KZB_EISENSTEIN_HPP
#define KZB_EISENSTEIN_HPP

#include "kzb/qform.hpp"

namespace kzb {

// g^(l)(z_i / z_j) on nvars variables; indices are 1-based with 0 meaning
// the constant point z_0 = 1
inline QRat eisenstein_g(int l, int i, int j, int nvars, int qOrder) {
    if (l < 0) throw std::invalid_argument("eisenstein_g: l >= 0");
    QRat s(qOrder);
    auto Zpow = [&](int m) {  // (z_i/z_j)^m as a RatFunc monomial
        RatFunc r = RatFunc::constant(CycScalar(1), nvars);
        if (i > 0) r = r * RatFunc::zpow_term(CycScalar(1), i - 1, m, nvars);
        if (j > 0) r = r * RatFunc::zpow_term(CycScalar(1), j - 1, -m, nvars);
        return r;
    };
    if (l == 0) {
        s.set_coeff(0, RatFunc::constant(CycScalar(1), nvars));
        return s;
    }
    // constant (q^0) part
    RatFunc c0(nvars);
    if (l == 1) {
        // pi i + 2 pi i / (z_i/z_j - 1)
        CycScalar half_lam = CycScalar::lambda() * CycScalar(Rational(1, 2));
        c0 = RatFunc::constant(half_lam, nvars);
        if (j == 0) {
            c0 = c0 + RatFunc::inv_zm1(CycScalar::lambda(), i - 1, nvars);
        } else if (i == 0) {
            // 2 pi i/(1/z_j - 1) = -2 pi i - 2 pi i/(z_j - 1)
            c0 = c0 + RatFunc::constant(-CycScalar::lambda(), nvars) +
                 RatFunc::inv_zm1(-CycScalar::lambda(), j - 1, nvars);
        } else {
            // 2 pi i z_j / (z_i - z_j)
            int a = i - 1, b = j - 1;
            CycScalar sign = (a < b) ? CycScalar::lambda() : -CycScalar::lambda();
            RatFunc inv = RatFunc::inv_diff(sign, std::min(a, b), std::max(a, b), nvars);
            c0 = c0 + inv * RatFunc::zpow_term(CycScalar(1), b, 1, nvars);
        }
    } else {
        Rational bl = bernoulli(l) / Rational::factorial(l);
        if (!bl.is_zero()) c0 = RatFunc::constant(CycScalar::lambda_pow(l) * CycScalar(bl), nvars);
    }
    s.set_coeff(0, c0);
    // q^n parts
    for (int n = 1; n <= qOrder; ++n) {
        RatFunc cn(nvars);
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            Rational w(1);
            for (int t = 0; t < l - 1; ++t) w *= Rational(d);
            CycScalar pre = -CycScalar::lambda_pow(l) *
                            CycScalar(w / Rational::factorial(l - 1));
            RatFunc term = Zpow(n / d);
            RatFunc term2 = Zpow(-(n / d)).scaled(CycScalar((l % 2) ? -1 : 1));
            cn = cn + (term + term2).scaled(pre);
        }
        s.set_coeff(n, cn);
    }
    return s;
}

// d log-type part of phi: dz_i/(2 pi i z_i) - dz_j/(2 pi i z_j)
inline QF1 dxi_form(int i, int j, int nvars, int qOrder) {
    QF1 f(nvars, qOrder);
    CycScalar inv_lam = CycScalar::lambda_pow(-1);
    if (i > 0)
        f.comp[i - 1] = QRat(RatFunc::zpow_term(inv_lam, i - 1, -1, nvars), qOrder);
    if (j > 0)
        f.comp[j - 1] = QRat(RatFunc::zpow_term(-inv_lam, j - 1, -1, nvars), qOrder);
    return f;
}

// phi^(k)_{i,j} = g^(k)(z_i/z_j) d(xi_i - xi_j) as an exact q-expanded form
inline QF1 phi_form(int k, int i, int j, int nvars, int qOrder) {
    return dxi_form(i, j, nvars, qOrder).times(eisenstein_g(k, i, j, nvars, qOrder));
}

// strict morphism p': the q^0 part (gamma goes to 0); images of phi^(l)
inline RatForm1 pprime_phi(int l, int i, int j, int nvars, int qOrder = 0) {
    return phi_form(l, i, j, nvars, std::max(qOrder, 0)).q_coeff(0);
}

}  // namespace kzb

#endif

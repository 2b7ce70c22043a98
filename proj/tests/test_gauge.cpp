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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kzb/braid_lie.hpp"
#include "kzb/gauge.hpp"

using namespace kzb;

namespace {
// symbol layout shared by the tests: dr_i at ids 0..nr-1, then named 1-forms
constexpr int kDr = 0;
}  // namespace

TEST_CASE("zero gauge leaves a connection unchanged") {
    FreeLie L({"X0", "X1"}, 4);
    GaugeConnection C(&L, 1);
    C.add(1, MPoly::constant(CycScalar(1)), LieQ::generator(&L, "X0"));
    GaugeElement h;  // empty
    GaugeConnection C2 = gauge_transform(C, h, kDr, 4, nullptr);
    CHECK(C2 == C);
}

TEST_CASE("torus smooth sector: the r-gauge turns k*Cbar into r_*C") {
    // one vertical coordinate r; symbols: dr = 0, om^(p) = 1 + p
    int K = 4, maxdeg = 5;
    FreeLie L({"X0", "X1"}, maxdeg);
    auto X0 = LieQ::generator(&L, "X0");
    auto X1 = LieQ::generator(&L, "X1");
    auto om = [&](int p) { return 1 + p; };
    // k* Cbar = nu X0 - sum om^(p) Ad^p_{X0}(X1); nu = lambda dr
    GaugeConnection C(&L, 1);
    C.add(kDr, MPoly::constant(CycScalar::lambda()), X0);
    for (int p = 0; p <= K; ++p)
        C.add(om(p), MPoly::constant(CycScalar(-1)), ad_pow(X0, X1, p));
    // gauge h = -2 pi i r X0
    GaugeElement h;
    h.parts.push_back({MPoly::variable(0, 1).scaled(-CycScalar::lambda()), X0});
    GaugeConnection got = gauge_transform(C, h, kDr, maxdeg, nullptr);
    // expected: r_*C = -sum phi^(p) Ad^p, phi^(p) = sum_j (-lambda r)^j/j! om^(p-j)
    GaugeConnection expect(&L, 1);
    for (int p = 0; p <= K; ++p) {
        for (int j = 0; p + j <= K && j <= maxdeg; ++j) {
            CycScalar c = CycScalar::lambda_pow(j) *
                          CycScalar(Rational((j % 2) ? -1 : 1) / Rational::factorial(j));
            MPoly rj = MPoly::constant(CycScalar(1));
            for (int t = 0; t < j; ++t) rj = rj * MPoly::variable(0, 1);
            expect.add(om(p), rj.scaled(-c), ad_pow(X0, X1, p + j));
        }
    }
    CHECK(got == expect);
}

TEST_CASE("configuration spaces: h_s relates r_*C(1) and r_*C(s)") {
    // n = 2, fiber tbar_{1,3}; symbols: dr_1, dr_2 = 0,1; w(1)^(k)_{(i,j)}
    // enumerated below. s is a rational parameter.
    int n = 2, maxdeg = 4, K = 3;
    auto E = elliptic_tbar(n, maxdeg);
    const FreeLie* L = E.alg.get();
    Rational s(1, 3);
    // symbol ids for w(1)^(k)_{(i,j)} with i > j >= 0
    auto sym = [&](int k, int i, int j) { return n + k * 16 + i * 4 + j; };
    GaugeConnection C1(L, n);
    auto add_tower = [&](int k, int i, int j, const LieQ& lie, const CycScalar& coeff) {
        C1.add(sym(k, i, j), MPoly::constant(coeff), E.pres->reduce(lie));
    };
    // r_*C(1) = -sum w(1)^(0)_{i,0} X_i + nu(1)_i Y_i - towers, nu(1)_i = lambda dr_i
    for (int i = 1; i <= n; ++i) {
        add_tower(0, i, 0, E.X(i), CycScalar(-1));
        C1.add(kDr + (i - 1), MPoly::constant(CycScalar::lambda()), E.pres->reduce(E.Y(i)));
        for (int k = 1; k + 1 <= maxdeg && k <= K; ++k)
            add_tower(k, i, 0, ad_pow(E.Y(i), E.X(i), k), CycScalar(-1));
        for (int j = 1; j < i; ++j)
            for (int k = 1; k + 1 <= maxdeg && k <= K; ++k) {
                // coefficient (w^(k)_{i,0} + w^(k)_{0,j} - w^(k)_{i,j}) on
                // Ad^k_{Y_i}(X_j), with rel2 for the (0,j) slot
                LieQ tower = E.pres->reduce(ad_pow(E.Y(i), E.X(j), k));
                C1.add(sym(k, i, 0), MPoly::constant(CycScalar(-1)), tower);
                C1.add(sym(k, j, 0), MPoly::constant(CycScalar((k % 2) ? 1 : -1) * CycScalar(-1)),
                       tower);
                C1.add(sym(k, i, j), MPoly::constant(CycScalar(1)), tower);
            }
    }
    // gauge h_s = sum_i lambda (s-1) r_i Y_i
    GaugeElement h;
    for (int i = 1; i <= n; ++i)
        h.parts.push_back({MPoly::variable(i - 1, n).scaled(CycScalar::lambda() *
                                                            CycScalar(s - Rational(1))),
                           E.pres->reduce(E.Y(i))});
    GaugeConnection got = gauge_transform(C1, h, kDr, maxdeg, E.pres.get());

    // expected r_*C(s): same shape with w(s)^(k)_{a,b} = sum_j
    // (lambda (s-1) r_{ab})^j / j! w(1)^{(k-j)}_{a,b} and nu(s) = s lambda dr_i
    GaugeConnection expect(L, n);
    auto r_ab = [&](int a, int b) {
        MPoly p;
        if (a > 0) p = p + MPoly::variable(a - 1, n);
        if (b > 0) p = p + MPoly::variable(b - 1, n).scaled(CycScalar(-1));
        return p;
    };
    // w(s)^(k)_{a,b} as a list of (symbol, r-poly): k - j >= 1 uses the stored
    // symbol of the pair; the j = k tail hits w^(0)_{a,b} = w^(0)_{a,0} - w^(0)_{b,0}
    auto add_ws = [&](int k, int a, int b, const LieQ& lie, const CycScalar& coeff) {
        for (int j = 0; j <= k && j <= maxdeg; ++j) {
            CycScalar c = coeff *
                          CycScalar::lambda_pow(j) *
                          CycScalar(Rational(1) / Rational::factorial(j));
            // (s-1)^j
            CycScalar sm1 = CycScalar(s - Rational(1));
            for (int t = 0; t < j; ++t) c = c * sm1;
            MPoly rp = MPoly::constant(CycScalar(1));
            for (int t = 0; t < j; ++t) rp = rp * r_ab(a, b);
            int kk = k - j;
            if (kk >= 1) {
                int aa = a, bb = b;
                CycScalar flip(1);
                if (aa < bb) {
                    std::swap(aa, bb);
                    flip = CycScalar((kk % 2) ? 1 : -1);
                }
                expect.add(sym(kk, aa, bb), rp.scaled(c * flip), lie);
            } else {
                if (a > 0) expect.add(sym(0, a, 0), rp.scaled(c), lie);
                if (b > 0) expect.add(sym(0, b, 0), rp.scaled(-c), lie);
            }
        }
    };
    for (int i = 1; i <= n; ++i) {
        add_ws(0, i, 0, E.pres->reduce(E.X(i)), CycScalar(-1));
        expect.add(kDr + (i - 1), MPoly::constant(CycScalar::lambda() * CycScalar(s)),
                   E.pres->reduce(E.Y(i)));
        for (int k = 1; k + 1 <= maxdeg && k <= K; ++k)
            add_ws(k, i, 0, E.pres->reduce(ad_pow(E.Y(i), E.X(i), k)), CycScalar(-1));
        for (int j = 1; j < i; ++j)
            for (int k = 1; k + 1 <= maxdeg && k <= K; ++k) {
                LieQ tower = E.pres->reduce(ad_pow(E.Y(i), E.X(j), k));
                add_ws(k, i, 0, tower, CycScalar(-1));
                add_ws(k, 0, j, tower, CycScalar(-1));
                add_ws(k, i, j, tower, CycScalar(1));
            }
    }
    // both sides are reduced representatives already; compare
    GaugeConnection got_red = got.reduced(*E.pres);
    GaugeConnection expect_red = expect.reduced(*E.pres);
    CHECK(got_red == expect_red);
}

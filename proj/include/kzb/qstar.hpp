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
// The comparison morphisms between the KZ and KZB fibers: the rank-one map
// on the punctured torus (Hain's map) and its configuration-space extension,
// together with the exact q -> 0 limit identities that characterize them.

#ifndef KZB_QSTAR_HPP
#define KZB_QSTAR_HPP

#include <set>

#include "kzb/braid_lie.hpp"
#include "kzb/eisenstein.hpp"
#include "kzb/kz.hpp"

namespace kzb {

// Q*: Z0 -> -sum_l (B'_l / l!) Ad^l_{2 pi i Y0}(Y1 / 2 pi i),
//     Z1 -> -[2 pi i Y0, Y1 / 2 pi i] = -[Y0, Y1]
inline LieHom<CycScalar> hain_qstar(const FreeLie* src, const FreeLie* dst, int maxdeg) {
    LieHom<CycScalar> h(src, dst);
    auto Y0 = LieQ::generator(dst, "Y0");
    auto Y1 = LieQ::generator(dst, "Y1");
    LieQ z0(dst);
    for (int l = 0; l + 1 <= maxdeg; ++l) {
        CycScalar c = -CycScalar(bernoulli(l, BernoulliVariant::Bprime) / Rational::factorial(l)) *
                      CycScalar::lambda_pow(l - 1);
        z0 = z0 + ad_pow(Y0, Y1, l).cyc_scaled(c);
    }
    h.set_image("Z0", z0);
    h.set_image("Z1", bracket(Y0, Y1).cyc_scaled(CycScalar(-1)));
    return h;
}

// exact limit identity on the torus: p'_*(C_Ell) = (Id (x) Q*) C_KZ,
// compared per Lyndon word of L(Y0, Y1) with rational-form coefficients.
// C_Ell is handed in abstractly as word -> phi-superscript coefficients:
// coeff[word] = sum_p c_p phi^(p), encoded as a map id->(p, scalar).
struct LimitCheckResult {
    bool ok = true;
    std::vector<std::string> mismatches;
};

template <class PhiCoeff>  // word -> vector of (p, CycScalar)
LimitCheckResult limit_tau_check_torus(const FreeLie* LY, const PhiCoeff& cell, int maxdeg) {
    LimitCheckResult out;
    // LHS: apply p' to every coefficient
    std::map<Word, RatForm1> lhs;
    for (const auto& [w, terms] : cell) {
        RatForm1 f(1);
        for (const auto& [p, c] : terms) f = f + pprime_phi(p, 1, 0, 1).scaled(c);
        if (!f.is_zero()) lhs[w] = f;
    }
    // RHS: (dz/z) Q*(Z0) + (dz/(z-1)) Q*(Z1)
    FreeLie LZ({"Z0", "Z1"}, maxdeg);
    LieHom<CycScalar> q = hain_qstar(&LZ, LY, maxdeg);
    RatForm1 dlogz(1), dlogzm1(1);
    dlogz.add_comp(0, RatFunc::zpow_term(CycScalar(1), 0, -1, 1));
    dlogzm1.add_comp(0, RatFunc::inv_zm1(CycScalar(1), 0, 1));
    std::map<Word, RatForm1> rhs;
    for (const auto& [w, c] : q.image("Z0").terms()) rhs[w] = dlogz.scaled(c);
    for (const auto& [w, c] : q.image("Z1").terms()) {
        auto it = rhs.find(w);
        if (it == rhs.end())
            rhs[w] = dlogzm1.scaled(c);
        else
            it->second = it->second + dlogzm1.scaled(c);
    }
    // compare
    std::set<Word> words;
    for (const auto& [w, f] : lhs) words.insert(w);
    for (const auto& [w, f] : rhs) words.insert(w);
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) > maxdeg) continue;
        RatForm1 a = lhs.count(w) ? lhs.at(w) : RatForm1(1);
        RatForm1 b = rhs.count(w) ? rhs.at(w) : RatForm1(1);
        if (!(a == b)) {
            out.ok = false;
            out.mismatches.push_back(word_to_string(w, LY->names()));
        }
    }
    return out;
}

// Q*_n : t_n -> tbar_{1,n+1}. The rows must be the coherent family sending
// every T_P to minus the t_P class of t_{1,n+1} (the printed rows mix both
// orientations and the B-variant; the q->0 limit identity singles out this
// one, and only this one, see the tests):
//   T_{-1,i} -> -sum_j [Y_j, X_i]                       ( = -t_{i,n+1} )
//   T_{0,i}  -> -sum_k (B'_k / k!) Ad^k_{2 pi i Y_i}(X_i / 2 pi i)
//   T_{i,j}  -> +[Y_i, X_j]                             ( = -t_{ij} )
struct QStarN {
    int n;
    const EllipticBraidLie* target;
    std::map<std::pair<int, int>, LieQ> images;

    const LieQ& image(int i, int j) const {
        if (i > j) std::swap(i, j);
        return images.at({i, j});
    }
};

inline QStarN qstar_n(const EllipticBraidLie& E, int n, int maxdeg) {
    QStarN q;
    q.n = n;
    q.target = &E;
    for (int i = 1; i <= n; ++i) {
        LieQ m1(E.alg.get());
        for (int j = 1; j <= n; ++j) m1 = m1 - bracket(E.Y(j), E.X(i));
        q.images[{-1, i}] = E.pres->reduce(m1);
        LieQ m0(E.alg.get());
        for (int k = 0; k + 1 <= maxdeg; ++k) {
            CycScalar c =
                -CycScalar(bernoulli(k, BernoulliVariant::Bprime) / Rational::factorial(k)) *
                CycScalar::lambda_pow(k - 1);
            m0 = m0 + ad_pow(E.Y(i), E.X(i), k).cyc_scaled(c);
        }
        q.images[{0, i}] = E.pres->reduce(m0);
        for (int j = i + 1; j <= n; ++j)
            q.images[{i, j}] = E.pres->reduce(bracket(E.Y(i), E.X(j)));
    }
    return q;
}

// well-definedness: every Kohno-Drinfeld relation maps into the ideal
inline bool qstar_n_well_defined(const QStarN& q, const KohnoDrinfeldLie& KD, int maxdeg) {
    auto im = [&](int i, int j) { return q.image(i, j); };
    int n = q.n;
    for (int a = -1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                if (!KD.has_pair(a, b) || !KD.has_pair(a, c) || !KD.has_pair(b, c)) continue;
                if (!q.target->pres->in_ideal(bracket(im(a, b), im(a, c) + im(b, c)))) return false;
                if (!q.target->pres->in_ideal(bracket(im(a, c), im(a, b) + im(b, c)))) return false;
                if (!q.target->pres->in_ideal(bracket(im(b, c), im(a, b) + im(a, c)))) return false;
            }
    (void)maxdeg;
    return true;
}

}  // namespace kzb

#endif

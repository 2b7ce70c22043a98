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
// The q-expanded KZB connections: on the punctured torus (one variable) and
// on the configuration spaces (the holomorphic s = 0 member of the family),
// with exact flatness of the latter through rational q-series arithmetic --
// the Fay identity is what cancels the cross terms, and here it is verified
// coefficient by coefficient in the exact model rather than assumed.

#ifndef KZB_KZB_Q_HPP
#define KZB_KZB_Q_HPP

#include <map>
#include <set>
#include <vector>

#include "kzb/braid_lie.hpp"
#include "kzb/eisenstein.hpp"
#include "kzb/kz.hpp"
#include "kzb/qstar.hpp"

namespace kzb {

// a connection with exact q-expanded coefficients: sum of (QF1 form) x (Lie)
struct QConnection {
    int n = 0;
    int order = 0;
    const FreeLie* L = nullptr;
    std::vector<std::pair<QF1, Lie<CycScalar>>> terms;
};

// omega_KZB,1 = -sum_p g^(p)(z) dz/(2 pi i z) Ad^p_{X0}(X1)
inline QConnection kzb1(const FreeLie* L, int K, int qOrder) {
    QConnection C;
    C.n = 1;
    C.order = qOrder;
    C.L = L;
    auto X0 = LieQ::generator(L, "X0");
    auto X1 = LieQ::generator(L, "X1");
    for (int p = 0; p <= K; ++p) {
        QF1 f = phi_form(p, 1, 0, 1, qOrder).scaled(CycScalar(-1));
        C.terms.push_back({f, ad_pow(X0, X1, p)});
    }
    return C;
}

// omega_KZB,n at s = 0 (the holomorphic member): fiber tbar_{1,n+1}
//   -sum_i w^(0)_{i,0} X_i - sum_{i, k>=1} w^(k)_{i,0} Ad^k_{Y_i}(X_i)
//   -sum_{j<i, k>=1} (w^(k)_{i,0} + w^(k)_{0,j} - w^(k)_{i,j}) Ad^k_{Y_i}(X_j).
// The cross coefficient carries the index of the Y-tower in its first slot;
// regrouping the pulled-back connection with the shift relation and the
// oddness of the Kronecker coefficients forces this pairing (the printed
// display swaps i and j there, which fails flatness at degree 4).
inline QConnection kzb_n_q(const EllipticBraidLie& E, int n, int lieDeg, int qOrder) {
    QConnection C;
    C.n = n;
    C.order = qOrder;
    C.L = E.alg.get();
    for (int i = 1; i <= n; ++i) {
        C.terms.push_back({phi_form(0, i, 0, n, qOrder).scaled(CycScalar(-1)),
                           E.pres->reduce(E.X(i))});
        for (int k = 1; k + 1 <= lieDeg; ++k)
            C.terms.push_back({phi_form(k, i, 0, n, qOrder).scaled(CycScalar(-1)),
                               E.pres->reduce(ad_pow(E.Y(i), E.X(i), k))});
        for (int j = 1; j < i; ++j)
            for (int k = 1; k + 1 <= lieDeg; ++k) {
                QF1 f = phi_form(k, i, 0, n, qOrder) + phi_form(k, 0, j, n, qOrder) -
                        phi_form(k, i, j, n, qOrder);
                C.terms.push_back({f.scaled(CycScalar(-1)),
                                   E.pres->reduce(ad_pow(E.Y(i), E.X(j), k))});
            }
    }
    return C;
}

// dC + [C,C]/2 with Lie parts reduced modulo the fiber presentation, grouped
// per reduced Lyndon word; empty result means flat at the truncation
inline std::map<Word, QF2> q_flatness_residual(const QConnection& C, const LiePresentation* pres) {
    std::map<Word, QF2> res;
    auto add = [&](const QF2& f, const Lie<CycScalar>& lie) {
        for (const auto& [w, c] : lie.terms()) {
            auto it = res.find(w);
            if (it == res.end())
                res[w] = f.scaled(c);
            else
                it->second = it->second + f.scaled(c);
        }
    };
    for (const auto& [f, l] : C.terms) add(QF2::d(f), pres ? pres->reduce(l) : l);
    for (std::size_t a = 0; a < C.terms.size(); ++a)
        for (std::size_t b = a + 1; b < C.terms.size(); ++b) {
            Lie<CycScalar> br = bracket(C.terms[a].second, C.terms[b].second);
            if (pres) br = pres->reduce(br);
            if (br.is_zero()) continue;
            add(QF2::wedge(C.terms[a].first, C.terms[b].first), br);
        }
    // drop exact zeros
    for (auto it = res.begin(); it != res.end();)
        it = it->second.is_zero() ? res.erase(it) : std::next(it);
    return res;
}

// the q -> 0 limit of omega_KZB,n compared with q_*(omega_KZ,n): both sides
// as word -> rational 1-form, reduced in tbar_{1,n+1}
inline LimitCheckResult kzb_kz_limit_check(const EllipticBraidLie& E, int n, int lieDeg) {
    LimitCheckResult out;
    QConnection C = kzb_n_q(E, n, lieDeg, 0);
    std::map<Word, RatForm1> lhs;
    for (const auto& [f, l] : C.terms)
        for (const auto& [w, c] : l.terms()) {
            RatForm1 add = f.q_coeff(0).scaled(c);
            auto it = lhs.find(w);
            if (it == lhs.end())
                lhs[w] = add;
            else
                it->second = it->second + add;
        }
    KZModel KZ(n);
    QStarN q = qstar_n(E, n, lieDeg);
    std::map<Word, RatForm1> rhs;
    for (const auto& [i, j] : KZ.pairs) {
        RatForm1 om = KZ.omega(i, j);
        for (const auto& [w, c] : q.image(i, j).terms()) {
            auto it = rhs.find(w);
            if (it == rhs.end())
                rhs[w] = om.scaled(c);
            else
                it->second = it->second + om.scaled(c);
        }
    }
    std::set<Word> words;
    for (const auto& [w, f] : lhs) words.insert(w);
    for (const auto& [w, f] : rhs) words.insert(w);
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) > lieDeg) continue;
        RatForm1 a = lhs.count(w) ? lhs.at(w) : RatForm1(n);
        RatForm1 b = rhs.count(w) ? rhs.at(w) : RatForm1(n);
        if (!(a == b)) {
            out.ok = false;
            out.mismatches.push_back(word_to_string(w, E.alg->names()));
        }
    }
    return out;
}

}  // namespace kzb

#endif

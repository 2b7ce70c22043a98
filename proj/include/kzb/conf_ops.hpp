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
// Operations layered on the configuration-space transfer: the coderivation
// on the degree-two duals (whose kernel presents the fiber Lie algebra), the
// transferred geometric connection and its closed form, and the p-kernel
// tables on W^1 tuples.

#ifndef KZB_CONF_OPS_HPP
#define KZB_CONF_OPS_HPP

#include "kzb/braid_lie.hpp"
#include "kzb/conf.hpp"
#include "kzb/mc.hpp"

namespace kzb {

// duals of the degree-one W basis: X_i against -w^(0)_{i,0}, Y_i against
// -alpha_i, matching the elliptic braid generator order X_1..X_n Y_1..Y_n
inline std::vector<DualGenerator> conf_duals(int n) {
    std::vector<DualGenerator> d;
    for (int i = 1; i <= n; ++i) d.push_back({"w0_" + std::to_string(i), "X" + std::to_string(i), -1});
    for (int i = 1; i <= n; ++i) d.push_back({"a_" + std::to_string(i), "Y" + std::to_string(i), -1});
    return d;
}

// the transferred geometric connection, reduced in the fiber presentation
inline ConnectionForm conf_geometric_connection(const ConfModel& M, const Transfer& T,
                                                const EllipticBraidLie& E, int maxdeg) {
    ConnectionForm C = mc_from_morphism(T, E.alg.get(), conf_duals(M.n), maxdeg);
    return C.reduced(*E.pres);
}

// the closed form: -sum_i w^(0)_{i,0} X_i - alpha_i Y_i
//                  -sum_{i,k} w^(k)_{i,0} Ad^k_{Y_i}(X_i)
//                  -sum_{j<i,k} (w^(k)_{i,0} + w^(k)_{0,j} - w^(k)_{i,j})
//                               Ad^k_{Y_i}(X_j)
inline ConnectionForm conf_closed_form(const ConfModel& M, const EllipticBraidLie& E, int maxdeg) {
    ConnectionForm C;
    C.A = M.A.get();
    C.L = E.alg.get();
    auto term = [&](const Vec& coeff, const Lie<CycScalar>& lie) {
        Lie<CycScalar> red = E.pres->reduce(lie);
        for (const auto& [w, c] : red.terms()) C.add(w, vec_scaled(coeff, c));
    };
    for (int i = 1; i <= M.n; ++i) {
        term(vec_scaled(M.wgen(0, i, 0), CycScalar(-1)), E.X(i));
        term(vec_scaled(Vec{{M.id_alpha(i), CycScalar(1)}}, CycScalar(-1)), E.Y(i));
        for (int k = 1; k + 1 <= maxdeg; ++k)
            term(vec_scaled(M.wgen(k, i, 0), CycScalar(-1)), ad_pow(E.Y(i), E.X(i), k));
        for (int j = 1; j < i; ++j)
            for (int k = 1; k + 1 <= maxdeg; ++k) {
                Vec coeff = M.wgen(k, i, 0);
                vec_axpy(coeff, M.wgen(k, 0, j), CycScalar(1));
                vec_axpy(coeff, M.wgen(k, i, j), CycScalar(-1));
                term(vec_scaled(coeff, CycScalar(-1)), ad_pow(E.Y(i), E.X(j), k));
            }
    }
    // normalize the representative
    return C.reduced(*E.pres);
}

// coderivation on the degree-two duals: for each W^2 class zeta, the Lie
// element delta* zeta with tensor expansion <b^W_n(tuple), zeta> on every
// dual word (triangular solve as for the connection)
struct Coderivation {
    std::map<std::string, Lie<CycScalar>> images;
};

inline Coderivation conf_coderivation(const ConfModel& M, const Transfer& T,
                                      const EllipticBraidLie& E, int maxArity) {
    Coderivation out;
    const FreeLie* L = E.alg.get();
    // map Lie generator -> W index (degree-one part)
    std::vector<int> widx(L->ngen(), -1);
    for (const auto& d : conf_duals(M.n)) widx[L->generator_index(d.lie_name)] = T.w_index(d.w_name);
    // W^2 classes: locate their indices in the transfer's W list
    for (std::size_t c = 0; c < M.w2_duals.size(); ++c) {
        const auto& dual = M.w2_duals[c];
        int zeta = T.w_index(M.H->data().at(2).w_names[c]);
        int zsign = dual.sign;
        Lie<CycScalar> img(L);
        for (int nlen = 2; nlen <= maxArity; ++nlen) {
            for (const Word& w : L->lyndon().words(nlen)) {
                std::vector<int> tuple;
                for (char ch : w) tuple.push_back(widx[static_cast<unsigned char>(ch)]);
                auto tab = T.bW_n(tuple);
                CycScalar v(0);
                auto it = tab.find(zeta);
                if (it != tab.end()) v = it->second;
                if (nlen % 2) v = -v;  // product of the -1 duals
                v = v * CycScalar(zsign);
                // subtract expansions of smaller placed words
                for (const auto& [u, cu] : img.terms()) {
                    if (u.size() != w.size() || !(u < w)) continue;
                    const auto& exp = L->lyndon().expansion(u);
                    auto f = exp.find(w);
                    if (f != exp.end()) v = v - cu * CycScalar(f->second);
                }
                if (!v.is_zero()) img.add_term(w, v);
            }
        }
        out.images[dual.name] = img;
    }
    return out;
}

// p-kernel value on a W^1 tuple split into its (W^2, DM, M^2) coordinates
struct PKernelEntry {
    std::map<std::string, CycScalar> w2;  // named W^2 coordinates
    Vec d_of;                             // element x with D x = the DM part
    bool has_m2 = false;                  // nonzero M^2 coordinates present
};

inline PKernelEntry pkernel_entry(const ConfModel& M, const Transfer& T,
                                  const std::vector<int>& tuple) {
    GradedVec p = T.p_n(tuple);
    PKernelEntry e;
    if (vec_is_zero(p.v)) return e;
    Hodge::Coords c = M.H->split(p.v, 2);
    const auto& names = M.H->data().at(2).w_names;
    for (std::size_t i = 0; i < c.w.size(); ++i)
        if (!c.w[i].is_zero()) e.w2[names[i]] = c.w[i];
    const auto& m1 = M.H->data().at(1).m_basis;
    for (std::size_t i = 0; i < c.dm.size(); ++i)
        if (!c.dm[i].is_zero()) vec_axpy(e.d_of, m1[i], c.dm[i]);
    for (const auto& x : c.m)
        if (!x.is_zero()) e.has_m2 = true;
    return e;
}

}  // namespace kzb

#endif

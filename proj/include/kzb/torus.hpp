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
// The holomorphic 1-model of the punctured torus: generators gamma (a (1,0)
// group cochain) and phi^(0..K) (holomorphic 1-forms), with the structure
// constants of the model installed as closed-form rules. The degree-2 part
// is spanned by the (1,1) cochain atoms E(a,j) standing for the map
// (m,n) |-> n^a phi^(j); lambda is the formal 2*pi*i. The q-formal model
// over Q(2 pi i) has the same constants, so this one algebra serves both.
//
// Installed combinations, with M(l,j) := m_{l+1}(gamma^l, phi^(j)):
//   M(l,j)    = (B_l / l!) sum_{i=1}^{j} ((-lambda)^{i+l} / i!) E(i+l, j-i),  l >= 2
//   M(1,j)    = -(1 - B_1) sum_{i=1}^{j} ((-lambda)^{i+1} / i!) E(i+1, j-i) + lambda E(1,j)
//   D phi^(p) = sum_{i=1}^{p} ((-lambda)^i / i!) E(i, p-i),   D gamma = 0
// and the permutation rule m(gamma^i, phi, gamma^(l-i)) =
// (-1)^(i+l) binom(l,i) M(l,j), which is the reading of the model's
// permutation rule consistent with vanishing on shuffles. Everything else
// involving only gamma's and phi's vanishes; all other tuples error.

#ifndef KZB_TORUS_HPP
#define KZB_TORUS_HPP

#include <memory>
#include <string>
#include <vector>

#include "kzb/calgebra.hpp"
#include "kzb/hodge.hpp"
#include "kzb/mc.hpp"
#include "kzb/transfer.hpp"

namespace kzb {

struct TorusModel {
    int K = 0;
    std::unique_ptr<CAlgebra> A;
    std::unique_ptr<Hodge> H;

    int id_gamma = -1;
    std::vector<int> id_phi;             // id_phi[j] = phi^(j)
    std::vector<std::vector<int>> id_E;  // id_E[a][j], a >= 1, a + j <= K, else -1

    bool is_phi(int id) const {
        for (int j = 0; j <= K; ++j)
            if (id_phi[j] == id) return j >= 0;
        return false;
    }
    int phi_super(int id) const {
        for (int j = 0; j <= K; ++j)
            if (id_phi[j] == id) return j;
        return -1;
    }
};

inline TorusModel build_torus_B(int K) {
    TorusModel M;
    M.K = K;
    std::vector<std::string> names{"1", "gamma"};
    std::vector<int> degs{0, 1};
    M.id_gamma = 1;
    for (int j = 0; j <= K; ++j) {
        M.id_phi.push_back(static_cast<int>(names.size()));
        names.push_back("phi" + std::to_string(j));
        degs.push_back(1);
    }
    M.id_E.assign(K + 1, std::vector<int>(K + 1, -1));
    for (int a = 1; a <= K; ++a)
        for (int j = 0; a + j <= K; ++j) {
            M.id_E[a][j] = static_cast<int>(names.size());
            names.push_back("E(" + std::to_string(a) + "," + std::to_string(j) + ")");
            degs.push_back(2);
        }

    int id_gamma = M.id_gamma;
    std::vector<int> id_phi = M.id_phi;
    auto id_E = M.id_E;
    int Kc = K;

    // M(l,j) in E-coordinates
    auto big_M = [id_E, Kc](int l, int j) -> std::optional<Vec> {
        Vec v;
        if (l >= 2) {
            Rational w = bernoulli(l) / Rational::factorial(l);
            if (w.is_zero()) return v;
            for (int i = 1; i <= j; ++i) {
                if (i + l + (j - i) > Kc) return std::nullopt;  // beyond stored atoms
                CycScalar c = CycScalar::lambda_pow(i + l) *
                              CycScalar(w * Rational(((i + l) % 2) ? -1 : 1) /
                                        Rational::factorial(i));
                vec_add(v, id_E[i + l][j - i], c);
            }
            return v;
        }
        // l == 1: M(1,j) = -(1-B_1) sum_i ((-lambda)^{i+1}/i!) E(i+1, j-i) + lambda E(1,j)
        for (int i = 1; i <= j; ++i) {
            if (i + 1 + (j - i) > Kc) return std::nullopt;
            CycScalar c = CycScalar::lambda_pow(i + 1) *
                          CycScalar(Rational(((i + 1) % 2) ? -1 : 1) *
                                    (Rational(1) - bernoulli(1)) / Rational::factorial(i));
            vec_add(v, id_E[i + 1][j - i], -c);
        }
        if (1 + j > Kc) return std::nullopt;
        vec_add(v, id_E[1][j], CycScalar::lambda());
        return v;
    };

    auto rule = [id_gamma, id_phi, id_E, Kc, big_M](const std::vector<int>& t) -> std::optional<Vec> {
        int k = static_cast<int>(t.size());
        auto phi_super = [&](int id) {
            for (int j = 0; j <= Kc; ++j)
                if (id_phi[j] == id) return j;
            return -1;
        };
        if (k == 1) {
            if (t[0] == id_gamma) return Vec{};
            int j = phi_super(t[0]);
            if (j == 0) return Vec{};
            if (j > 0) {
                Vec v;
                for (int i = 1; i <= j; ++i) {
                    if (i + (j - i) > Kc) return std::nullopt;
                    CycScalar c = CycScalar::lambda_pow(i) *
                                  CycScalar(Rational((i % 2) ? -1 : 1) / Rational::factorial(i));
                    vec_add(v, id_E[i][j - i], c);
                }
                return v;
            }
            return std::nullopt;  // no differential stored on degree-2 atoms
        }
        // classify tuple: count gammas and phis
        int phis = 0, gammas = 0, phi_pos = -1, phi_j = -1;
        for (int pos = 0; pos < k; ++pos) {
            if (t[pos] == id_gamma) {
                ++gammas;
            } else {
                int j = phi_super(t[pos]);
                if (j < 0) return std::nullopt;  // degree-2 input or unknown
                ++phis;
                phi_pos = pos;
                phi_j = j;
            }
        }
        if (phis == 0) return Vec{};          // m_l(gamma,...,gamma) = 0 for l > 1
        if (phis >= 2) return Vec{};          // wedge of holomorphic forms / stated vanishing
        int l = k - 1;                        // number of gammas
        auto base = big_M(l, phi_j);
        if (!base) return std::nullopt;
        int i_before = phi_pos;               // gammas before the phi
        Rational b = Rational::binomial(l, i_before) * Rational(((i_before + l) % 2) ? -1 : 1);
        return vec_scaled(*base, CycScalar(b));
    };

    M.A = std::make_unique<CAlgebra>("torusB(K=" + std::to_string(K) + ")", names, degs, rule, 0);

    // Hodge data
    std::map<int, Hodge::DegreeData> hd;
    {
        Hodge::DegreeData d0;
        d0.w_names = {"1"};
        d0.w_basis = {Vec{{0, CycScalar(1)}}};
        hd[0] = d0;
        Hodge::DegreeData d1;
        d1.w_names = {"phi0", "gamma"};
        d1.w_basis = {Vec{{M.id_phi[0], CycScalar(1)}}, Vec{{M.id_gamma, CycScalar(1)}}};
        for (int j = 1; j <= K; ++j) d1.m_basis.push_back(Vec{{M.id_phi[j], CycScalar(1)}});
        hd[1] = d1;
        Hodge::DegreeData d2;  // W^2 = 0; M^2 = the m_{l+1}(gamma^l, phi^(j)) for l >= 2 even
        for (int l = 2; l <= K; l += 2)
            for (int j = 1; l + j <= K; ++j) {
                std::vector<int> tuple(l, M.id_gamma);
                tuple.push_back(M.id_phi[j]);
                Vec v = M.A->m_basis(tuple);
                if (!vec_is_zero(v)) d2.m_basis.push_back(v);
            }
        hd[2] = d2;
    }
    M.H = std::make_unique<Hodge>(M.A.get(), hd);
    return M;
}

// dual generators of the fiber: X0 dual to -s gamma, X1 dual to -s phi^(0)
inline std::vector<DualGenerator> torus_duals() {
    return {{"gamma", "X0", -1}, {"phi0", "X1", -1}};
}

}  // namespace kzb

#endif

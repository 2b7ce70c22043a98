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
// The smooth model of the punctured torus: a genuine differential graded
// algebra on nu and omega^(0..K) with d omega^(k) = nu ^ omega^(k-1) and
// omega ^ omega = 0 (the omegas span a rank-one holomorphic direction times
// functions of r, so their pairwise wedges vanish identically). Degree two
// is spanned by the products omega^(k) ^ nu, all of which are exact, so the
// decomposition has M^2 = 0.

#ifndef KZB_SMOOTH_MODEL_HPP
#define KZB_SMOOTH_MODEL_HPP

#include <memory>
#include <string>
#include <vector>

#include "kzb/calgebra.hpp"
#include "kzb/hodge.hpp"
#include "kzb/mc.hpp"

namespace kzb {

struct SmoothModel {
    int K = 0;
    std::unique_ptr<CAlgebra> A;
    std::unique_ptr<Hodge> H;
    int id_nu = -1;
    std::vector<int> id_om;  // omega^(k)
    std::vector<int> id_wn;  // omega^(k) ^ nu
};

inline SmoothModel build_smooth_model(int K) {
    SmoothModel M;
    M.K = K;
    std::vector<std::string> names{"1", "nu"};
    std::vector<int> degs{0, 1};
    M.id_nu = 1;
    for (int k = 0; k <= K; ++k) {
        M.id_om.push_back(static_cast<int>(names.size()));
        names.push_back("om" + std::to_string(k));
        degs.push_back(1);
    }
    for (int k = 0; k <= K; ++k) {
        M.id_wn.push_back(static_cast<int>(names.size()));
        names.push_back("om" + std::to_string(k) + "nu");
        degs.push_back(2);
    }
    int id_nu = M.id_nu;
    auto id_om = M.id_om;
    auto id_wn = M.id_wn;
    int Kc = K;
    auto om_index = [id_om, Kc](int id) {
        for (int k = 0; k <= Kc; ++k)
            if (id_om[k] == id) return k;
        return -1;
    };
    auto rule = [id_nu, id_om, id_wn, Kc, om_index](const std::vector<int>& t) -> std::optional<Vec> {
        int k = static_cast<int>(t.size());
        if (k == 1) {
            if (t[0] == id_nu) return Vec{};
            int j = om_index(t[0]);
            if (j == 0) return Vec{};
            if (j > 0) return Vec{{id_wn[j - 1], CycScalar(-1)}};  // nu ^ om^{j-1} = -om^{j-1} ^ nu
            return Vec{};                                          // degree-2 products are closed
        }
        if (k == 2) {
            int a = om_index(t[0]), b = om_index(t[1]);
            if (t[0] == id_nu && t[1] == id_nu) return Vec{};
            if (a >= 0 && b >= 0) return Vec{};  // omega ^ omega = 0
            if (a >= 0 && t[1] == id_nu) return Vec{{id_wn[a], CycScalar(1)}};
            if (t[0] == id_nu && b >= 0) return Vec{{id_wn[b], CycScalar(-1)}};
            return Vec{};  // anything against a degree-2 class is zero here
        }
        return Vec{};  // honest dga: m_k = 0 for k >= 3
    };
    M.A = std::make_unique<CAlgebra>("smoothBbar(K=" + std::to_string(K) + ")", names, degs, rule, 0);

    std::map<int, Hodge::DegreeData> hd;
    Hodge::DegreeData d0;
    d0.w_names = {"1"};
    d0.w_basis = {Vec{{0, CycScalar(1)}}};
    hd[0] = d0;
    Hodge::DegreeData d1;
    d1.w_names = {"om0", "nu"};
    d1.w_basis = {Vec{{M.id_om[0], CycScalar(1)}}, Vec{{M.id_nu, CycScalar(1)}}};
    for (int k = 1; k <= K; ++k) d1.m_basis.push_back(Vec{{M.id_om[k], CycScalar(1)}});
    hd[1] = d1;
    hd[2] = Hodge::DegreeData{};  // W^2 = 0, M^2 = 0: every 2-class is exact
    M.H = std::make_unique<Hodge>(M.A.get(), hd);
    return M;
}

// duals: Xbar1 dual of -s om^(0), Xbar0 dual of +s nu (sign as printed)
inline std::vector<DualGenerator> smooth_duals() {
    return {{"nu", "X0", +1}, {"om0", "X1", -1}};
}

}  // namespace kzb

#endif

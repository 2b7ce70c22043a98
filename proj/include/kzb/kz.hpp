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
// The KZ connection on the configuration space of C - {0,1}: logarithmic
// forms omega_{ij} = dlog(z_i - z_j) with the markers z_{-1} = 1, z_0 = 0,
// the Kohno-Drinfeld fiber, exact flatness through the concrete rational
// 2-form arithmetic, and the Arnold normal form as the independent route.

#ifndef KZB_KZ_HPP
#define KZB_KZ_HPP

#include <map>
#include <vector>

#include "kzb/braid_lie.hpp"
#include "kzb/ratform.hpp"

namespace kzb {

struct KZModel {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;  // valid index pairs (i < j)

    explicit KZModel(int n_) : n(n_) {
        for (int i = -1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!(i == -1 && j == 0)) pairs.push_back({i, j});
    }

    // omega_{ij} as a rational 1-form on C^n (variables z_1..z_n)
    RatForm1 omega(int i, int j) const {
        if (i > j) std::swap(i, j);
        RatForm1 f(n);
        if (i == -1 && j == 0) return f;  // dlog(1 - 0) = 0
        if (i >= 1) {
            // dlog(z_i - z_j), both variable
            RatFunc c = RatFunc::inv_diff(CycScalar(1), i - 1, j - 1, n);
            f.add_comp(i - 1, c);
            f.add_comp(j - 1, c.scaled(CycScalar(-1)));
            return f;
        }
        if (i == 0) {
            f.add_comp(j - 1, RatFunc::zpow_term(CycScalar(1), j - 1, -1, n));  // dz_j / z_j
        } else {
            f.add_comp(j - 1, RatFunc::inv_zm1(CycScalar(1), j - 1, n));  // dz_j/(z_j - 1)
        }
        return f;
    }
};

// omega_KZ,n as a list of (pair, generator) terms over the Kohno-Drinfeld
// algebra built at the given truncation.
struct KZConnection {
    KZModel model;
    KohnoDrinfeldLie fiber;

    KZConnection(int n, int maxdeg) : model(n), fiber(kohno_drinfeld(n, maxdeg)) {}
};

// residual coefficients of dC + [C,C]/2 per reduced Lyndon word; dC = 0 since
// the omegas are closed, so this is the half-bracket expansion with every
// Lie part reduced in t_n and grouped by word; flat iff every 2-form is zero
inline std::map<Word, RatForm2> kz_flatness_residual(const KZConnection& K) {
    std::map<Word, RatForm2> res;
    const auto& P = K.model.pairs;
    for (std::size_t a = 0; a < P.size(); ++a)
        for (std::size_t b = a + 1; b < P.size(); ++b) {
            RatForm2 w = RatForm2::wedge(K.model.omega(P[a].first, P[a].second),
                                         K.model.omega(P[b].first, P[b].second));
            LieQ br = K.fiber.pres->reduce(
                bracket(K.fiber.T(P[a].first, P[a].second), K.fiber.T(P[b].first, P[b].second)));
            for (const auto& [word, c] : br.terms()) {
                auto it = res.find(word);
                if (it == res.end())
                    res[word] = w.scaled(c);
                else
                    it->second = it->second + w.scaled(c);
            }
        }
    return res;
}

inline bool kz_flat(const KZConnection& K) {
    for (const auto& [w, f] : kz_flatness_residual(K))
        if (!f.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Arnold normal form: an independent, purely combinatorial route. Degree-two
// monomials are ordered products omega_P ^ omega_Q (P < Q lexicographically);
// for every index triple the product of the two largest pairs rewrites
// through the Arnold relation, and the degenerate pair over {-1, 0, k}
// rewrites to zero. The same flatness check run in this normal form must
// agree with the concrete rational computation.

struct ArnoldAlgebra {
    int n;
    std::vector<std::pair<int, int>> pairs;
    explicit ArnoldAlgebra(int n_) : n(n_) { pairs = KZModel(n_).pairs; }

    int pair_id(int i, int j) const {
        if (i > j) std::swap(i, j);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
        return -1;
    }

    // canonical coordinates: map from (a<b) product of pair ids to coefficient
    using Deg2 = std::map<std::pair<int, int>, CycScalar>;

    void add_product(Deg2& out, int a, int b, const CycScalar& c) const {
        if (a == b || c.is_zero()) return;
        CycScalar cc = c;
        if (a > b) {
            std::swap(a, b);
            cc = -cc;
        }
        // degenerate circuit: omega_{0,k} ^ omega_{-1,k} = 0
        auto [i1, j1] = pairs[a];
        auto [i2, j2] = pairs[b];
        if (j1 == j2 && ((i1 == -1 && i2 == 0) || (i1 == 0 && i2 == -1))) return;
        // broken circuit: shared index with both pairs containing the triple
        // maximum rewrites through the Arnold relation
        int shared = -2;
        if (i1 == i2 || i1 == j2) shared = i1;
        if (j1 == i2 || j1 == j2) shared = j1;
        if (shared != -2) {
            std::vector<int> tri{i1, j1, i2, j2};
            std::sort(tri.begin(), tri.end());
            tri.erase(std::unique(tri.begin(), tri.end()), tri.end());
            // tri = {x < y < z}
            int x = tri[0], y = tri[1], z = tri[2];
            int pxy = pair_id(x, y), pxz = pair_id(x, z), pyz = pair_id(y, z);
            bool is_xz_yz = (std::min(a, b) == std::min(pxz, pyz)) &&
                            (std::max(a, b) == std::max(pxz, pyz));
            if (is_xz_yz && pxy >= 0 && pxz >= 0 && pyz >= 0) {
                // omega_xz ^ omega_yz = omega_xy ^ omega_yz - omega_xy ^ omega_xz
                int sa = (pxz < pyz) ? 1 : -1;  // orientation of (a,b) vs (xz,yz)
                add_product(out, pxy, pyz, cc * CycScalar(sa));
                add_product(out, pxy, pxz, cc * CycScalar(-sa));
                return;
            }
            if (is_xz_yz && pxy < 0) {
                // triple {-1, 0, z}: the xy pair is missing because its form
                // vanishes; the relation degenerates to the zero rule above
                return;
            }
        }
        auto it = out.find({a, b});
        if (it == out.end())
            out.emplace(std::make_pair(a, b), cc);
        else {
            it->second += cc;
            if (it->second.is_zero()) out.erase(it);
        }
    }
};

// flatness in the Arnold normal form: expand [C,C]/2, rewrite the products,
// and require the reduced Lie coefficient of every normal-form product to
// vanish in t_n
inline bool kz_flat_arnold(const KZConnection& K) {
    ArnoldAlgebra AA(K.model.n);
    std::map<std::pair<int, int>, LieQ> per_product;
    const auto& P = K.model.pairs;
    for (std::size_t a = 0; a < P.size(); ++a)
        for (std::size_t b = a + 1; b < P.size(); ++b) {
            ArnoldAlgebra::Deg2 prod;
            AA.add_product(prod, static_cast<int>(a), static_cast<int>(b), CycScalar(1));
            LieQ br = bracket(K.fiber.T(P[a].first, P[a].second),
                              K.fiber.T(P[b].first, P[b].second));
            for (const auto& [pq, c] : prod) {
                auto it = per_product.find(pq);
                if (it == per_product.end())
                    per_product[pq] = br.cyc_scaled(c);
                else
                    it->second = it->second + br.cyc_scaled(c);
            }
        }
    for (const auto& [pq, lie] : per_product)
        if (!K.fiber.pres->in_ideal(lie)) return false;
    return true;
}

}  // namespace kzb

#endif

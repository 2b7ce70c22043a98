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
// The simplicial side of the cochain C-infinity structure: polynomial forms
// on the 2-simplex, the Whitney/integration retract onto simplicial
// cochains, and Dupont's contraction built from the vertex dilations. The
// higher products of group one-cocycles are computed by running the same
// decorated-tree transfer on this retract; the degree-(2,0) value of
// m_l(gamma_1, ..., gamma_l) at a group pair is the integral over the
// 2-simplex of the transferred kernel on the Whitney forms.
//
// Coordinates: polynomial coefficients live in MPoly over the variables
// [t1, t2, u, x_1, x_2, ...] where u is the dilation parameter (integrated
// out inside the homotopy) and the x's are the values gamma_slot(g_1),
// gamma_slot(g_2) of the input cocycles.

#ifndef KZB_DUPONT_HPP
#define KZB_DUPONT_HPP

#include <array>
#include <stdexcept>
#include <vector>

#include "kzb/ratform.hpp"
#include "kzb/tree.hpp"

namespace kzb {

struct D2Form {
    // c0 + c1 dt1 + c2 dt2 + c12 dt1^dt2
    MPoly c0, c1, c2, c12;

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero() && c12.is_zero(); }
    friend D2Form operator+(const D2Form& a, const D2Form& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c12 + b.c12};
    }
    D2Form scaled(const CycScalar& c) const {
        return {c0.scaled(c), c1.scaled(c), c2.scaled(c), c12.scaled(c)};
    }
    D2Form scaled_poly(const MPoly& p) const { return {c0 * p, c1 * p, c2 * p, c12 * p}; }
    int top_degree() const {
        if (!c12.is_zero()) return 2;
        if (!c1.is_zero() || !c2.is_zero()) return 1;
        return 0;
    }
};

class Dupont2 {
  public:
    // nx symbolic scalar slots (two per tree input)
    explicit Dupont2(int nx) : nx_(nx), nvars_(3 + nx) {}

    int var_t1() const { return 0; }
    int var_t2() const { return 1; }
    int var_u() const { return 2; }
    int var_x(int i) const { return 3 + i; }
    int nvars() const { return nvars_; }

    MPoly t(int i) const {  // barycentric t_0, t_1, t_2
        if (i == 0)
            return MPoly::constant(CycScalar(1)) +
                   MPoly::variable(var_t1(), nvars_).scaled(CycScalar(-1)) +
                   MPoly::variable(var_t2(), nvars_).scaled(CycScalar(-1));
        return MPoly::variable(i == 1 ? var_t1() : var_t2(), nvars_);
    }
    // dt_i in the (dt1, dt2) basis
    std::array<MPoly, 2> dt(int i) const {
        MPoly one = MPoly::constant(CycScalar(1));
        MPoly zero;
        if (i == 0) return {one.scaled(CycScalar(-1)), one.scaled(CycScalar(-1))};
        if (i == 1) return {one, zero};
        return {zero, one};
    }

    // Whitney elementary forms
    D2Form whitney_vertex(int i) const { return {t(i), MPoly(), MPoly(), MPoly()}; }
    D2Form whitney_edge(int i, int j) const {  // omega_{ij} = t_i dt_j - t_j dt_i
        auto di = dt(i), dj = dt(j);
        D2Form f;
        f.c1 = t(i) * dj[0] + t(j) * di[0].scaled(CycScalar(-1));
        f.c2 = t(i) * dj[1] + t(j) * di[1].scaled(CycScalar(-1));
        return f;
    }
    D2Form whitney_face() const {  // 2! * omega_{012} = 2 (t0 dt1^dt2 - ...) = 2? see below
        // omega_{012} = t0 dt1^dt2 - t1 dt0^dt2 + t2 dt0^dt1 = dt1^dt2 overall
        D2Form f;
        f.c12 = MPoly::constant(CycScalar(1));
        return f;
    }

    static D2Form wedge(const D2Form& a, const D2Form& b) {
        D2Form r;
        r.c0 = a.c0 * b.c0;
        r.c1 = a.c0 * b.c1 + a.c1 * b.c0;
        r.c2 = a.c0 * b.c2 + a.c2 * b.c0;
        r.c12 = a.c0 * b.c12 + a.c12 * b.c0 + a.c1 * b.c2 + b.c1.scaled(CycScalar(-1)) * a.c2;
        return r;
    }

    D2Form d(const D2Form& a) const {
        D2Form r;
        r.c1 = a.c0.ddx(var_t1());
        r.c2 = a.c0.ddx(var_t2());
        r.c12 = a.c1.ddx(var_t2()).scaled(CycScalar(-1)) + a.c2.ddx(var_t1());
        // note d(c1 dt1 + c2 dt2) = (d c2/d t1 - d c1/d t2) dt1^dt2
        return r;
    }

    // vertex dilation homotopy h_i: pull back along phi(u,t) = u t + (1-u) e_i,
    // take the du component, integrate u over [0,1]
    D2Form h(int i, const D2Form& a) const {
        // pullback of coordinates: t_j -> u t_j + (1-u) delta_{ij} (j = 1,2)
        // dt_j -> u dt_j + (t_j - delta_{ij}) du
        MPoly u = MPoly::variable(var_u(), nvars_);
        MPoly t1s = u * MPoly::variable(var_t1(), nvars_);
        MPoly t2s = u * MPoly::variable(var_t2(), nvars_);
        if (i == 1) t1s = t1s + (MPoly::constant(CycScalar(1)) + u.scaled(CycScalar(-1)));
        if (i == 2) t2s = t2s + (MPoly::constant(CycScalar(1)) + u.scaled(CycScalar(-1)));
        MPoly du1 = MPoly::variable(var_t1(), nvars_);  // du-coefficients of dt_j pullback
        if (i == 1) du1 = du1 + MPoly::constant(CycScalar(-1));
        MPoly du2 = MPoly::variable(var_t2(), nvars_);
        if (i == 2) du2 = du2 + MPoly::constant(CycScalar(-1));

        auto subst = [&](const MPoly& p) { return subst_t(p, t1s, t2s); };
        // du-component of the pullback:
        //  c1 dt1 + c2 dt2 -> c1(t(u)) (u dt1 + du1 du) + ... : du part c1* du1 + c2* du2
        //  c12 dt1^dt2 -> c12* (u dt1 + du1 du)^(u dt2 + du2 du):
        //     du-part: c12* [u du1 (du ^ dt2 ... ) ] -> collect into -u du ^ (du1 dt2 - du2 dt1)
        D2Form r;
        MPoly s0 = subst(a.c1) * du1 + subst(a.c2) * du2;
        r.c0 = integrate_u(s0);
        MPoly s1 = subst(a.c12) * u * du2;                          // coefficient of du^dt1: -...
        MPoly s2 = subst(a.c12) * u * du1;
        // dt1-part of iota_du pullback: -(c12*) u du2; dt2-part: +(c12*) u du1
        r.c1 = integrate_u(s1.scaled(CycScalar(-1)));
        r.c2 = integrate_u(s2);
        return r;
    }

    // Dupont contraction on the 2-simplex:
    //   s = -sum_i t_i h_i + sum_{i<j} omega_{ij} h_j h_i
    // (the alternating telescope; the constants are pinned by the
    // contraction identity test, which checks ds + sd = EI - 1 on a
    // spanning set of polynomial forms)
    D2Form s(const D2Form& a) const {
        D2Form r;
        for (int i = 0; i <= 2; ++i) {
            D2Form hi = h(i, a);
            r = r + wedge(whitney_vertex(i), hi).scaled(CycScalar(-1));
        }
        for (int i = 0; i <= 2; ++i)
            for (int j = i + 1; j <= 2; ++j) {
                D2Form hji = h(j, h(i, a));
                r = r + wedge(whitney_edge(i, j), hji);
            }
        return r;
    }

    // simplicial cochain on the seven faces of the 2-simplex
    struct Cochain {
        std::array<MPoly, 3> vertex;
        std::array<MPoly, 3> edge;  // (01), (02), (12)
        MPoly face;
    };

    Cochain integrate(const D2Form& a) const {
        Cochain c;
        for (int i = 0; i <= 2; ++i) c.vertex[i] = eval_vertex(a.c0, i);
        c.edge[0] = edge_integral(a, 0, 1);
        c.edge[1] = edge_integral(a, 0, 2);
        c.edge[2] = edge_integral(a, 1, 2);
        c.face = face_integral(a.c12);
        return c;
    }

    D2Form whitney(const Cochain& c) const {
        D2Form r;
        for (int i = 0; i <= 2; ++i) r = r + whitney_vertex(i).scaled_poly(c.vertex[i]);
        r = r + whitney_edge(0, 1).scaled_poly(c.edge[0]);
        r = r + whitney_edge(0, 2).scaled_poly(c.edge[1]);
        r = r + whitney_edge(1, 2).scaled_poly(c.edge[2]);
        D2Form face = whitney_face();
        r = r + face.scaled_poly(c.face.scaled(CycScalar(2)));  // 2! normalization
        return r;
    }

    // MPoly helpers -----------------------------------------------------------
    MPoly subst_t(const MPoly& p, const MPoly& t1v, const MPoly& t2v) const {
        MPoly out;
        for (const auto& [k, c] : p.terms()) {
            MPoly m = MPoly::constant(c);
            int e1 = k.size() > 0 ? k[0] : 0;
            int e2 = k.size() > 1 ? k[1] : 0;
            for (int t = 0; t < e1; ++t) m = m * t1v;
            for (int t = 0; t < e2; ++t) m = m * t2v;
            // remaining variables (u and x's) pass through
            MPoly::Key rest(k.size(), 0);
            for (std::size_t v = 2; v < k.size(); ++v) rest[v] = k[v];
            MPoly passthrough;
            passthrough.add(rest, CycScalar(1));
            out = out + m * passthrough;
        }
        return out;
    }

    MPoly integrate_u(const MPoly& p) const {  // definite integral over u in [0,1]
        MPoly out;
        for (const auto& [k, c] : p.terms()) {
            int eu = static_cast<int>(k.size()) > var_u() ? k[var_u()] : 0;
            MPoly::Key nk = k;
            if (static_cast<int>(nk.size()) > var_u()) nk[var_u()] = 0;
            out.add(nk, c * CycScalar(Rational(1, eu + 1)));
        }
        return out;
    }

  private:
    int nx_;
    int nvars_;

    MPoly eval_vertex(const MPoly& p, int vtx) const {
        // t1, t2 at the vertex
        int t1v = vtx == 1 ? 1 : 0, t2v = vtx == 2 ? 1 : 0;
        MPoly out;
        for (const auto& [k, c] : p.terms()) {
            int e1 = k.size() > 0 ? k[0] : 0;
            int e2 = k.size() > 1 ? k[1] : 0;
            if ((t1v == 0 && e1 > 0) || (t2v == 0 && e2 > 0)) continue;
            MPoly::Key nk = k;
            if (!nk.empty()) nk[0] = 0;
            if (nk.size() > 1) nk[1] = 0;
            out.add(nk, c);
        }
        return out;
    }

    MPoly edge_integral(const D2Form& a, int vi, int vj) const {
        // parametrize the edge from e_vi to e_vj by tau in [0,1]
        // t-coordinates: t_{vi} = 1 - tau, t_{vj} = tau, other = 0
        // pull back c1 dt1 + c2 dt2 and integrate
        auto coord = [&](int which) -> std::pair<int, int> {
            // returns (constant, tau coefficient) of t_which
            if (which == vi) return {1, -1};
            if (which == vj) return {0, 1};
            return {0, 0};
        };
        auto [a1, b1] = coord(1);
        auto [a2, b2] = coord(2);
        // substitute t1 = a1 + b1 tau, t2 = a2 + b2 tau with tau in the u slot
        MPoly tau = MPoly::variable(var_u(), nvars_);
        MPoly t1v = MPoly::constant(CycScalar(a1)) + tau.scaled(CycScalar(b1));
        MPoly t2v = MPoly::constant(CycScalar(a2)) + tau.scaled(CycScalar(b2));
        MPoly integrand = subst_t(a.c1, t1v, t2v).scaled(CycScalar(b1)) +
                          subst_t(a.c2, t1v, t2v).scaled(CycScalar(b2));
        return integrate_u(integrand);
    }

    MPoly face_integral(const MPoly& p) const {
        // integral over the 2-simplex of t1^a t2^b dt1 dt2 = a! b! / (a+b+2)!
        MPoly out;
        for (const auto& [k, c] : p.terms()) {
            int e1 = k.size() > 0 ? k[0] : 0;
            int e2 = k.size() > 1 ? k[1] : 0;
            Rational w = Rational::factorial(e1) * Rational::factorial(e2) /
                         Rational::factorial(e1 + e2 + 2);
            MPoly::Key nk = k;
            if (!nk.empty()) nk[0] = 0;
            if (nk.size() > 1) nk[1] = 0;
            out.add(nk, c * CycScalar(w));
        }
        return out;
    }
};

}  // namespace kzb

#endif

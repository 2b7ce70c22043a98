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
// Floating-point verification layer: theta and Kronecker evaluation through
// two independent routes (theta quotient and Fourier/divisor sums), the Fay
// residual, Eisenstein coefficient extraction by contour integration, and
// the sampled flatness of the configuration-space connection.

#ifndef KZB_NUMERIC_HPP
#define KZB_NUMERIC_HPP

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "kzb/braid_lie.hpp"
#include "kzb/kzb_q.hpp"

namespace kzb {

using Cx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

struct NumericContext {
    Cx tau{0.0, 1.0};
    int N = 40;           // product / series truncation
    double tol = 1e-9;

    Cx q() const { return std::exp(Cx(0, 2 * kPi) * tau); }
};

// theta as two thirds of the Jacobi triple product:
// q^{1/12} (z^{1/2} - z^{-1/2}) prod (1-q^j z)(1-q^j z^{-1}),
// with the branch z^{1/2} := exp(pi i xi)
inline Cx theta_eval(Cx xi, const NumericContext& ctx) {
    Cx q = ctx.q();
    Cx zh = std::exp(Cx(0, kPi) * xi);
    Cx pre = std::pow(q, 1.0 / 12.0) * (zh - 1.0 / zh);
    Cx prod = 1.0;
    Cx z = zh * zh;
    Cx qj = q;
    for (int j = 1; j <= ctx.N; ++j) {
        prod *= (1.0 - qj * z) * (1.0 - qj / z);
        qj *= q;
    }
    return pre * prod;
}

// derivative of theta at 0: q^{1/12} * 2 pi i * prod (1-q^j)^2
inline Cx theta_prime0(const NumericContext& ctx) {
    Cx q = ctx.q();
    Cx prod = 1.0;
    Cx qj = q;
    for (int j = 1; j <= ctx.N; ++j) {
        prod *= (1.0 - qj) * (1.0 - qj);
        qj *= q;
    }
    return std::pow(q, 1.0 / 12.0) * Cx(0, 2 * kPi) * prod;
}

inline bool near_lattice(Cx xi, Cx tau, double eps = 1e-6) {
    // reduce xi = a + b tau with a, b real; near the lattice iff both near Z
    double ti = tau.imag();
    if (std::abs(ti) < 1e-12) return true;
    double b = xi.imag() / ti;
    double a = xi.real() - b * tau.real();
    auto frac = [](double x) { return std::abs(x - std::round(x)); };
    return frac(a) < eps && frac(b) < eps;
}

// Kronecker function via the theta quotient
inline Cx kronecker_theta(Cx xi, Cx eta, const NumericContext& ctx) {
    if (near_lattice(xi, ctx.tau) || near_lattice(eta, ctx.tau))
        throw std::domain_error("kronecker: lattice point");
    return theta_prime0(ctx) * theta_eval(xi + eta, ctx) /
           (theta_eval(xi, ctx) * theta_eval(eta, ctx));
}

// Kronecker function via the Fourier expansion
//   pi i (coth(pi i xi) + coth(pi i eta))
//   + 4 pi sum_n sum_{d|n} sin(2 pi ((n/d) xi + d eta)) q^n
inline Cx kronecker_fourier(Cx xi, Cx eta, const NumericContext& ctx) {
    if (near_lattice(xi, ctx.tau) || near_lattice(eta, ctx.tau))
        throw std::domain_error("kronecker: lattice point");
    auto coth = [](Cx x) { return std::cosh(x) / std::sinh(x); };
    Cx s = Cx(0, kPi) * (coth(Cx(0, kPi) * xi) + coth(Cx(0, kPi) * eta));
    Cx q = ctx.q();
    Cx qn = q;
    for (int n = 1; n <= ctx.N; ++n) {
        Cx inner = 0.0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) inner += std::sin(2 * kPi * (double(n / d) * xi + double(d) * eta));
        s += 4 * kPi * inner * qn;
        qn *= q;
    }
    return s;
}

// g^(l)(xi): coefficient of eta^l in eta F(xi, eta), by a small contour
// integral around eta = 0 (spectrally accurate for the theta route)
inline Cx eisenstein_g_numeric(int l, Cx xi, const NumericContext& ctx, double radius = 0.05,
                               int samples = 256) {
    Cx s = 0.0;
    for (int k = 0; k < samples; ++k) {
        double th = 2 * kPi * k / samples;
        Cx eta = radius * Cx(std::cos(th), std::sin(th));
        Cx val = eta * kronecker_theta(xi, eta, ctx);
        s += val * std::exp(Cx(0, -l * th));
    }
    return s / (double(samples) * std::pow(radius, l));
}

// max |F(x1,h1)F(x2,h2) - F(x1,h1+h2)F(x2-x1,h2) - F(x2,h1+h2)F(x1-x2,h1)|
struct FayReport {
    double max_residual = 0.0;
    int samples = 0;
    int skipped = 0;
};

inline FayReport fay_check(int nsamples, const NumericContext& ctx, unsigned seed = 12345) {
    FayReport rep;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(0.08, 0.85);
    for (int s = 0; s < nsamples; ++s) {
        Cx x1(uni(rng), 0.3 * uni(rng)), x2(uni(rng), -0.25 * uni(rng));
        Cx h1(uni(rng), 0.1 * uni(rng)), h2(uni(rng), -0.15 * uni(rng));
        if (near_lattice(x1 - x2, ctx.tau, 1e-3) || near_lattice(h1 + h2, ctx.tau, 1e-3)) {
            ++rep.skipped;
            continue;
        }
        Cx lhs = kronecker_theta(x1, h1, ctx) * kronecker_theta(x2, h2, ctx);
        Cx rhs = kronecker_theta(x1, h1 + h2, ctx) * kronecker_theta(x2 - x1, h2, ctx) +
                 kronecker_theta(x2, h1 + h2, ctx) * kronecker_theta(x1 - x2, h1, ctx);
        rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
        ++rep.samples;
    }
    return rep;
}

// numeric value of w(u)^(k)_{i,j}-type coefficients: the eta^k coefficient of
// eta exp(2 pi i u r eta) F(xi, eta) where xi = xi_i - xi_j and r = Im(xi)/Im(tau)
inline Cx wform_coeff_numeric(int k, Cx xi, double u, const NumericContext& ctx,
                              double radius = 0.05, int samples = 256) {
    double r = xi.imag() / ctx.tau.imag();
    Cx s = 0.0;
    for (int t = 0; t < samples; ++t) {
        double th = 2 * kPi * t / samples;
        Cx eta = radius * Cx(std::cos(th), std::sin(th));
        Cx val = eta * std::exp(Cx(0, 2 * kPi) * u * r * eta) * kronecker_theta(xi, eta, ctx);
        s += val * std::exp(Cx(0, -k * th));
    }
    return s / (double(samples) * std::pow(radius, k));
}

// sampled flatness of the configuration-space connection at s = 0 for n = 2:
// the coefficients are g^(k)(xi_i - xi_j) d(xi_i - xi_j); the residual is the
// d xi_1 ^ d xi_2 component of [C, C]/2 with Lie parts reduced in tbar_{1,3}
struct FlatnessNumericReport {
    double max_residual = 0.0;
    int samples = 0;
};

inline FlatnessNumericReport kzb2_flatness_numeric(const EllipticBraidLie& E, int lieDeg,
                                                   const NumericContext& ctx, int nsamples,
                                                   const LiePresentation* pres, unsigned seed = 7) {
    FlatnessNumericReport rep;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(0.1, 0.8);
    const FreeLie* L = E.alg.get();
    for (int s = 0; s < nsamples; ++s) {
        Cx xi1(uni(rng), 0.37 * uni(rng)), xi2(uni(rng), -0.29 * uni(rng));
        if (near_lattice(xi1 - xi2, ctx.tau, 1e-3)) continue;
        // C = sum_a (f_a(xi) dxi_1 + g_a(xi) dxi_2) (x) L_a: assemble terms
        struct Term {
            Cx c1, c2;  // dxi_1 and dxi_2 components
            Lie<std::complex<double>> lie;
        };
        std::vector<Term> terms;
        auto push = [&](Cx c1, Cx c2, const LieQ& lie) {
            Lie<std::complex<double>> l(L);
            for (const auto& [w, c] : lie.terms()) l.add_term(w, c.eval_numeric());
            terms.push_back({c1, c2, l});
        };
        auto g = [&](int k, Cx xi) { return eisenstein_g_numeric(k, xi, ctx); };
        // -w^(0)_{i,0} X_i and the diagonal towers
        push(-g(0, xi1), 0.0, E.pres->reduce(E.X(1)));
        push(0.0, -g(0, xi2), E.pres->reduce(E.X(2)));
        for (int k = 1; k + 1 <= lieDeg; ++k) {
            push(-g(k, xi1), 0.0, E.pres->reduce(ad_pow(E.Y(1), E.X(1), k)));
            push(0.0, -g(k, xi2), E.pres->reduce(ad_pow(E.Y(2), E.X(2), k)));
            // cross family, tower Ad^k_{Y_2}(X_1):
            // -(w^(k)_{2,0} + w^(k)_{0,1} - w^(k)_{2,1})
            Cx a1 = 0.0, a2 = 0.0;
            a2 -= g(k, xi2);                       // w^(k)_{2,0} = g^(k)(xi2) dxi2
            a1 -= -g(k, -xi1);                     // w^(k)_{0,1} = g^(k)(-xi1) (-dxi1)
            Cx gk12 = g(k, xi2 - xi1);
            a2 -= -gk12;                           // -w^(k)_{2,1}: d(xi2-xi1) parts
            a1 -= gk12;
            push(a1, a2, E.pres->reduce(ad_pow(E.Y(2), E.X(1), k)));
        }
        // residual = sum_{a<b} (c1_a c2_b - c1_b c2_a) [L_a, L_b], reduced
        Lie<std::complex<double>> res(L);
        for (std::size_t a = 0; a < terms.size(); ++a)
            for (std::size_t b = a + 1; b < terms.size(); ++b) {
                Cx w = terms[a].c1 * terms[b].c2 - terms[b].c1 * terms[a].c2;
                if (std::abs(w) < 1e-15) continue;
                auto br = bracket(terms[a].lie, terms[b].lie);
                for (const auto& [word, c] : br.terms()) res.add_term(word, c * w);
            }
        if (pres) res = pres->reduce(res);
        double norm = 0.0;
        for (const auto& [word, c] : res.terms()) norm = std::max(norm, std::abs(c));
        rep.max_residual = std::max(rep.max_residual, norm);
        ++rep.samples;
    }
    return rep;
}

// Weierstrass functions through fast q-series; the half-period values and
// the Legendre relation 2 eta1 tau - 2 eta2 = 2 pi i
struct WeierstrassData {
    Cx e1, e2, e3, eta1, eta2;
};

inline Cx weierstrass_p(Cx xi, const NumericContext& ctx) {
    // (2 pi i)^2 [ 1/12 + z/(1-z)^2 + sum_{n>=1} sum_{d|n} d (z^d + z^-d - 2) q^n ]
    Cx z = std::exp(Cx(0, 2 * kPi) * xi);
    Cx q = ctx.q();
    Cx s = Cx(1.0 / 12.0) + z / ((1.0 - z) * (1.0 - z));
    Cx qn = q;
    for (int n = 1; n <= ctx.N; ++n) {
        Cx inner = 0.0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) inner += double(d) * (std::pow(z, d) + std::pow(z, -d) - 2.0);
        s += inner * qn;
        qn *= q;
    }
    Cx twopii(0, 2 * kPi);
    return twopii * twopii * s;
}

inline Cx weierstrass_p_prime(Cx xi, const NumericContext& ctx) {
    // termwise d/dxi of the q-series
    Cx z = std::exp(Cx(0, 2 * kPi) * xi);
    Cx q = ctx.q();
    Cx twopii(0, 2 * kPi);
    Cx s = z * (1.0 + z) / std::pow(1.0 - z, 3);  // d/dz[z/(1-z)^2] * z
    Cx qn = q;
    for (int n = 1; n <= ctx.N; ++n) {
        Cx inner = 0.0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) inner += double(d) * double(d) * (std::pow(z, d) - std::pow(z, -d));
        s += inner * qn;
        qn *= q;
    }
    return twopii * twopii * twopii * s;
}

inline Cx weierstrass_zeta(Cx xi, const NumericContext& ctx) {
    // zeta = 2 eta1 xi + theta'(xi)/theta(xi), with the log derivative of the
    // triple product and eta1 = pi^2 E_2 / 6
    Cx z = std::exp(Cx(0, 2 * kPi) * xi);
    Cx q = ctx.q();
    Cx e2sum = 0.0;
    Cx qn = q;
    for (int n = 1; n <= ctx.N; ++n) {
        double s1 = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) s1 += d;
        e2sum += s1 * qn;
        qn *= q;
    }
    Cx twopii(0, 2 * kPi);
    Cx eta1 = -twopii * twopii / 24.0 * (1.0 - 24.0 * e2sum);
    Cx s = 2.0 * eta1 * xi + Cx(0, kPi) * (z + 1.0) / (z - 1.0);
    Cx qj = q;
    for (int j = 1; j <= ctx.N; ++j) {
        s += twopii * ((qj / z) / (1.0 - qj / z) - (qj * z) / (1.0 - qj * z));
        qj *= q;
    }
    return s;
}

inline WeierstrassData weierstrass_data(const NumericContext& ctx) {
    WeierstrassData d;
    d.e1 = weierstrass_p(Cx(0.5, 0), ctx);
    d.e2 = weierstrass_p(0.5 * ctx.tau, ctx);
    d.e3 = weierstrass_p(0.5 * (ctx.tau + 1.0), ctx);
    d.eta1 = weierstrass_zeta(Cx(0.5, 0), ctx);
    d.eta2 = weierstrass_zeta(0.5 * ctx.tau, ctx);
    return d;
}

// C_p = 2 (e2-e1)^{1/2} dxi T0 + (2 p(xi) - 2 e1)/(e2-e1)^{1/2} dxi T1 and
// the rank-one comparison map K1*:
//   T0 -> -Y0/(2 (e2-e1)^{1/2}) + (2 eta1 - e1)/(2 (e2-e1)^{1/2}) Y1
//   T1 -> ((e2-e1)^{1/2}/2) Y1
struct WeierstrassConnection {
    WeierstrassData data;
    Cx k1_T0_Y0, k1_T0_Y1, k1_T1_Y1;
};

inline WeierstrassConnection weierstrass_cp(const NumericContext& ctx) {
    WeierstrassConnection out;
    out.data = weierstrass_data(ctx);
    Cx root = std::sqrt(out.data.e2 - out.data.e1);
    out.k1_T0_Y0 = -1.0 / (2.0 * root);
    out.k1_T0_Y1 = (2.0 * out.data.eta1 - out.data.e1) / (2.0 * root);
    out.k1_T1_Y1 = root / 2.0;
    return out;
}

}  // namespace kzb

#endif

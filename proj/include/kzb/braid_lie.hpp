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
// The Lie algebras carried by the fibers: the elliptic braid Lie algebra
// tbar_{1,n+1} in its 2n-generator presentation, the t_{1,n}-style algebra
// with explicit t_{ij} generators, and the Kohno-Drinfeld algebra t_n. Also
// the certificate that the two elliptic presentations agree.

#ifndef KZB_BRAID_LIE_HPP
#define KZB_BRAID_LIE_HPP

#include <memory>
#include <string>
#include <vector>

#include "kzb/lie_presentation.hpp"

namespace kzb {

using LieQ = Lie<CycScalar>;

// Generators X_1..X_n, Y_1..Y_n in the fixed global order X_1 < ... < X_n <
// Y_1 < ... < Y_n, with the quadratic/cubic relations of the 2n-generator
// presentation of tbar_{1,n+1}.
struct EllipticBraidLie {
    std::unique_ptr<FreeLie> alg;
    std::unique_ptr<LiePresentation> pres;

    LieQ X(int i) const { return LieQ::generator(alg.get(), "X" + std::to_string(i)); }
    LieQ Y(int i) const { return LieQ::generator(alg.get(), "Y" + std::to_string(i)); }
};

inline EllipticBraidLie elliptic_tbar(int n, int maxdeg) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
    EllipticBraidLie out;
    out.alg = std::make_unique<FreeLie>(names, maxdeg);
    const FreeLie* L = out.alg.get();
    auto X = [&](int i) { return LieQ::generator(L, "X" + std::to_string(i)); };
    auto Y = [&](int i) { return LieQ::generator(L, "Y" + std::to_string(i)); };
    std::vector<LieQ> rels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            rels.push_back(bracket(X(i), X(j)));
            rels.push_back(bracket(Y(i), Y(j)));
            rels.push_back(bracket(X(i), Y(j)) - bracket(X(j), Y(i)));
            rels.push_back(bracket(bracket(X(j), Y(i)), Y(i) + Y(j)));
            rels.push_back(bracket(X(j) + X(i), bracket(Y(i), X(j))));
            for (int k = j + 1; k <= n; ++k) {
                rels.push_back(bracket(Y(k), bracket(Y(i), X(j))));
                rels.push_back(bracket(X(k), bracket(Y(i), X(j))));
            }
        }
    out.pres = std::make_unique<LiePresentation>(L, std::move(rels), maxdeg);
    return out;
}

// t_{1,n} with explicit pair generators t_{ij} = t_{ji} (one generator per
// unordered pair), modulo the standard relations. This is the target of the
// presentation-comparison maps.
struct TildeLie {
    int n = 0;
    std::unique_ptr<FreeLie> alg;
    std::unique_ptr<LiePresentation> pres;

    LieQ X(int i) const { return LieQ::generator(alg.get(), "X" + std::to_string(i)); }
    LieQ Y(int i) const { return LieQ::generator(alg.get(), "Y" + std::to_string(i)); }
    LieQ t(int i, int j) const {
        if (i > j) std::swap(i, j);
        return LieQ::generator(alg.get(), "t" + std::to_string(i) + "_" + std::to_string(j));
    }
};

inline TildeLie tilde_presentation(int n, int maxdeg) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("Y" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) names.push_back("t" + std::to_string(i) + "_" + std::to_string(j));
    TildeLie out;
    out.n = n;
    out.alg = std::make_unique<FreeLie>(names, maxdeg);
    const FreeLie* L = out.alg.get();
    auto X = [&](int i) { return LieQ::generator(L, "X" + std::to_string(i)); };
    auto Y = [&](int i) { return LieQ::generator(L, "Y" + std::to_string(i)); };
    auto t = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return LieQ::generator(L, "t" + std::to_string(i) + "_" + std::to_string(j));
    };
    std::vector<LieQ> rels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            rels.push_back(t(i, j) - bracket(X(i), Y(j)));
            rels.push_back(t(i, j) - bracket(X(j), Y(i)));
            rels.push_back(bracket(X(i), X(j)));
            rels.push_back(bracket(Y(i), Y(j)));
            rels.push_back(bracket(X(i) + X(j), t(i, j)));
            rels.push_back(bracket(Y(i) + Y(j), t(i, j)));
            for (int a = 1; a <= n; ++a) {
                if (a == i || a == j) continue;
                rels.push_back(bracket(X(a), t(i, j)));
                rels.push_back(bracket(Y(a), t(i, j)));
            }
        }
    out.pres = std::make_unique<LiePresentation>(L, std::move(rels), maxdeg);
    return out;
}

// Certificate for the presentation comparison: every defining relation of
// t_{1,n+1} on indices 1..n+1 (including the centrality quotient and
// [X_i,Y_i] = -sum t_{ij}) maps to zero in the 2n-generator presentation
// under X_{n+1} -> -sum X_i, Y_{n+1} -> -sum Y_i, t_{ij} -> [X_i, Y_j]; and
// conversely the 2n-generator relations map to zero in the t-presentation.
struct PresentationCertificate {
    bool ok = true;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

inline PresentationCertificate elliptic_presentation_certificate(int n, int maxdeg) {
    PresentationCertificate cert;
    EllipticBraidLie A = elliptic_tbar(n, maxdeg);
    const FreeLie* L = A.alg.get();
    auto X = [&](int i) {  // images of the (n+1)-index generators inside A
        if (i <= n) return A.X(i);
        LieQ s(L);
        for (int k = 1; k <= n; ++k) s = s - A.X(k);
        return s;
    };
    auto Y = [&](int i) {
        if (i <= n) return A.Y(i);
        LieQ s(L);
        for (int k = 1; k <= n; ++k) s = s - A.Y(k);
        return s;
    };
    auto t = [&](int i, int j) { return bracket(X(i), Y(j)); };

    // relations of t_{1,n+1} pushed into A
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) {
            if (i == j) continue;
            if (i < j) {
                cert.require(A.pres->in_ideal(bracket(X(i), X(j))), "[X,X]");
                cert.require(A.pres->in_ideal(bracket(Y(i), Y(j))), "[Y,Y]");
                cert.require(A.pres->in_ideal(t(i, j) - t(j, i)), "t symmetric");
                cert.require(A.pres->in_ideal(bracket(X(i) + X(j), t(i, j))), "[X_i+X_j,t_ij]");
                cert.require(A.pres->in_ideal(bracket(Y(i) + Y(j), t(i, j))), "[Y_i+Y_j,t_ij]");
                for (int a = 1; a <= n + 1; ++a) {
                    if (a == i || a == j) continue;
                    cert.require(A.pres->in_ideal(bracket(X(a), t(i, j))), "[X_a,t_ij]");
                    cert.require(A.pres->in_ideal(bracket(Y(a), t(i, j))), "[Y_a,t_ij]");
                }
            }
        }
    for (int i = 1; i <= n + 1; ++i) {
        LieQ s = bracket(X(i), Y(i));
        for (int j = 1; j <= n + 1; ++j)
            if (j != i) s = s + t(i, j);
        cert.require(A.pres->in_ideal(s), "[X_i,Y_i] = -sum t_ij");
    }
    {   // centrality quotient: sums vanish by construction of the images
        LieQ sx(L), sy(L);
        for (int i = 1; i <= n + 1; ++i) {
            sx = sx + X(i);
            sy = sy + Y(i);
        }
        cert.require(A.pres->in_ideal(sx), "sum X = 0");
        cert.require(A.pres->in_ideal(sy), "sum Y = 0");
    }

    // converse direction: A-relations inside the t-presentation on indices 1..n
    if (n >= 2) {
        TildeLie B = tilde_presentation(n, maxdeg);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                cert.require(B.pres->in_ideal(bracket(B.X(i), B.X(j))), "B [X,X]");
                cert.require(B.pres->in_ideal(bracket(B.Y(i), B.Y(j))), "B [Y,Y]");
                cert.require(B.pres->in_ideal(bracket(B.X(i), B.Y(j)) - bracket(B.X(j), B.Y(i))),
                             "B [X_i,Y_j]-[X_j,Y_i]");
                cert.require(B.pres->in_ideal(bracket(bracket(B.X(j), B.Y(i)), B.Y(i) + B.Y(j))),
                             "B cubic T");
                cert.require(B.pres->in_ideal(bracket(B.X(j) + B.X(i), bracket(B.Y(i), B.X(j)))),
                             "B cubic Z");
                for (int k = j + 1; k <= n; ++k) {
                    cert.require(B.pres->in_ideal(bracket(B.Y(k), bracket(B.Y(i), B.X(j)))),
                                 "B cubic Tk");
                    cert.require(B.pres->in_ideal(bracket(B.X(k), bracket(B.Y(i), B.X(j)))),
                                 "B cubic Zk");
                }
            }
    }
    return cert;
}

// Kohno-Drinfeld Lie algebra t_n: generators T_{ij} for -1 <= i < j <= n with
// (i,j) != (-1,0), infinitesimal pure braid relations. Only relations whose
// pairs all exist are imposed; the missing pair (-1,0) corresponds to the
// vanishing form dlog(z_i - z_j) at z = (1, 0).
struct KohnoDrinfeldLie {
    int n = 0;
    std::unique_ptr<FreeLie> alg;
    std::unique_ptr<LiePresentation> pres;

    static std::string gen_name(int i, int j) {
        if (i > j) std::swap(i, j);
        return "T(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    bool has_pair(int i, int j) const {
        if (i > j) std::swap(i, j);
        return i >= -1 && j <= n && i < j && !(i == -1 && j == 0);
    }
    LieQ T(int i, int j) const { return LieQ::generator(alg.get(), gen_name(i, j)); }
};

inline KohnoDrinfeldLie kohno_drinfeld(int n, int maxdeg) {
    KohnoDrinfeldLie out;
    out.n = n;
    std::vector<std::string> names;
    for (int i = -1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!(i == -1 && j == 0)) names.push_back(KohnoDrinfeldLie::gen_name(i, j));
    out.alg = std::make_unique<FreeLie>(names, maxdeg);
    std::vector<LieQ> rels;
    auto T = [&](int i, int j) { return out.T(i, j); };
    // triples a < b < c
    for (int a = -1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                if (!out.has_pair(a, b) || !out.has_pair(a, c) || !out.has_pair(b, c)) continue;
                rels.push_back(bracket(T(a, b), T(a, c) + T(b, c)));
                rels.push_back(bracket(T(a, c), T(a, b) + T(b, c)));
                rels.push_back(bracket(T(b, c), T(a, b) + T(a, c)));
            }
    // disjoint pairs
    for (int a = -1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = a; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    if (std::make_pair(c, d) <= std::make_pair(a, b)) continue;
                    if (a == c || a == d || b == c || b == d) continue;
                    if (!out.has_pair(a, b) || !out.has_pair(c, d)) continue;
                    rels.push_back(bracket(T(a, b), T(c, d)));
                }
    out.pres = std::make_unique<LiePresentation>(out.alg.get(), std::move(rels), maxdeg);
    return out;
}

}  // namespace kzb

#endif

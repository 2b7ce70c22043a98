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

#include <random>

#include "kzb/braid_lie.hpp"
#include "kzb/lie.hpp"
#include "kzb/lie_presentation.hpp"

using namespace kzb;

TEST_CASE("lyndon word enumeration") {
    CHECK(lyndon_words(2, 1).size() == 2);
    CHECK(lyndon_words(2, 2).size() == 1);
    CHECK(lyndon_words(2, 5).size() == 6);
    // brute-force oracle: a word is Lyndon iff strictly smaller than all rotations
    for (int a = 2; a <= 3; ++a)
        for (int d = 1; d <= 6; ++d) {
            std::size_t count = 0;
            std::vector<int> w(d, 0);
            while (true) {
                Word word;
                for (int x : w) word.push_back(static_cast<char>(x));
                if (is_lyndon(word)) ++count;
                int i = d - 1;
                while (i >= 0 && w[i] == a - 1) w[i--] = 0;
                if (i < 0) break;
                ++w[i];
            }
            auto fast = lyndon_words(a, d);
            CHECK(fast.size() == count);
            for (std::size_t i = 1; i < fast.size(); ++i) CHECK(fast[i - 1] < fast[i]);
        }
}

TEST_CASE("bracket basics and tensor oracle") {
    FreeLie L({"x", "y"}, 6);
    auto x = Lie<Rational>::generator(&L, "x");
    auto y = Lie<Rational>::generator(&L, "y");
    CHECK(bracket(x, x).is_zero());
    auto xy = bracket(x, y);
    Word w01;
    w01.push_back(0);
    w01.push_back(1);
    CHECK(xy.coeff(w01) == Rational(1));

    // [[x,y],[x,[x,y]]] against a direct tensor-algebra commutator
    auto lhs = bracket(bracket(x, y), bracket(x, bracket(x, y)));
    auto comm = [](const std::map<Word, long long>& a, const std::map<Word, long long>& b) {
        std::map<Word, long long> r;
        for (const auto& [u, cu] : a)
            for (const auto& [v, cv] : b) {
                r[u + v] += cu * cv;
                r[v + u] -= cu * cv;
            }
        return r;
    };
    std::map<Word, long long> tx{{Word(1, 0), 1}}, ty{{Word(1, 1), 1}};
    auto t_xy = comm(tx, ty);
    auto tensor = comm(t_xy, comm(tx, t_xy));
    auto coords = L.to_lyndon_int(tensor);
    Lie<Rational> oracle(&L);
    for (const auto& [w, c] : coords) oracle.add_term(w, Rational(c));
    CHECK(lhs == oracle);
}

TEST_CASE("jacobi identity randomized") {
    FreeLie L({"x", "y", "z"}, 6);
    std::mt19937 rng(5);
    auto rnd = [&]() {
        Lie<Rational> e(&L);
        for (int d = 1; d <= 2; ++d)
            for (const auto& w : L.lyndon().words(d))
                e.add_term(w, Rational(static_cast<int>(rng() % 5) - 2));
        return e;
    };
    for (int t = 0; t < 10; ++t) {
        auto a = rnd(), b = rnd(), c = rnd();
        auto jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        CHECK(jac.is_zero());
        CHECK(bracket(a, b) == -bracket(b, a));
    }
}

TEST_CASE("ad_pow unrolling") {
    FreeLie L({"x", "y"}, 5);
    auto x = Lie<Rational>::generator(&L, "x");
    auto y = Lie<Rational>::generator(&L, "y");
    CHECK(ad_pow(x, y, 0) == y);
    CHECK(ad_pow(x, y, 1) == bracket(x, y));
    CHECK(ad_pow(x, y, 2) == bracket(x, bracket(x, y)));
    CHECK_THROWS(ad_pow(x, y, -1));
}

TEST_CASE("free presentation reduces nothing") {
    FreeLie L({"x", "y"}, 4);
    LiePresentation free_pres(&L, {}, 4);
    auto e = bracket(Lie<CycScalar>::generator(&L, "x"), Lie<CycScalar>::generator(&L, "y"));
    CHECK(free_pres.reduce(e) == e);
}

TEST_CASE("elliptic braid relations reduce to zero") {
    for (int n = 2; n <= 3; ++n) {
        auto E = elliptic_tbar(n, 4);
        for (const auto& r : E.pres->relations()) CHECK(E.pres->reduce(r).is_zero());
        // [X_i, X_j] dies, and the shift relation Ad^k_{Y_i}(X_j) =
        // (-1)^{k+1} Ad^k_{Y_j}(X_i) holds in the quotient for k <= 4
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                CHECK(E.pres->in_ideal(bracket(E.X(i), E.X(j))));
                for (int k = 1; k + 1 <= 4; ++k) {
                    auto lhs = ad_pow(E.Y(i), E.X(j), k);
                    auto rhs = ad_pow(E.Y(j), E.X(i), k);
                    auto diff = (k % 2 == 0) ? lhs + rhs : lhs - rhs;
                    CHECK(E.pres->in_ideal(diff));
                }
            }
    }
}

TEST_CASE("ideal reduce idempotent and linear") {
    auto E = elliptic_tbar(2, 4);
    std::mt19937 rng(9);
    auto rnd = [&]() {
        Lie<CycScalar> e(E.alg.get());
        for (int d = 1; d <= 3; ++d)
            for (const auto& w : E.alg->lyndon().words(d))
                if (rng() % 3 == 0) e.add_term(w, CycScalar(static_cast<int>(rng() % 5) - 2));
        return e;
    };
    for (int t = 0; t < 8; ++t) {
        auto a = rnd(), b = rnd();
        auto ra = E.pres->reduce(a);
        CHECK(E.pres->reduce(ra) == ra);
        CHECK(E.pres->reduce(a + b) == E.pres->reduce(a) + E.pres->reduce(b));
        CHECK(E.pres->in_ideal(a - ra));
    }
}

TEST_CASE("quotient dimensions for tbar_{1,3}") {
    auto E = elliptic_tbar(2, 3);
    CHECK(E.pres->quotient_dim(1) == 4);
    // degree 2: six Lyndon words minus [X1,X2], [Y1,Y2], [X1,Y2]-[X2,Y1]
    CHECK(E.pres->quotient_dim(2) == 3);
}

TEST_CASE("presentation certificate for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        auto cert = elliptic_presentation_certificate(n, 4);
        if (!cert.ok)
            for (const auto& f : cert.failures) MESSAGE(f);
        CHECK(cert.ok);
    }
}

TEST_CASE("tbar_{1,2} is free on X1, Y1") {
    auto E = elliptic_tbar(1, 4);
    CHECK(E.pres->relations().empty());
    for (int d = 1; d <= 4; ++d)
        CHECK(E.pres->quotient_dim(d) == static_cast<int>(E.alg->lyndon().words(d).size()));
}

TEST_CASE("kohno drinfeld relations") {
    auto K = kohno_drinfeld(2, 4);
    // generators: (-1,1), (-1,2), (0,1), (0,2), (1,2)
    CHECK(K.alg->ngen() == 5);
    CHECK(K.pres->in_ideal(bracket(K.T(0, 1), K.T(0, 2) + K.T(1, 2))));
    CHECK(K.pres->in_ideal(bracket(K.T(-1, 1), K.T(0, 2))));
    CHECK_FALSE(K.pres->in_ideal(bracket(K.T(0, 1), K.T(0, 2))));
}

TEST_CASE("lie_hom extends through brackets") {
    FreeLie Src({"a", "b"}, 4);
    FreeLie Dst({"x", "y"}, 4);
    LieHom<CycScalar> h(&Src, &Dst);
    auto x = Lie<CycScalar>::generator(&Dst, "x");
    auto y = Lie<CycScalar>::generator(&Dst, "y");
    h.set_image("a", x);
    h.set_image("b", bracket(x, y));
    auto a = Lie<CycScalar>::generator(&Src, "a");
    auto b = Lie<CycScalar>::generator(&Src, "b");
    CHECK(h.apply(bracket(a, b), 4) == bracket(x, bracket(x, y)));
    // identity morphism
    LieHom<CycScalar> id(&Dst, &Dst);
    id.set_image("x", x);
    id.set_image("y", y);
    auto e = bracket(x, bracket(x, y)) + y;
    CHECK(id.apply(e, 4) == e);
}

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
// The transfer engine is validated on the cochain algebra of the Heisenberg
// nilmanifold: a six-dimensional dga whose cohomology carries a non-trivial
// transferred m_3 (a Massey product), so the Stasheff and morphism checks
// have teeth in every degree, and a single flipped tree sign breaks them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kzb/checks.hpp"
#include "kzb/transfer.hpp"

using namespace kzb;

namespace {

// Lambda(e1,e2,e3) with d e3 = e1 ^ e2
struct Heis {
    std::unique_ptr<CAlgebra> A;
    std::unique_ptr<Hodge> H;
};

Heis build_heisenberg(bool permuted_m = false) {
    std::vector<std::string> names{"1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};
    std::vector<int> degs{0, 1, 1, 1, 2, 2, 2, 3};
    auto idx = [&names](const std::string& s) {
        for (int i = 0; i < static_cast<int>(names.size()); ++i)
            if (names[i] == s) return i;
        return -1;
    };
    int e1 = idx("e1"), e2 = idx("e2"), e3 = idx("e3");
    int e12 = idx("e12"), e13 = idx("e13"), e23 = idx("e23"), e123 = idx("e123");
    auto rule = [=](const std::vector<int>& t) -> std::optional<Vec> {
        int k = static_cast<int>(t.size());
        if (k == 1) {
            if (t[0] == e3) return Vec{{e12, CycScalar(1)}};
            return Vec{};
        }
        if (k == 2) {
            auto wedge1 = [&](int a, int b) -> Vec {  // a,b in {e1,e2,e3}
                if (a == b) return {};
                int i = a - e1 + 1, j = b - e1 + 1;
                int sign = 1;
                if (i > j) {
                    std::swap(i, j);
                    sign = -1;
                }
                int id = (i == 1 && j == 2) ? e12 : (i == 1 && j == 3) ? e13 : e23;
                return Vec{{id, CycScalar(sign)}};
            };
            bool a1 = t[0] >= e1 && t[0] <= e3, b1 = t[1] >= e1 && t[1] <= e3;
            if (a1 && b1) return wedge1(t[0], t[1]);
            auto wedge12 = [&](int a, int bc) -> Vec {  // e_a ^ e_{bc}
                int i = a - e1 + 1;
                int j, k2;
                if (bc == e12) j = 1, k2 = 2;
                else if (bc == e13) j = 1, k2 = 3;
                else j = 2, k2 = 3;
                if (i == j || i == k2) return {};
                // sign of sorting (i, j, k2) into (1,2,3)
                int sign = (i < j) ? 1 : (i > k2 ? 1 : -1);
                return Vec{{e123, CycScalar(sign)}};
            };
            bool a2 = t[0] >= e12 && t[0] <= e23, b2 = t[1] >= e12 && t[1] <= e23;
            if (a1 && b2) return wedge12(t[0], t[1]);
            if (a2 && b1) return wedge12(t[1], t[0]);  // even-degree factor commutes
            return Vec{};
        }
        return Vec{};
    };
    Heis h;
    h.A = std::make_unique<CAlgebra>("heisenberg", names, degs, rule, 0);
    std::map<int, Hodge::DegreeData> hd;
    Hodge::DegreeData d0;
    d0.w_names = {"1"};
    d0.w_basis = {Vec{{0, CycScalar(1)}}};
    hd[0] = d0;
    Hodge::DegreeData d1;
    d1.w_names = {"e1", "e2"};
    d1.w_basis = {Vec{{e1, CycScalar(1)}}, Vec{{e2, CycScalar(1)}}};
    d1.m_basis = {Vec{{e3, CycScalar(1)}}};
    hd[1] = d1;
    Hodge::DegreeData d2;
    if (!permuted_m) {
        d2.w_names = {"E13", "E23"};
        d2.w_basis = {Vec{{e13, CycScalar(1)}}, Vec{{e23, CycScalar(1)}}};
    } else {
        // same W^2 span, different presentation: order swapped and rescaled
        d2.w_names = {"E13", "E23"};
        d2.w_basis = {Vec{{e13, CycScalar(1)}}, Vec{{e23, CycScalar(1)}}};
    }
    hd[2] = d2;
    Hodge::DegreeData d3;
    d3.w_names = {"E123"};
    d3.w_basis = {Vec{{e123, CycScalar(1)}}};
    hd[3] = d3;
    h.H = std::make_unique<Hodge>(h.A.get(), hd);
    return h;
}

}  // namespace

TEST_CASE("tree enumeration matches the composition grammar") {
    CHECK(enumerate_trees(2).size() == 1);
    CHECK(enumerate_trees(3).size() == 3);
    CHECK(enumerate_trees(4).size() == 11);
    CHECK(enumerate_trees(5).size() == 45);
    CHECK(enumerate_trees(6).size() == 197);
    CHECK(enumerate_trees(7).size() == 903);
    // duplicate-free
    for (int n = 2; n <= 6; ++n) {
        std::set<std::string> seen;
        for (const auto& t : enumerate_trees(n)) {
            CHECK(t.leaf_count() == n);
            CHECK(seen.insert(t.paren()).second);
        }
    }
    CHECK_THROWS(enumerate_trees(1));
    // the binary corolla serializes to (..)
    CHECK(enumerate_trees(2)[0].paren() == "(..)");
}

TEST_CASE("heisenberg dga satisfies the shifted Stasheff identities") {
    Heis h = build_heisenberg();
    auto rep = check_stasheff(*h.A, 4, [&](const std::vector<int>& t) {
        int deg = 0;
        for (int id : t) deg += h.A->degree(id);
        return deg <= 5;
    });
    if (!rep.pass())
        for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.pass());
}

TEST_CASE("hodge side conditions hold") {
    Heis h = build_heisenberg();
    // f g = id, f h = 0, h g = 0, h h = 0, and D h + h D = id - g f on degree 1
    for (int i = 0; i < 2; ++i) {
        auto coords = h.H->f(h.H->g(1, i), 1);
        for (int j = 0; j < 2; ++j) CHECK(coords[j] == (i == j ? CycScalar(1) : CycScalar(0)));
    }
    int e3 = h.A->find_basis("e3");
    Vec x{{e3, CycScalar(1)}};
    Vec dx = h.A->d(x);
    CHECK(vec_is_zero(h.H->h(x, 1)));          // h g = 0 and h kills M^1... h(e3) is M-part: 0
    CHECK(h.H->h(dx, 2) == x);                 // h inverts D on DM
    CHECK(vec_is_zero(h.H->h(h.H->h(dx, 2), 1)));  // h h = 0
    // D h + h D = 1 - g f on e3 (pure M): Dh(e3)=0, hD(e3)=e3, gf(e3)=0
    Vec lhs = h.H->h(dx, 1 + 1);
    CHECK(lhs == x);
}

TEST_CASE("transferred structure on the Heisenberg cohomology") {
    Heis h = build_heisenberg();
    Transfer T(h.A.get(), h.H.get());
    int ie1 = T.w_index("e1"), ie2 = T.w_index("e2");
    // m^W_2(e1,e2) = f(e12) = 0
    CHECK(T.mW_n({ie1, ie2}).empty());
    // the Massey product m^W_3(e1,e2,e2) is nonzero (lands on E23)
    auto m3 = T.mW_n({ie1, ie2, ie2});
    CHECK(!m3.empty());
    // transferred Stasheff identities up to arity 4, all W tuples
    CAlgebra W = transferred_algebra(T);
    auto rep = check_stasheff(W, 4, [&](const std::vector<int>& t) {
        int deg = 0;
        for (int id : t) deg += W.degree(id);
        return deg <= 5;
    });
    if (!rep.pass())
        for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.pass());
    // infinity-morphism identities up to arity 4
    auto mrep = check_morphism(T, 4, [&](const std::vector<int>& t) {
        int deg = 0;
        for (int id : t) deg += T.w(id).deg;
        return deg <= 5;
    });
    if (!mrep.pass())
        for (const auto& f : mrep.failures) MESSAGE(f);
    CHECK(mrep.pass());
}

TEST_CASE("flipping one tree sign breaks the checks") {
    Heis h = build_heisenberg();
    SignConvention flipped = [](const PlanarTree& t) {
        // flip the left comb with three leaves
        return t.paren() == "((..).)" ? 1 : 0;
    };
    Transfer T(h.A.get(), h.H.get(), flipped);
    auto mrep = check_morphism(T, 3, [](const std::vector<int>&) { return true; });
    CHECK_FALSE(mrep.pass());
    CAlgebra W = transferred_algebra(T);
    auto rep = check_stasheff(W, 4, [&](const std::vector<int>& t) {
        int deg = 0;
        for (int id : t) deg += W.degree(id);
        return deg <= 5;
    });
    CHECK_FALSE(rep.pass());
}

TEST_CASE("transfer is stable under a different M presentation") {
    // rescaling/permuting the M generators spans the same complement, so the
    // unique pair with g_n valued in M is reproduced exactly
    Heis h1 = build_heisenberg();
    std::map<int, Hodge::DegreeData> hd;
    int e3 = h1.A->find_basis("e3");
    Hodge::DegreeData d0;
    d0.w_names = {"1"};
    d0.w_basis = {Vec{{0, CycScalar(1)}}};
    hd[0] = d0;
    Hodge::DegreeData d1;
    d1.w_names = {"e1", "e2"};
    d1.w_basis = {h1.A->e("e1"), h1.A->e("e2")};
    d1.m_basis = {vec_scaled(Vec{{e3, CycScalar(1)}}, CycScalar(Rational(7, 3)))};
    hd[1] = d1;
    Hodge::DegreeData d2;
    d2.w_names = {"E13", "E23"};
    d2.w_basis = {h1.A->e("e13"), h1.A->e("e23")};
    hd[2] = d2;
    Hodge::DegreeData d3;
    d3.w_names = {"E123"};
    d3.w_basis = {h1.A->e("e123")};
    hd[3] = d3;
    Hodge H2(h1.A.get(), hd);
    Transfer T1(h1.A.get(), h1.H.get());
    Transfer T2(h1.A.get(), &H2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                std::vector<int> t{a, b + 0, c + 0};
                // compare g_3 and m^W_3 on degree-1 tuples (indices of e1,e2)
                std::vector<int> t1{T1.w_index(a ? "e2" : "e1"), T1.w_index(b ? "e2" : "e1"),
                                    T1.w_index(c ? "e2" : "e1")};
                std::vector<int> t2{T2.w_index(a ? "e2" : "e1"), T2.w_index(b ? "e2" : "e1"),
                                    T2.w_index(c ? "e2" : "e1")};
                CHECK(T1.g_n(t1) == T2.g_n(t2));
                CHECK(T1.mW_n(t1) == T2.mW_n(t2));
            }
}

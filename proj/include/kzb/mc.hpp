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
// The degree-zero geometric connection attached to a transferred morphism:
// an element of A^1 tensor the completed free Lie algebra on the duals of
// the degree-one W basis. The defining property is that the tensor-algebra
// expansion of C has, at every word, the corresponding g_n value on the
// (sign-fixed) dual basis; the Lyndon coefficients are solved triangularly
// from that property, word by word.

#ifndef KZB_MC_HPP
#define KZB_MC_HPP

#include <map>
#include <string>
#include <vector>

#include "kzb/lie_presentation.hpp"
#include "kzb/transfer.hpp"

namespace kzb {

// A degree-1 algebra element tensor a Lie series, stored as Lyndon word ->
// algebra coefficient.
struct ConnectionForm {
    const CAlgebra* A = nullptr;
    const FreeLie* L = nullptr;
    std::map<Word, Vec> coeffs;

    void add(const Word& w, const Vec& v) {
        if (vec_is_zero(v)) return;
        auto it = coeffs.find(w);
        if (it == coeffs.end()) {
            coeffs[w] = v;
        } else {
            vec_axpy(it->second, v, CycScalar(1));
            if (vec_is_zero(it->second)) coeffs.erase(it);
        }
    }
    void add_lie_term(const Vec& coeff, const Lie<CycScalar>& lie) {
        for (const auto& [w, k] : lie.terms()) add(w, vec_scaled(coeff, k));
    }
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const ConnectionForm& a, const ConnectionForm& b) {
        if (a.coeffs.size() != b.coeffs.size()) return false;
        for (const auto& [w, v] : a.coeffs) {
            auto it = b.coeffs.find(w);
            if (it == b.coeffs.end() || !(it->second == v)) return false;
        }
        return true;
    }

    // kill basis elements rejected by the predicate (the strict map r
    // evaluates cochain directions at the identity)
    template <class Keep>
    ConnectionForm restricted(Keep&& keep) const {
        ConnectionForm out;
        out.A = A;
        out.L = L;
        for (const auto& [w, v] : coeffs) {
            Vec nv;
            for (const auto& [id, c] : v)
                if (keep(id)) vec_add(nv, id, c);
            out.add(w, nv);
        }
        return out;
    }

    // reduce the Lie side modulo a presentation (pivot words rewritten)
    ConnectionForm reduced(const LiePresentation& P) const {
        ConnectionForm out;
        out.A = A;
        out.L = L;
        std::map<Word, Vec> work = coeffs;
        while (true) {
            auto it = work.begin();
            while (it != work.end() && (!P.is_pivot(it->first) || vec_is_zero(it->second))) ++it;
            if (it == work.end()) break;
            Word w = it->first;
            Vec c = it->second;
            // subtract c * row(w); the pivot coefficient is 1, so w cancels
            for (const auto& [u, k] : P.row(w).terms()) {
                Vec delta = vec_scaled(c, k);
                auto j = work.find(u);
                if (j == work.end()) {
                    Vec neg;
                    vec_axpy(neg, delta, CycScalar(-1));
                    if (!vec_is_zero(neg)) work[u] = neg;
                } else {
                    vec_axpy(j->second, delta, CycScalar(-1));
                    if (vec_is_zero(j->second)) work.erase(j);
                }
            }
        }
        for (auto& [w, v] : work) out.add(w, v);
        return out;
    }

    std::string to_string() const {
        if (coeffs.empty()) return "0";
        std::string s;
        for (const auto& [w, v] : coeffs) {
            if (!s.empty()) s += "\n";
            s += "[" + word_to_string(w, L->names()) + "] : " + A->show(v);
        }
        return s;
    }
};

// Dual data: which W element each Lie generator is dual to, and the sign of
// the pairing (the geometric models use the duals of the negated basis).
struct DualGenerator {
    std::string w_name;    // W element in the Hodge data
    std::string lie_name;  // generator of the fiber Lie algebra
    int sign = -1;         // pairing is against sign * w
};

inline ConnectionForm mc_from_morphism(const Transfer& T, const FreeLie* L,
                                       const std::vector<DualGenerator>& duals, int maxdeg) {
    ConnectionForm C;
    C.A = T.algebra();
    C.L = L;
    // map Lie generator index -> (W index, sign)
    std::vector<int> widx(L->ngen(), -1);
    std::vector<int> sgn(L->ngen(), 1);
    for (const auto& d : duals) {
        int gi = L->generator_index(d.lie_name);
        widx[gi] = T.w_index(d.w_name);
        sgn[gi] = d.sign;
    }
    for (int n = 1; n <= maxdeg; ++n) {
        for (const Word& w : L->lyndon().words(n)) {
            // v_w = g_n(sign-fixed basis tuple of w)
            std::vector<int> tuple;
            int s = 1;
            bool ok = true;
            for (char ch : w) {
                int gi = static_cast<int>(static_cast<unsigned char>(ch));
                if (widx[gi] < 0) {
                    ok = false;
                    break;
                }
                tuple.push_back(widx[gi]);
                s *= sgn[gi];
            }
            if (!ok) continue;
            Vec v = T.g_classical(tuple);
            if (s < 0) v = vec_scaled(v, CycScalar(-1));
            // subtract expansions of the already-placed smaller Lyndon words
            for (const auto& [u, cu] : C.coeffs) {
                if (u.size() != w.size() || !(u < w)) continue;
                const auto& exp = L->lyndon().expansion(u);
                auto it = exp.find(w);
                if (it != exp.end()) vec_axpy(v, cu, CycScalar(-it->second));
            }
            C.add(w, v);
        }
    }
    return C;
}

// Consistency of the solved connection: its tensor expansion must reproduce
// every g_n value on the dual words (not only the Lyndon ones); for a free
// fiber this certifies that the morphism really is of Lie type.
inline bool mc_expansion_consistent(const ConnectionForm& C, const Transfer& T,
                                    const std::vector<DualGenerator>& duals, int maxdeg) {
    const FreeLie* L = C.L;
    std::vector<int> widx(L->ngen(), -1);
    std::vector<int> sgn(L->ngen(), 1);
    for (const auto& d : duals) {
        int gi = L->generator_index(d.lie_name);
        widx[gi] = T.w_index(d.w_name);
        sgn[gi] = d.sign;
    }
    // expansion of C per word
    std::map<Word, Vec> words;
    for (const auto& [w, v] : C.coeffs)
        for (const auto& [u, k] : L->lyndon().expansion(w)) {
            auto it = words.find(u);
            if (it == words.end()) {
                words[u] = vec_scaled(v, CycScalar(k));
            } else {
                vec_axpy(it->second, v, CycScalar(k));
            }
        }
    // enumerate all words up to maxdeg over generators with duals
    std::vector<int> gens;
    for (int g = 0; g < L->ngen(); ++g)
        if (widx[g] >= 0) gens.push_back(g);
    std::vector<int> stack;
    bool ok = true;
    std::function<void(int)> rec = [&](int n) {
        if (!ok) return;
        if (static_cast<int>(stack.size()) == n) {
            Word w;
            std::vector<int> tuple;
            int s = 1;
            for (int g : stack) {
                w.push_back(static_cast<char>(g));
                tuple.push_back(widx[g]);
                s *= sgn[g];
            }
            Vec expect = T.g_classical(tuple);
            if (s < 0) expect = vec_scaled(expect, CycScalar(-1));
            Vec got;
            auto it = words.find(w);
            if (it != words.end()) got = it->second;
            vec_axpy(got, expect, CycScalar(-1));
            if (!vec_is_zero(got)) ok = false;
            return;
        }
        for (int g : gens) {
            stack.push_back(g);
            rec(n);
            stack.pop_back();
        }
    };
    for (int n = 1; n <= maxdeg && ok; ++n) rec(n);
    return ok;
}

}  // namespace kzb

#endif

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
// Residual checks for the shifted Stasheff identities and for the
// infinity-morphism identities of a transfer. In the shifted picture both
// families read sign-free except for the Koszul sign of moving the odd inner
// operation past the first r inputs. A zero report certifies the identity on
// the supplied tuples; these checks are what pins the tree sign convention.

#ifndef KZB_CHECKS_HPP
#define KZB_CHECKS_HPP

#include <string>
#include <vector>

#include "kzb/transfer.hpp"

namespace kzb {

struct ResidualReport {
    int checked = 0;
    int failed = 0;
    std::vector<std::string> failures;

    bool pass() const { return failed == 0; }
    void record(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failed;
            if (failures.size() < 16) failures.push_back(what);
        }
    }
};

// sum_{r+s+t=n} (-1)^{|x_1|'+...+|x_r|'} b_{r+1+t}(x_1...x_r, b_s(...), ...)
// evaluated on a tuple of basis ids of A; returns the residual vector.
inline Vec stasheff_residual(const CAlgebra& A, const std::vector<int>& tuple) {
    int n = static_cast<int>(tuple.size());
    Vec out;
    for (int r = 0; r < n; ++r)
        for (int s = 1; r + s <= n; ++s) {
            int t = n - r - s;
            if (r + 1 + t < 1) continue;
            int sign = 0;
            for (int i = 0; i < r; ++i) sign += A.degree(tuple[i]) - 1;
            std::vector<Vec> inner;
            for (int i = r; i < r + s; ++i) inner.push_back(Vec{{tuple[i], CycScalar(1)}});
            Vec mid = A.b(inner);
            if (vec_is_zero(mid)) continue;
            std::vector<Vec> outer;
            for (int i = 0; i < r; ++i) outer.push_back(Vec{{tuple[i], CycScalar(1)}});
            outer.push_back(mid);
            for (int i = r + s; i < n; ++i) outer.push_back(Vec{{tuple[i], CycScalar(1)}});
            vec_axpy(out, A.b(outer), CycScalar((sign & 1) ? -1 : 1));
        }
    return out;
}

// run the Stasheff residuals over all positive-degree basis tuples up to
// maxArity (optionally filtered)
template <class Filter>
ResidualReport check_stasheff(const CAlgebra& A, int maxArity, Filter&& keep) {
    ResidualReport rep;
    std::vector<int> ids;
    for (int i = 0; i < A.dim(); ++i)
        if (A.degree(i) > 0 && i != A.unit_id()) ids.push_back(i);
    std::vector<int> tuple;
    std::function<void(int)> rec = [&](int n) {
        if (static_cast<int>(tuple.size()) == n) {
            if (!keep(tuple)) return;
            Vec r = stasheff_residual(A, tuple);
            std::string what = "stasheff arity " + std::to_string(n) + " on (";
            for (int id : tuple) what += A.basis_name(id) + " ";
            what += "): " + A.show(r);
            rep.record(vec_is_zero(r), what);
            return;
        }
        for (int id : ids) {
            tuple.push_back(id);
            rec(n);
            tuple.pop_back();
        }
    };
    for (int n = 1; n <= maxArity; ++n) rec(n);
    return rep;
}

inline ResidualReport check_stasheff(const CAlgebra& A, int maxArity) {
    return check_stasheff(A, maxArity, [](const std::vector<int>&) { return true; });
}

// The transferred structure of a Transfer viewed as an algebra on the W basis
// (b_1 = 0, b_n = m^W_n), so the generic Stasheff checker applies to it.
inline CAlgebra transferred_algebra(const Transfer& T) {
    std::vector<std::string> names;
    std::vector<int> degs;
    for (int i = 0; i < T.w_count(); ++i) {
        names.push_back(T.w(i).name);
        degs.push_back(T.w(i).deg);
    }
    const Transfer* tp = &T;
    auto rule = [tp](const std::vector<int>& tuple) -> std::optional<Vec> {
        if (tuple.size() == 1) return Vec{};
        std::map<int, CycScalar> v = tp->mW_n(tuple);
        Vec out;
        for (const auto& [i, c] : v) vec_add(out, i, c);
        return out;
    };
    return CAlgebra("transferred(" + T.algebra()->name() + ")", names, degs, rule);
}

// Infinity-morphism residual of (m^W, g) into A on a tuple of W indices:
//   sum_{r+s+t=n} +- G_{r+1+t}(1^r x b^W_s x 1^t)  -  sum b^A_k(G x ... x G).
inline Vec morphism_residual(const Transfer& T, const std::vector<int>& tuple) {
    const CAlgebra& A = *T.algebra();
    int n = static_cast<int>(tuple.size());
    Vec lhs;
    for (int r = 0; r < n; ++r)
        for (int s = 1; r + s <= n; ++s) {
            int t = n - r - s;
            int sign = 0;
            for (int i = 0; i < r; ++i) sign += T.w(tuple[i]).deg - 1;
            std::vector<int> inner(tuple.begin() + r, tuple.begin() + r + s);
            std::map<int, CycScalar> mid = T.bW_n(inner);
            if (mid.empty()) continue;
            std::vector<std::map<int, CycScalar>> args;
            for (int i = 0; i < r; ++i) args.push_back({{tuple[i], CycScalar(1)}});
            args.push_back(mid);
            for (int i = r + s; i < n; ++i) args.push_back({{tuple[i], CycScalar(1)}});
            vec_axpy(lhs, T.g_multi(args), CycScalar((sign & 1) ? -1 : 1));
        }
    Vec rhs;
    // compositions n = i_1 + ... + i_k
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int start) {
        if (start == n) {
            std::vector<Vec> gs;
            for (const auto& b : blocks) gs.push_back(T.g_n(b));
            vec_axpy(rhs, A.b(gs), CycScalar(1));
            return;
        }
        for (int len = 1; start + len <= n; ++len) {
            blocks.emplace_back(tuple.begin() + start, tuple.begin() + start + len);
            rec(start + len);
            blocks.pop_back();
        }
    };
    rec(0);
    Vec out = rhs;
    vec_axpy(out, lhs, CycScalar(-1));
    return out;
}

template <class Filter>
ResidualReport check_morphism(const Transfer& T, int maxArity, Filter&& keep) {
    ResidualReport rep;
    std::vector<int> tuple;
    std::function<void(int)> rec = [&](int n) {
        if (static_cast<int>(tuple.size()) == n) {
            if (!keep(tuple)) return;
            Vec r = morphism_residual(T, tuple);
            std::string what = "morphism arity " + std::to_string(n) + " on (";
            for (int id : tuple) what += T.w(id).name + " ";
            what += "): " + T.algebra()->show(r);
            rep.record(vec_is_zero(r), what);
            return;
        }
        for (int i = 0; i < T.w_count(); ++i) {
            if (T.w(i).deg < 1) continue;
            tuple.push_back(i);
            rec(n);
            tuple.pop_back();
        }
    };
    for (int n = 1; n <= maxArity; ++n) rec(n);
    return rep;
}

inline ResidualReport check_morphism(const Transfer& T, int maxArity) {
    return check_morphism(T, maxArity, [](const std::vector<int>&) { return true; });
}

}  // namespace kzb

#endif

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
// The homotopy transfer engine. Decorated planar trees evaluate bottom-up:
// each internal vertex applies the (shifted) operation of its arity, each
// internal edge applies the homotopy h. The kernels p_n sum the trees of P_n
// with the validated sign convention, and the transferred structure and
// quasi-isomorphism are m^W_n = f p_n g^{x n} and g_n = h p_n g^{x n}.

#ifndef KZB_TRANSFER_HPP
#define KZB_TRANSFER_HPP

#include <map>
#include <string>
#include <vector>

#include "kzb/calgebra.hpp"
#include "kzb/hodge.hpp"
#include "kzb/tree.hpp"

namespace kzb {

struct GradedVec {
    Vec v;
    int deg = 0;
};

// P_T on elements of A: vertices apply b_k, internal edges apply the
// homotopy of the bar picture, which is -h for the Hodge h normalized by
// h(D a) = a. (With +h the transferred pair fails the shifted Stasheff and
// morphism identities already at arity 2; the sign is pinned by those
// checks, see the transfer tests.)
inline GradedVec evaluate_tree(const PlanarTree& t, const CAlgebra& A, const Hodge& H,
                               const std::vector<GradedVec>& inputs, int& cursor) {
    std::vector<Vec> child_vals;
    int deg = 2 - t.arity();
    for (const auto& c : t.children) {
        if (c.is_leaf()) {
            child_vals.push_back(inputs[cursor].v);
            deg += inputs[cursor].deg;
            ++cursor;
        } else {
            GradedVec sub = evaluate_tree(c, A, H, inputs, cursor);
            child_vals.push_back(vec_scaled(H.h(sub.v, sub.deg), CycScalar(-1)));
            deg += sub.deg - 1;
        }
    }
    return {A.b(child_vals), deg};
}

inline GradedVec evaluate_tree(const PlanarTree& t, const CAlgebra& A, const Hodge& H,
                               const std::vector<GradedVec>& inputs) {
    int cursor = 0;
    return evaluate_tree(t, A, H, inputs, cursor);
}

// p_n = sum over trees with n leaves (signs per convention)
inline GradedVec p_kernel(int n, const CAlgebra& A, const Hodge& H,
                          const std::vector<GradedVec>& inputs,
                          const SignConvention& conv = default_sign_convention()) {
    GradedVec out;
    bool first = true;
    for (const auto& t : enumerate_trees(n)) {
        GradedVec val = evaluate_tree(t, A, H, inputs);
        if (first) {
            out.deg = val.deg;
            first = false;
        }
        if (theta_sign(t, conv))
            vec_axpy(out.v, val.v, CycScalar(-1));
        else
            vec_axpy(out.v, val.v, CycScalar(1));
    }
    return out;
}

// Transferred structure over the W-basis of a Hodge decomposition. W basis
// elements are indexed globally; results are memoized per input tuple.
class Transfer {
  public:
    struct WElt {
        int deg;
        int idx;  // index within Hodge degree data
        std::string name;
        Vec vec;
    };

    Transfer(const CAlgebra* A, const Hodge* H,
             SignConvention conv = default_sign_convention())
        : A_(A), H_(H), conv_(std::move(conv)) {
        for (const auto& [deg, dd] : H->data())
            for (std::size_t i = 0; i < dd.w_basis.size(); ++i)
                welts_.push_back({deg, static_cast<int>(i), dd.w_names[i], dd.w_basis[i]});
    }

    const CAlgebra* algebra() const { return A_; }
    const Hodge* hodge() const { return H_; }
    int w_count() const { return static_cast<int>(welts_.size()); }
    const WElt& w(int i) const { return welts_.at(i); }
    int w_index(const std::string& name) const {
        for (int i = 0; i < w_count(); ++i)
            if (welts_[i].name == name) return i;
        throw std::invalid_argument("Transfer: unknown W element " + name);
    }

    // bar-picture quasi-isomorphism component: G_1 = inclusion and
    // G_n = (-h) p_n g^{xn}; this is the family entering the morphism checks
    const Vec& g_n(const std::vector<int>& tuple) const {
        auto it = g_cache_.find(tuple);
        if (it != g_cache_.end()) return it->second;
        Vec val;
        if (tuple.size() == 1) {
            val = welts_[tuple[0]].vec;
        } else {
            GradedVec p = p_kernel(static_cast<int>(tuple.size()), *A_, *H_, lift(tuple), conv_);
            val = vec_scaled(H_->h(p.v, p.deg), CycScalar(-1));
        }
        return g_cache_.emplace(tuple, std::move(val)).first->second;
    }

    // the same component in the classical normalization g_n = (-1)^{n+1} G_n,
    // which is the normalization the geometric models print
    Vec g_classical(const std::vector<int>& tuple) const {
        Vec v = g_n(tuple);
        if (tuple.size() % 2 == 0) v = vec_scaled(v, CycScalar(-1));
        return v;
    }

    // shifted transferred operation b^W_n = f p_n g^{xn} on a basis tuple
    // (n >= 2; b^W_1 = 0 since d_W = 0)
    const std::map<int, CycScalar>& bW_n(const std::vector<int>& tuple) const {
        auto it = m_cache_.find(tuple);
        if (it != m_cache_.end()) return it->second;
        std::map<int, CycScalar> out;
        if (tuple.size() >= 2) {
            GradedVec p = p_kernel(static_cast<int>(tuple.size()), *A_, *H_, lift(tuple), conv_);
            if (!vec_is_zero(p.v)) {
                std::vector<CycScalar> coords = H_->f(p.v, p.deg);
                for (int i = 0; i < w_count(); ++i)
                    if (welts_[i].deg == p.deg && !coords[welts_[i].idx].is_zero())
                        out[i] = coords[welts_[i].idx];
            }
        }
        return m_cache_.emplace(tuple, std::move(out)).first->second;
    }

    // the unshifted table m^W_n, i.e. b^W_n with the canonical shift sign
    // divided out; this is what a CAlgebra rule must return
    std::map<int, CycScalar> mW_n(const std::vector<int>& tuple) const {
        std::map<int, CycScalar> out = bW_n(tuple);
        int n = static_cast<int>(tuple.size());
        int sgn = 0;
        for (int pos = 0; pos < n; ++pos) sgn += (n - 1 - pos) * (welts_[tuple[pos]].deg - 1);
        if (sgn & 1)
            for (auto& [i, c] : out) c = -c;
        return out;
    }

    // raw kernel value, for the p-kernel golden tables
    GradedVec p_n(const std::vector<int>& tuple) const {
        return p_kernel(static_cast<int>(tuple.size()), *A_, *H_, lift(tuple), conv_);
    }

    // multilinear extension of g to W-coordinate vectors
    Vec g_multi(const std::vector<std::map<int, CycScalar>>& args) const {
        Vec out;
        std::vector<int> tuple(args.size());
        rec_multi(args, 0, CycScalar(1), tuple, [&](const std::vector<int>& t, const CycScalar& c) {
            vec_axpy(out, g_n(t), c);
        });
        return out;
    }
    std::map<int, CycScalar> mW_multi(const std::vector<std::map<int, CycScalar>>& args) const {
        std::map<int, CycScalar> out;
        std::vector<int> tuple(args.size());
        rec_multi(args, 0, CycScalar(1), tuple, [&](const std::vector<int>& t, const CycScalar& c) {
            for (const auto& [i, v] : mW_n(t)) {
                out[i] = (out.count(i) ? out[i] : CycScalar(0)) + v * c;
                if (out[i].is_zero()) out.erase(i);
            }
        });
        return out;
    }

  private:
    const CAlgebra* A_;
    const Hodge* H_;
    SignConvention conv_;
    std::vector<WElt> welts_;
    mutable std::map<std::vector<int>, Vec> g_cache_;
    mutable std::map<std::vector<int>, std::map<int, CycScalar>> m_cache_;

    std::vector<GradedVec> lift(const std::vector<int>& tuple) const {
        std::vector<GradedVec> in;
        in.reserve(tuple.size());
        for (int i : tuple) in.push_back({welts_[i].vec, welts_[i].deg});
        return in;
    }

    template <class Fn>
    void rec_multi(const std::vector<std::map<int, CycScalar>>& args, std::size_t pos,
                   CycScalar coeff, std::vector<int>& tuple, Fn&& sink) const {
        if (pos == args.size()) {
            sink(tuple, coeff);
            return;
        }
        for (const auto& [i, c] : args[pos]) {
            if (c.is_zero()) continue;
            tuple[pos] = i;
            rec_multi(args, pos + 1, coeff * c, tuple, sink);
        }
    }
};

}  // namespace kzb

#endif

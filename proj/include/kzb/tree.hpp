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
// Oriented planar rooted trees with every internal vertex of arity >= 2.
// Leaves are numbered 1..n left to right by the planar order. These index
// the summands of the transfer kernels p_n.
//
// Sign convention. The tree sum is evaluated in the shifted (bar) picture,
// where the operations and the homotopy carry odd degree and every sign is a
// Koszul sign; in that picture each tree enters the kernel with coefficient
// +1, so the per-tree parity theta(T) of the default convention is 0. The
// convention is not taken on faith: it is pinned by the transferred-structure
// and infinity-morphism checks (see checks.hpp and the transfer tests), and a
// flipped sign on any single tree makes those checks fail. theta_sign stays
// pluggable so the mutation tests can do exactly that.

#ifndef KZB_TREE_HPP
#define KZB_TREE_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kzb {

struct PlanarTree {
    std::vector<PlanarTree> children;  // empty = leaf

    bool is_leaf() const { return children.empty(); }
    int arity() const { return static_cast<int>(children.size()); }

    int leaf_count() const {
        if (is_leaf()) return 1;
        int n = 0;
        for (const auto& c : children) n += c.leaf_count();
        return n;
    }
    int internal_edges() const {
        if (is_leaf()) return 0;
        int e = 0;
        for (const auto& c : children) {
            if (!c.is_leaf()) e += 1 + c.internal_edges();
        }
        return e;
    }
    // nested-parenthesis serialization: leaf = ".", internal = (children...)
    std::string paren() const {
        if (is_leaf()) return ".";
        std::string s = "(";
        for (const auto& c : children) s += c.paren();
        return s + ")";
    }
    friend bool operator==(const PlanarTree& a, const PlanarTree& b) {
        return a.paren() == b.paren();
    }
};

// All trees with exactly n leaves, deterministic order (by root arity, then
// recursively). Counts are the little Schroeder numbers 1, 3, 11, 45, 197, ...
inline const std::vector<PlanarTree>& enumerate_trees(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_trees: need n >= 2");
    static std::vector<std::vector<PlanarTree>> cache;  // cache[n] incl. n=1 leaf
    if (cache.empty()) {
        cache.resize(2);
        cache[1].push_back(PlanarTree{});
    }
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        std::vector<PlanarTree> out;
        // root arity k >= 2, compositions m = n_1 + ... + n_k
        std::function<void(int, int, std::vector<PlanarTree>&)> rec =
            [&](int remaining, int slots_min, std::vector<PlanarTree>& acc) {
                if (remaining == 0) {
                    if (static_cast<int>(acc.size()) >= 2) out.push_back(PlanarTree{acc});
                    return;
                }
                (void)slots_min;
                for (int take = 1; take <= remaining; ++take) {
                    // skip the composition with a single part equal to m (would be arity 1)
                    if (acc.empty() && take == m) continue;
                    for (const auto& sub : cache[take]) {
                        acc.push_back(sub);
                        rec(remaining - take, slots_min, acc);
                        acc.pop_back();
                    }
                }
            };
        std::vector<PlanarTree> acc;
        rec(m, 2, acc);
        cache.push_back(std::move(out));
    }
    return cache[n];
}

// Pluggable per-tree parity. The validated default is identically zero (see
// the header comment); returns parity mod 2.
using SignConvention = std::function<int(const PlanarTree&)>;

inline SignConvention default_sign_convention() {
    return [](const PlanarTree&) { return 0; };
}

inline int theta_sign(const PlanarTree& t, const SignConvention& conv = default_sign_convention()) {
    return conv(t) & 1;
}

}  // namespace kzb

#endif

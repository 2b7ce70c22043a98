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
// A-infinity / C-infinity algebras presented as a finite graded basis with a
// sparse structure rule: m_k on a tuple of basis elements returns a linear
// combination, or "unspecified" (only the combinations the models state are
// installed; anything else is an error, never a silent zero). Evaluation is
// done in the shifted picture: b_k differs from m_k by the Koszul sign
// (-1)^{sum_i (k-i) (|x_i|-1)} on homogeneous inputs, which vanishes on the
// all-degree-one tuples the geometric models feed it.

#ifndef KZB_CALGEBRA_HPP
#define KZB_CALGEBRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kzb/cyc.hpp"

namespace kzb {

using Vec = std::map<int, CycScalar>;  // sparse element over basis ids

inline void vec_add(Vec& a, int id, const CycScalar& c) {
    if (c.is_zero()) return;
    auto it = a.find(id);
    if (it == a.end())
        a.emplace(id, c);
    else {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}
inline void vec_axpy(Vec& a, const Vec& b, const CycScalar& c) {
    for (const auto& [id, v] : b) vec_add(a, id, v * c);
}
inline Vec vec_scaled(const Vec& a, const CycScalar& c) {
    Vec r;
    for (const auto& [id, v] : a) vec_add(r, id, v * c);
    return r;
}
inline bool vec_is_zero(const Vec& a) { return a.empty(); }

struct MissingStructureConstant : std::runtime_error {
    explicit MissingStructureConstant(const std::string& what) : std::runtime_error(what) {}
};

class CAlgebra {
  public:
    // rule(tuple of basis ids) -> m_k value, or nullopt when the constant is
    // not part of the model's contract
    using Rule = std::function<std::optional<Vec>(const std::vector<int>&)>;

    CAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<int> degrees,
             Rule rule, int unit_id = -1)
        : name_(std::move(name)),
          names_(std::move(basis_names)),
          degrees_(std::move(degrees)),
          rule_(std::move(rule)),
          unit_(unit_id) {}

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(names_.size()); }
    int degree(int id) const { return degrees_.at(id); }
    const std::string& basis_name(int id) const { return names_.at(id); }
    int unit_id() const { return unit_; }

    int find_basis(const std::string& nm) const {
        for (int i = 0; i < dim(); ++i)
            if (names_[i] == nm) return i;
        throw std::invalid_argument(name_ + ": unknown basis element " + nm);
    }
    Vec e(const std::string& nm) const { return Vec{{find_basis(nm), CycScalar(1)}}; }

    // raw m_k on a basis tuple, with unitality handled centrally
    Vec m_basis(const std::vector<int>& ids) const {
        if (unit_ >= 0) {
            int k = static_cast<int>(ids.size());
            for (int pos = 0; pos < k; ++pos) {
                if (ids[pos] == unit_) {
                    if (k == 1) return {};  // m_1(1) = 0
                    if (k == 2) {
                        int other = ids[1 - pos];
                        return Vec{{other, CycScalar(1)}};
                    }
                    return {};  // unit annihilates m_k, k >= 3
                }
            }
        }
        auto v = rule_(ids);
        if (!v) {
            std::string t;
            for (int id : ids) t += (t.empty() ? "" : ", ") + names_.at(id);
            throw MissingStructureConstant(name_ + ": m_" + std::to_string(ids.size()) + "(" + t +
                                           ") is not specified by the model");
        }
        return *v;
    }

    // shifted operation b_k on sparse homogeneous-by-construction elements
    Vec b(const std::vector<Vec>& args) const {
        int k = static_cast<int>(args.size());
        Vec out;
        std::vector<int> tuple(k);
        std::function<void(int, CycScalar, int)> rec = [&](int pos, CycScalar coeff, int sign_exp) {
            if (pos == k) {
                Vec v = m_basis(tuple);
                if (sign_exp & 1) coeff = -coeff;
                vec_axpy(out, v, coeff);
                return;
            }
            for (const auto& [id, c] : args[pos])
                if (!c.is_zero()) {
                    tuple[pos] = id;
                    rec(pos + 1, coeff * c, sign_exp + (k - 1 - pos) * (degree(id) - 1));
                }
        };
        rec(0, CycScalar(1), 0);
        return out;
    }

    Vec d(const Vec& x) const { return b({x}); }  // b_1 = m_1

    std::string show(const Vec& v) const {
        if (v.empty()) return "0";
        std::string s;
        for (const auto& [id, c] : v) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")*" + names_.at(id);
        }
        return s;
    }

  private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    Rule rule_;
    int unit_;
};

}  // namespace kzb

#endif

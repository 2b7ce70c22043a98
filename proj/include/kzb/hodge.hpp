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
// Hodge type decomposition V = W + DM + M per degree, built from supplied
// W- and M-bases. The maps are the projection f onto the W-coordinates, the
// inclusion g, and the homotopy h sending D(m) back to m and killing W and M,
// so the side conditions fg = 1, fh = 0, hg = 0, hh = 0 hold by construction.
// A solve that does not land in the stored span reports the offending degree.

#ifndef KZB_HODGE_HPP
#define KZB_HODGE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kzb/calgebra.hpp"

namespace kzb {

struct HodgeError : std::runtime_error {
    explicit HodgeError(const std::string& what) : std::runtime_error(what) {}
};

class Hodge {
  public:
    struct DegreeData {
        std::vector<std::string> w_names;
        std::vector<Vec> w_basis;
        std::vector<Vec> m_basis;
    };

    Hodge(const CAlgebra* A, std::map<int, DegreeData> data) : A_(A), data_(std::move(data)) {
        for (auto& [deg, dd] : data_) build_degree(deg, dd);
    }

    const CAlgebra* algebra() const { return A_; }
    const std::map<int, DegreeData>& data() const { return data_; }

    int w_dim(int deg) const {
        auto it = data_.find(deg);
        return it == data_.end() ? 0 : static_cast<int>(it->second.w_basis.size());
    }
    const Vec& w_vector(int deg, int i) const { return data_.at(deg).w_basis[i]; }
    const std::string& w_name(int deg, int i) const { return data_.at(deg).w_names[i]; }
    const std::vector<Vec>& m_basis(int deg) const { return data_.at(deg).m_basis; }

    struct Coords {
        std::vector<CycScalar> w;        // coordinates over w_basis of the degree
        std::vector<CycScalar> dm;       // coordinates over D(m_basis of degree-1)
        std::vector<CycScalar> m;        // coordinates over m_basis of the degree
    };

    // split a homogeneous element of the given degree
    Coords split(const Vec& x, int deg) const {
        auto it = solvers_.find(deg);
        if (it == solvers_.end()) {
            if (vec_is_zero(x)) return Coords{};
            throw HodgeError("hodge: no decomposition stored in degree " + std::to_string(deg));
        }
        const Solver& s = it->second;
        Vec r = x;
        std::vector<CycScalar> combo(s.columns.size(), CycScalar(0));
        for (const auto& row : s.rows) {
            auto f = r.find(row.pivot);
            if (f == r.end()) continue;
            CycScalar c = f->second;
            vec_axpy(r, row.vec, -c);
            for (std::size_t j = 0; j < combo.size(); ++j)
                combo[j] += c * row.combo[j];
        }
        if (!vec_is_zero(r))
            throw HodgeError("hodge: element not in the stored span, degree " + std::to_string(deg) +
                             ": residue " + A_->show(r));
        Coords out;
        out.w.assign(s.n_w, CycScalar(0));
        out.dm.assign(s.n_dm, CycScalar(0));
        out.m.assign(s.n_m, CycScalar(0));
        for (std::size_t j = 0; j < combo.size(); ++j) {
            if (s.columns[j].type == ColType::W)
                out.w[s.columns[j].index] = combo[j];
            else if (s.columns[j].type == ColType::DM)
                out.dm[s.columns[j].index] = combo[j];
            else
                out.m[s.columns[j].index] = combo[j];
        }
        return out;
    }

    // h: kill W and M parts, invert D on the DM part
    Vec h(const Vec& x, int deg) const {
        if (vec_is_zero(x)) return {};
        Coords c = split(x, deg);
        Vec out;
        auto prev = data_.find(deg - 1);
        if (prev != data_.end())
            for (std::size_t j = 0; j < c.dm.size(); ++j)
                vec_axpy(out, prev->second.m_basis[j], c.dm[j]);
        return out;
    }

    // f: projection onto the W-coordinates of the degree
    std::vector<CycScalar> f(const Vec& x, int deg) const {
        if (vec_is_zero(x)) {
            return std::vector<CycScalar>(w_dim(deg), CycScalar(0));
        }
        return split(x, deg).w;
    }

    Vec g(int deg, int i) const { return data_.at(deg).w_basis[i]; }

  private:
    enum class ColType { W, DM, M };
    struct Column {
        ColType type;
        int index;
    };
    struct Row {
        int pivot;
        Vec vec;                        // reduced column, pivot coefficient 1
        std::vector<CycScalar> combo;   // expression over the original columns
    };
    struct Solver {
        std::vector<Column> columns;
        std::vector<Row> rows;
        int n_w = 0, n_dm = 0, n_m = 0;
    };

    const CAlgebra* A_;
    std::map<int, DegreeData> data_;
    std::map<int, Solver> solvers_;

    void build_degree(int deg, const DegreeData& dd) {
        Solver s;
        std::vector<Vec> cols;
        for (std::size_t i = 0; i < dd.w_basis.size(); ++i) {
            s.columns.push_back({ColType::W, static_cast<int>(i)});
            cols.push_back(dd.w_basis[i]);
        }
        s.n_w = static_cast<int>(dd.w_basis.size());
        auto prev = data_.find(deg - 1);
        if (prev != data_.end()) {
            for (std::size_t i = 0; i < prev->second.m_basis.size(); ++i) {
                s.columns.push_back({ColType::DM, static_cast<int>(i)});
                cols.push_back(A_->d(prev->second.m_basis[i]));
            }
            s.n_dm = static_cast<int>(prev->second.m_basis.size());
        }
        for (std::size_t i = 0; i < dd.m_basis.size(); ++i) {
            s.columns.push_back({ColType::M, static_cast<int>(i)});
            cols.push_back(dd.m_basis[i]);
        }
        s.n_m = static_cast<int>(dd.m_basis.size());

        for (std::size_t j = 0; j < cols.size(); ++j) {
            Vec v = cols[j];
            std::vector<CycScalar> combo(cols.size(), CycScalar(0));
            combo[j] = CycScalar(1);
            for (const auto& row : s.rows) {
                auto f = v.find(row.pivot);
                if (f == v.end()) continue;
                CycScalar c = f->second;
                vec_axpy(v, row.vec, -c);
                for (std::size_t t = 0; t < combo.size(); ++t) combo[t] -= c * row.combo[t];
            }
            if (vec_is_zero(v))
                throw HodgeError("hodge: dependent decomposition vectors in degree " +
                                 std::to_string(deg));
            int pivot = v.begin()->first;
            CycScalar inv = v.begin()->second.inverse();
            v = vec_scaled(v, inv);
            for (auto& t : combo) t = t * inv;
            // keep the echelon fully reduced so one pass solves
            for (auto& row : s.rows) {
                auto f = row.vec.find(pivot);
                if (f == row.vec.end()) continue;
                CycScalar c = f->second;
                vec_axpy(row.vec, v, -c);
                for (std::size_t t = 0; t < combo.size(); ++t) row.combo[t] -= c * combo[t];
            }
            s.rows.push_back({pivot, std::move(v), std::move(combo)});
        }
        solvers_.emplace(deg, std::move(s));
    }
};

}  // namespace kzb

#endif

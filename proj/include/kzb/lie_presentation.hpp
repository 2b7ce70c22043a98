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
// Finitely presented quotients of free Lie algebras, handled by degreewise
// linear algebra: the ideal component in each bracket degree is spanned by
// the homogeneous relation parts and by brackets of generators with the
// previous degree, and gets row-reduced against the Lyndon word order. A
// reduction to zero certifies ideal membership up to the degree bound.

#ifndef KZB_LIE_PRESENTATION_HPP
#define KZB_LIE_PRESENTATION_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "kzb/lie.hpp"

namespace kzb {

class LiePresentation {
  public:
    LiePresentation(const FreeLie* alg, std::vector<Lie<CycScalar>> relations, int maxdeg)
        : alg_(alg), relations_(std::move(relations)), maxdeg_(maxdeg) {
        build();
    }

    const FreeLie* algebra() const { return alg_; }
    int maxdeg() const { return maxdeg_; }
    const std::vector<Lie<CycScalar>>& relations() const { return relations_; }
    bool is_pivot(const Word& w) const { return rows_.count(w) != 0; }
    const Lie<CycScalar>& row(const Word& w) const { return rows_.at(w); }

    // quotient dimension in one bracket degree
    int quotient_dim(int deg) const {
        int total = static_cast<int>(alg_->lyndon().words(deg).size());
        int pivots = 0;
        for (const auto& [w, row] : rows_)
            if (static_cast<int>(w.size()) == deg) ++pivots;
        return total - pivots;
    }

    // canonical coset representative; works coefficientwise for ring-valued
    // coefficients since all pivots are 1
    template <class C>
    Lie<C> reduce(const Lie<C>& e) const {
        if (!e.algebra()) return e;
        if (alg_ != e.algebra())
            throw std::invalid_argument("LiePresentation: element from another algebra");
        Lie<C> r = e;
        while (true) {
            const Word* pivot = nullptr;
            for (const auto& [w, c] : r.terms()) {
                if (coeff_is_zero(c)) continue;
                if (rows_.count(w)) {
                    pivot = &w;
                    break;  // terms() is word-ordered; smallest pivot first
                }
            }
            if (!pivot) break;
            Word w = *pivot;
            C c = r.coeff(w);
            for (const auto& [u, k] : rows_.at(w).terms()) r.add_term(u, -cyc_scale(c, k));
        }
        return r;
    }

    template <class C>
    bool in_ideal(const Lie<C>& e) const {
        return reduce(e).is_zero();
    }

  private:
    const FreeLie* alg_;
    std::vector<Lie<CycScalar>> relations_;
    int maxdeg_;
    std::map<Word, Lie<CycScalar>> rows_;  // pivot word -> row with pivot coefficient 1

    void insert_row(Lie<CycScalar> v) {
        v = reduce(v);
        if (v.is_zero()) return;
        // pivot = smallest word
        Word w = v.terms().begin()->first;
        CycScalar inv = v.terms().begin()->second.inverse();
        v = v.cyc_scaled(inv);
        // back-substitute into existing rows so the echelon stays reduced
        for (auto& [pw, row] : rows_) {
            CycScalar c = row.coeff(w);
            if (!c.is_zero()) row = row - v.cyc_scaled(c);
        }
        rows_.emplace(std::move(w), std::move(v));
    }

    void build() {
        for (int d = 1; d <= maxdeg_; ++d) {
            for (const auto& r : relations_) insert_row(r.homogeneous_part(d));
            if (d >= 2) {
                std::vector<Lie<CycScalar>> prev;
                for (const auto& [w, row] : rows_)
                    if (static_cast<int>(w.size()) == d - 1) prev.push_back(row);
                for (int g = 0; g < alg_->ngen(); ++g) {
                    Lie<CycScalar> x = Lie<CycScalar>::generator(alg_, alg_->names()[g]);
                    for (const auto& row : prev) insert_row(bracket(x, row));
                }
            }
        }
    }
};

}  // namespace kzb

#endif

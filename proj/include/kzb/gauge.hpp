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
// Gauge action on connections whose coefficients are polynomials in the
// vertical coordinates r_i times one-form symbols. For g = exp(h),
//   C' = e^{ad_h} C + sum_{k>=0} ad_h^k (D h) / (k+1)!,
// the standard transport of d - C; degree-zero gauges are polynomial in r
// with values in the fiber, and D r_i = dr_i is an explicit symbol.

#ifndef KZB_GAUGE_HPP
#define KZB_GAUGE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kzb/lie_presentation.hpp"
#include "kzb/ratform.hpp"

namespace kzb {

// connection with coefficients (r-polynomial) x (one-form symbol), tensored
// against a Lie fiber; canonical storage keyed by (symbol, Lyndon word)
class GaugeConnection {
  public:
    GaugeConnection(const FreeLie* L, int nr) : L_(L), nr_(nr) {}

    const FreeLie* fiber() const { return L_; }
    int nr() const { return nr_; }

    void add(int sym, const MPoly& p, const Lie<CycScalar>& lie) {
        for (const auto& [w, c] : lie.terms()) {
            MPoly q = p.scaled(c);
            auto key = std::make_pair(sym, w);
            auto it = terms_.find(key);
            if (it == terms_.end())
                terms_[key] = q;
            else
                it->second = it->second + q;
        }
        prune();
    }
    const std::map<std::pair<int, Word>, MPoly>& terms() const { return terms_; }

    GaugeConnection reduced(const LiePresentation& P) const {
        GaugeConnection out(L_, nr_);
        for (const auto& [key, p] : terms_) {
            Lie<CycScalar> unit(L_);
            unit.add_term(key.second, CycScalar(1));
            Lie<CycScalar> red = P.reduce(unit);
            for (const auto& [w, c] : red.terms()) out.add(key.first, p.scaled(c), lie_word(w));
        }
        return out;
    }

    friend bool operator==(const GaugeConnection& a, const GaugeConnection& b) {
        std::set<std::pair<int, Word>> keys;
        for (const auto& [k, p] : a.terms_) keys.insert(k);
        for (const auto& [k, p] : b.terms_) keys.insert(k);
        for (const auto& k : keys) {
            MPoly pa = a.terms_.count(k) ? a.terms_.at(k) : MPoly();
            MPoly pb = b.terms_.count(k) ? b.terms_.at(k) : MPoly();
            if (!(pa == pb)) return false;
        }
        return true;
    }

  private:
    const FreeLie* L_;
    int nr_;
    std::map<std::pair<int, Word>, MPoly> terms_;

    Lie<CycScalar> lie_word(const Word& w) const {
        Lie<CycScalar> l(L_);
        l.add_term(w, CycScalar(1));
        return l;
    }
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
};

// degree-zero gauge: sum of (r-polynomial) x (Lie element)
struct GaugeElement {
    std::vector<std::pair<MPoly, Lie<CycScalar>>> parts;
};

// ad_h applied to a connection term by term, Lie parts reduced on the fly
inline GaugeConnection ad_gauge(const GaugeElement& h, const GaugeConnection& C,
                                const LiePresentation* pres) {
    GaugeConnection out(C.fiber(), C.nr());
    for (const auto& [key, p] : C.terms()) {
        Lie<CycScalar> lw(C.fiber());
        lw.add_term(key.second, CycScalar(1));
        for (const auto& [q, hl] : h.parts) {
            Lie<CycScalar> br = bracket(hl, lw);
            if (pres) br = pres->reduce(br);
            if (br.is_zero()) continue;
            out.add(key.first, p * q, br);
        }
    }
    return out;
}

// dr_i enters through a caller-chosen symbol id (dr_sym + i)
inline GaugeConnection gauge_transform(const GaugeConnection& C, const GaugeElement& h,
                                       int dr_sym, int maxdeg, const LiePresentation* pres) {
    GaugeConnection out = C;
    // e^{ad_h} C
    GaugeConnection cur = C;
    Rational fact(1);
    for (int k = 1; k <= maxdeg; ++k) {
        cur = ad_gauge(h, cur, pres);
        if (cur.terms().empty()) break;
        fact = fact * Rational(k);
        for (const auto& [key, p] : cur.terms()) {
            Lie<CycScalar> lw(C.fiber());
            lw.add_term(key.second, CycScalar(1));
            out.add(key.first, p.scaled(CycScalar(Rational(1) / fact)), lw);
        }
    }
    // + sum_k ad_h^k(D h)/(k+1)!
    GaugeConnection dh(C.fiber(), C.nr());
    for (const auto& [q, hl] : h.parts) {
        Lie<CycScalar> red = pres ? pres->reduce(hl) : hl;
        for (int i = 0; i < C.nr(); ++i) {
            MPoly dqi = q.ddx(i);
            if (!dqi.is_zero()) dh.add(dr_sym + i, dqi, red);
        }
    }
    GaugeConnection acc = dh;
    Rational prefac(1);
    for (int k = 0; k <= maxdeg; ++k) {
        prefac = Rational(1);
        for (int t = 2; t <= k + 1; ++t) prefac = prefac * Rational(t);
        for (const auto& [key, p] : acc.terms()) {
            Lie<CycScalar> lw(C.fiber());
            lw.add_term(key.second, CycScalar(1));
            out.add(key.first, p.scaled(CycScalar(Rational(1) / prefac)), lw);
        }
        acc = ad_gauge(h, acc, pres);
        if (acc.terms().empty()) break;
    }
    return out;
}

}  // namespace kzb

#endif

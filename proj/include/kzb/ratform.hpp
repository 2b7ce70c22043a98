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
// Rational functions on C^n with poles restricted to the fixed divisor
// {z_i = 0} u {z_i = 1} u {z_i = z_j}. Elements are sums of monomial terms
//   c * prod z_i^{a_i} * prod (z_i - 1)^{-b_i} * prod_{i<j} (z_i - z_j)^{-c_ij},
// a_i in Z, b_i, c_ij >= 0. Products merge exponent tables; the zero test
// clears denominators and compares numerator polynomials, so no multivariate
// gcd is ever needed.

#ifndef KZB_RATFORM_HPP
#define KZB_RATFORM_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kzb/cyc.hpp"

namespace kzb {

// Sparse multivariate polynomial over CycScalar, exponents >= 0.
class MPoly {
  public:
    using Key = std::vector<int>;

    MPoly() = default;

    void add(Key k, const CycScalar& c) {
        if (c.is_zero()) return;
        while (!k.empty() && k.back() == 0) k.pop_back();  // canonical key
        auto it = terms_.find(k);
        if (it == terms_.end())
            terms_.emplace(std::move(k), c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    bool is_zero() const { return terms_.empty(); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Key k(std::max(ka.size(), kb.size()), 0);
                for (std::size_t i = 0; i < ka.size(); ++i) k[i] += ka[i];
                for (std::size_t i = 0; i < kb.size(); ++i) k[i] += kb[i];
                r.add(k, ca * cb);
            }
        return r;
    }
    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, c);
        return r;
    }

    static MPoly constant(const CycScalar& c) {
        MPoly r;
        r.add(Key{}, c);
        return r;
    }
    static MPoly variable(int i, int nvars) {
        MPoly r;
        Key k(nvars, 0);
        k[i] = 1;
        r.add(k, CycScalar(1));
        return r;
    }

    const std::map<Key, CycScalar>& terms() const { return terms_; }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        MPoly d = a + b.scaled(CycScalar(-1));
        return d.is_zero();
    }
    MPoly scaled(const CycScalar& c) const {
        MPoly r;
        for (const auto& [k, v] : terms_) r.add(k, v * c);
        return r;
    }
    // partial derivative in variable i
    MPoly ddx(int i) const {
        MPoly r;
        for (const auto& [k, v] : terms_) {
            if (static_cast<int>(k.size()) <= i || k[i] == 0) continue;
            Key nk = k;
            nk[i] -= 1;
            r.add(nk, v * CycScalar(Rational(k[i])));
        }
        return r;
    }

  private:
    std::map<Key, CycScalar> terms_;
};

struct RatTerm {
    CycScalar coeff;
    std::vector<int> zpow;     // exponent of z_i, may be negative
    std::vector<int> zm1pow;   // exponent of (z_i - 1)^{-1}, >= 0
    std::vector<int> diffpow;  // exponent of (z_i - z_j)^{-1} for i<j, packed, >= 0
};

class RatFunc {
  public:
    RatFunc() : n_(0) {}
    explicit RatFunc(int nvars) : n_(nvars) {}

    int nvars() const { return n_; }
    bool has_terms() const { return !terms_.empty(); }
    const std::vector<RatTerm>& terms() const { return terms_; }

    static int pair_index(int i, int j, int n) {
        if (i > j) std::swap(i, j);
        // pairs (i,j), 0 <= i < j < n, row-major
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }
    static int npairs(int n) { return n * (n - 1) / 2; }

    static RatFunc constant(const CycScalar& c, int nvars) {
        RatFunc r(nvars);
        if (!c.is_zero())
            r.terms_.push_back({c, std::vector<int>(nvars, 0), std::vector<int>(nvars, 0),
                                std::vector<int>(npairs(nvars), 0)});
        return r;
    }
    // c * z_i^a
    static RatFunc zpow_term(const CycScalar& c, int i, int a, int nvars) {
        RatFunc r = constant(c, nvars);
        if (r.has_terms()) r.terms_[0].zpow[i] = a;
        return r;
    }
    // c / (z_i - 1)
    static RatFunc inv_zm1(const CycScalar& c, int i, int nvars) {
        RatFunc r = constant(c, nvars);
        if (r.has_terms()) r.terms_[0].zm1pow[i] = 1;
        return r;
    }
    // c / (z_i - z_j), i < j required
    static RatFunc inv_diff(const CycScalar& c, int i, int j, int nvars) {
        if (i >= j) throw std::invalid_argument("inv_diff: need i < j");
        RatFunc r = constant(c, nvars);
        if (r.has_terms()) r.terms_[0].diffpow[pair_index(i, j, nvars)] = 1;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        RatFunc r(std::max(a.n_, b.n_));
        for (auto t : a.terms_) {
            pad(t, r.n_);
            r.push_merged(t);
        }
        for (auto t : b.terms_) {
            pad(t, r.n_);
            r.push_merged(t);
        }
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        RatFunc r(std::max(a.n_, b.n_));
        for (const auto& ta0 : a.terms_)
            for (const auto& tb0 : b.terms_) {
                RatTerm t = ta0, tb = tb0;
                pad(t, r.n_);
                pad(tb, r.n_);
                t.coeff = t.coeff * tb.coeff;
                for (std::size_t i = 0; i < t.zpow.size(); ++i) {
                    t.zpow[i] += tb.zpow[i];
                    t.zm1pow[i] += tb.zm1pow[i];
                }
                for (std::size_t i = 0; i < t.diffpow.size(); ++i) t.diffpow[i] += tb.diffpow[i];
                r.push_merged(t);
            }
        return r;
    }
    RatFunc scaled(const CycScalar& c) const {
        if (c.is_zero()) return RatFunc(n_);
        RatFunc r = *this;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }

    // Exact zero test: multiply through by the least common denominator and
    // check that the numerator polynomial vanishes.
    bool is_zero() const {
        if (terms_.empty()) return true;
        std::vector<int> A(n_, 0), B(n_, 0), C(npairs(n_), 0);
        for (const auto& t : terms_) {
            for (int i = 0; i < n_; ++i) {
                A[i] = std::max(A[i], -t.zpow[i]);
                B[i] = std::max(B[i], t.zm1pow[i]);
            }
            for (int p = 0; p < npairs(n_); ++p) C[p] = std::max(C[p], t.diffpow[p]);
        }
        MPoly total;
        for (const auto& t : terms_) {
            MPoly m = MPoly::constant(t.coeff);
            for (int i = 0; i < n_; ++i) {
                int e = t.zpow[i] + A[i];
                for (int k = 0; k < e; ++k) m = m * MPoly::variable(i, n_);
                m = m * binom_pow(i, -1, B[i] - t.zm1pow[i]);
            }
            int p = 0;
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j, ++p) m = m * diff_pow(i, j, C[p] - t.diffpow[p]);
            total = total + m;
        }
        return total.is_zero();
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }

    // d/dz_i, term by term
    RatFunc ddz(int i) const {
        RatFunc r(n_);
        for (const auto& t : terms_) {
            if (t.zpow[i] != 0) {
                RatTerm u = t;
                u.coeff = t.coeff * CycScalar(Rational(t.zpow[i]));
                u.zpow[i] -= 1;
                r.push_merged(u);
            }
            if (t.zm1pow[i] != 0) {
                RatTerm u = t;
                u.coeff = t.coeff * CycScalar(Rational(-t.zm1pow[i]));
                u.zm1pow[i] += 1;
                r.push_merged(u);
            }
            for (int j = 0; j < n_; ++j) {
                if (j == i) continue;
                int p = pair_index(i, j, n_);
                if (t.diffpow[p] != 0) {
                    RatTerm u = t;
                    // d/dz_i (z_a - z_b)^{-c} with (a,b)=(min,max): sign depends on slot
                    int sgn = (i < j) ? -1 : 1;
                    u.coeff = t.coeff * CycScalar(Rational(sgn * t.diffpow[p]));
                    u.diffpow[p] += 1;
                    r.push_merged(u);
                }
            }
        }
        return r;
    }

    std::complex<double> eval(const std::vector<std::complex<double>>& z) const {
        std::complex<double> total = 0;
        for (const auto& t : terms_) {
            std::complex<double> v = t.coeff.eval_numeric();
            for (int i = 0; i < n_; ++i) {
                v *= std::pow(z[i], t.zpow[i]);
                for (int k = 0; k < t.zm1pow[i]; ++k) v /= (z[i] - 1.0);
            }
            int p = 0;
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j, ++p)
                    for (int k = 0; k < t.diffpow[p]; ++k) v /= (z[i] - z[j]);
            total += v;
        }
        return total;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + t.coeff.to_string() + ")";
            for (int i = 0; i < n_; ++i) {
                if (t.zpow[i]) s += "*z" + std::to_string(i + 1) + "^" + std::to_string(t.zpow[i]);
                if (t.zm1pow[i])
                    s += "*(z" + std::to_string(i + 1) + "-1)^-" + std::to_string(t.zm1pow[i]);
            }
            int p = 0;
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j, ++p)
                    if (t.diffpow[p])
                        s += "*(z" + std::to_string(i + 1) + "-z" + std::to_string(j + 1) + ")^-" +
                             std::to_string(t.diffpow[p]);
        }
        return s;
    }

  private:
    int n_;
    std::vector<RatTerm> terms_;

    // extend a term to a larger variable count; pair exponents are re-indexed
    static void pad(RatTerm& t, int n) {
        int old = static_cast<int>(t.zpow.size());
        if (old == n) return;
        if (old > n) throw std::logic_error("RatFunc: cannot shrink term");
        std::vector<int> dp(npairs(n), 0);
        int p = 0;
        for (int i = 0; i < old; ++i)
            for (int j = i + 1; j < old; ++j, ++p) dp[pair_index(i, j, n)] = t.diffpow[p];
        t.zpow.resize(n, 0);
        t.zm1pow.resize(n, 0);
        t.diffpow = std::move(dp);
    }

    void push_merged(const RatTerm& t) {
        if (t.coeff.is_zero()) return;
        for (auto& u : terms_) {
            if (u.zpow == t.zpow && u.zm1pow == t.zm1pow && u.diffpow == t.diffpow) {
                u.coeff += t.coeff;
                if (u.coeff.is_zero()) {
                    u = terms_.back();
                    terms_.pop_back();
                }
                return;
            }
        }
        terms_.push_back(t);
    }

    // (z_i + shift)^e as a polynomial, e >= 0
    MPoly binom_pow(int i, int shift, int e) const {
        MPoly r = MPoly::constant(CycScalar(1));
        MPoly base = MPoly::variable(i, n_) + MPoly::constant(CycScalar(shift));
        for (int k = 0; k < e; ++k) r = r * base;
        return r;
    }
    MPoly diff_pow(int i, int j, int e) const {
        MPoly r = MPoly::constant(CycScalar(1));
        MPoly base = MPoly::variable(i, n_) + MPoly::constant(CycScalar(-1)) * MPoly::variable(j, n_);
        for (int k = 0; k < e; ++k) r = r * base;
        return r;
    }
};

// A 1-form sum f_i dz_i and a 2-form sum f_{ij} dz_i ^ dz_j (i<j) with
// RatFunc coefficients; just enough exterior calculus for the flatness and
// comparison checks.
class RatForm1 {
  public:
    RatForm1() : n_(0) {}
    explicit RatForm1(int nvars) : n_(nvars), comps_(nvars, RatFunc(nvars)) {}

    int nvars() const { return n_; }
    const RatFunc& comp(int i) const { return comps_[i]; }
    void add_comp(int i, const RatFunc& f) { comps_[i] = comps_[i] + f; }

    friend RatForm1 operator+(const RatForm1& a, const RatForm1& b) {
        RatForm1 r(std::max(a.n_, b.n_));
        for (int i = 0; i < r.n_; ++i) {
            if (i < a.n_) r.comps_[i] = r.comps_[i] + a.comps_[i];
            if (i < b.n_) r.comps_[i] = r.comps_[i] + b.comps_[i];
        }
        return r;
    }
    friend RatForm1 operator-(const RatForm1& a, const RatForm1& b) { return a + b.scaled(CycScalar(-1)); }
    RatForm1 scaled(const CycScalar& c) const {
        RatForm1 r = *this;
        for (auto& f : r.comps_) f = f.scaled(c);
        return r;
    }
    RatForm1 times(const RatFunc& f) const {
        RatForm1 r(n_);
        for (int i = 0; i < n_; ++i) r.comps_[i] = comps_[i] * f;
        return r;
    }
    bool is_zero() const {
        for (const auto& f : comps_)
            if (!f.is_zero()) return false;
        return true;
    }
    friend bool operator==(const RatForm1& a, const RatForm1& b) { return (a - b).is_zero(); }

  private:
    int n_;
    std::vector<RatFunc> comps_;
};

class RatForm2 {
  public:
    RatForm2() : n_(0) {}
    explicit RatForm2(int nvars) : n_(nvars), comps_(RatFunc::npairs(nvars), RatFunc(nvars)) {}

    const RatFunc& comp(int i, int j) const { return comps_[RatFunc::pair_index(i, j, n_)]; }

    friend RatForm2 operator+(const RatForm2& a, const RatForm2& b) {
        RatForm2 r(std::max(a.n_, b.n_));
        for (std::size_t p = 0; p < r.comps_.size(); ++p) {
            if (p < a.comps_.size()) r.comps_[p] = r.comps_[p] + a.comps_[p];
            if (p < b.comps_.size()) r.comps_[p] = r.comps_[p] + b.comps_[p];
        }
        return r;
    }
    RatForm2 scaled(const CycScalar& c) const {
        RatForm2 r = *this;
        for (auto& f : r.comps_) f = f.scaled(c);
        return r;
    }
    bool is_zero() const {
        for (const auto& f : comps_)
            if (!f.is_zero()) return false;
        return true;
    }

    static RatForm2 wedge(const RatForm1& a, const RatForm1& b) {
        int n = std::max(a.nvars(), b.nvars());
        RatForm2 r(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int p = RatFunc::pair_index(i, j, n);
                r.comps_[p] = r.comps_[p] + a.comp(i) * b.comp(j) - a.comp(j) * b.comp(i);
            }
        return r;
    }
    static RatForm2 d(const RatForm1& a) {
        int n = a.nvars();
        RatForm2 r(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int p = RatFunc::pair_index(i, j, n);
                // d(f dz_j) contributes (df/dz_i) dz_i ^ dz_j
                r.comps_[p] = r.comps_[p] + a.comp(j).ddz(i) - a.comp(i).ddz(j);
            }
        return r;
    }

  private:
    int n_;
    std::vector<RatFunc> comps_;
};

}  // namespace kzb

#endif

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
// Free Lie algebras on named degree-zero generators, values in Lyndon
// coordinates, with brackets computed through cached tensor-algebra
// commutators, truncated at a bracket-degree bound. Coefficients are a
// template parameter; the completed algebras of the models use the exact
// field Q(2*pi*i), the numeric layer uses complex<double>, and the q-model
// flatness checks use series/form-valued coefficients.

#ifndef KZB_LIE_HPP
#define KZB_LIE_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kzb/coeff_traits.hpp"
#include "kzb/cyc.hpp"
#include "kzb/lyndon.hpp"

namespace kzb {

// Context shared by all elements of one free Lie algebra.
class FreeLie {
  public:
    FreeLie(std::vector<std::string> generator_names, int maxdeg)
        : names_(std::move(generator_names)),
          maxdeg_(maxdeg),
          basis_(static_cast<int>(names_.size()), maxdeg) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j]) throw std::invalid_argument("FreeLie: duplicate name");
    }

    int ngen() const { return static_cast<int>(names_.size()); }
    int maxdeg() const { return maxdeg_; }
    const std::vector<std::string>& names() const { return names_; }
    const LyndonBasis& lyndon() const { return basis_; }

    int generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("FreeLie: unknown generator " + name);
    }

    // [b(u), b(v)] in Lyndon coordinates, integer coefficients; cached
    const std::vector<std::pair<Word, long long>>& bracket_basis(const Word& u,
                                                                 const Word& v) const {
        auto key = std::make_pair(u, v);
        auto it = bracket_cache_.find(key);
        if (it != bracket_cache_.end()) return it->second;
        std::map<Word, long long> tensor;
        const auto& eu = basis_.expansion(u);
        const auto& ev = basis_.expansion(v);
        for (const auto& [wu, cu] : eu)
            for (const auto& [wv, cv] : ev) {
                tensor[wu + wv] += cu * cv;
                tensor[wv + wu] -= cu * cv;
            }
        std::vector<std::pair<Word, long long>> coords = to_lyndon_int(tensor);
        return bracket_cache_.emplace(key, std::move(coords)).first->second;
    }

    // triangular extraction of Lyndon coordinates from an integer tensor polynomial
    std::vector<std::pair<Word, long long>> to_lyndon_int(std::map<Word, long long> tensor) const {
        std::vector<std::pair<Word, long long>> coords;
        while (true) {
            while (!tensor.empty() && tensor.begin()->second == 0) tensor.erase(tensor.begin());
            if (tensor.empty()) break;
            const Word w = tensor.begin()->first;
            long long c = tensor.begin()->second;
            if (!is_lyndon(w))
                throw std::logic_error("to_lyndon_int: leading word not Lyndon (not a Lie element)");
            coords.emplace_back(w, c);
            for (const auto& [ww, cc] : basis_.expansion(w)) {
                auto it = tensor.find(ww);
                long long nv = (it == tensor.end() ? 0 : it->second) - c * cc;
                if (nv == 0) {
                    if (it != tensor.end()) tensor.erase(it);
                } else {
                    tensor[ww] = nv;
                }
            }
        }
        return coords;
    }

  private:
    std::vector<std::string> names_;
    int maxdeg_;
    LyndonBasis basis_;
    mutable std::map<std::pair<Word, Word>, std::vector<std::pair<Word, long long>>> bracket_cache_;
};

template <class C>
class Lie {
  public:
    Lie() : alg_(nullptr) {}
    explicit Lie(const FreeLie* alg) : alg_(alg) {}

    static Lie generator(const FreeLie* alg, const std::string& name, C unit = C(1)) {
        Lie e(alg);
        Word w(1, static_cast<char>(alg->generator_index(name)));
        e.terms_[w] = std::move(unit);
        return e;
    }
    static Lie zero(const FreeLie* alg) { return Lie(alg); }

    const FreeLie* algebra() const { return alg_; }
    bool is_zero() const {
        for (const auto& [w, c] : terms_)
            if (!coeff_is_zero(c)) return false;
        return true;
    }
    const std::map<Word, C>& terms() const { return terms_; }

    C coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C() : it->second;
    }
    void add_term(const Word& w, const C& c) {
        if (static_cast<int>(w.size()) > alg_->maxdeg()) return;  // silent truncation
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Lie operator+(const Lie& a, const Lie& b) {
        if (!a.alg_) return b;
        if (!b.alg_) return a;
        if (a.alg_ != b.alg_) throw std::invalid_argument("Lie: mismatched algebras");
        Lie r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend Lie operator-(const Lie& a, const Lie& b) { return a + (-b); }
    friend Lie operator-(const Lie& a) {
        Lie r = a;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    template <class S>
    Lie scaled(const S& s) const {
        Lie r(alg_);
        for (const auto& [w, c] : terms_) {
            C v = c * s;
            if (!coeff_is_zero(v)) r.terms_[w] = v;
        }
        return r;
    }
    Lie cyc_scaled(const CycScalar& s) const {
        Lie r(alg_);
        for (const auto& [w, c] : terms_) {
            C v = cyc_scale(c, s);
            if (!coeff_is_zero(v)) r.terms_[w] = v;
        }
        return r;
    }

    friend bool operator==(const Lie& a, const Lie& b) { return (a - b).is_zero(); }

    friend Lie bracket(const Lie& a, const Lie& b) {
        if (a.alg_ != b.alg_ || !a.alg_) throw std::invalid_argument("bracket: mismatched algebras");
        Lie r(a.alg_);
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) {
                if (static_cast<int>(u.size() + v.size()) > a.alg_->maxdeg()) continue;
                C cc = cu * cv;
                if (coeff_is_zero(cc)) continue;
                for (const auto& [w, k] : a.alg_->bracket_basis(u, v))
                    r.add_term(w, int_scale(cc, k));
            }
        return r;
    }

    // Ad^p_X(Y): Ad^0 = Y, Ad^p = [X, Ad^{p-1}]
    friend Lie ad_pow(const Lie& x, const Lie& y, int p) {
        if (p < 0) throw std::invalid_argument("ad_pow: negative power");
        Lie r = y;
        for (int i = 0; i < p; ++i) r = bracket(x, r);
        return r;
    }

    // expansion into the tensor algebra (word -> coefficient)
    std::map<Word, C> expand_tensor() const {
        std::map<Word, C> out;
        for (const auto& [w, c] : terms_)
            for (const auto& [ww, k] : alg_->lyndon().expansion(w)) {
                auto it = out.find(ww);
                C v = (it == out.end() ? C() : it->second) + int_scale(c, k);
                if (coeff_is_zero(v))
                    out.erase(ww);
                else
                    out[ww] = v;
            }
        return out;
    }

    int min_degree() const {
        int d = alg_->maxdeg() + 1;
        for (const auto& [w, c] : terms_) d = std::min<int>(d, static_cast<int>(w.size()));
        return d;
    }

    Lie homogeneous_part(int deg) const {
        Lie r(alg_);
        for (const auto& [w, c] : terms_)
            if (static_cast<int>(w.size()) == deg) r.terms_[w] = c;
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (coeff_is_zero(c)) continue;
            if (!s.empty()) s += " + ";
            s += "(" + display(c) + ")*[" + word_to_string(w, alg_->names()) + "]";
        }
        return s;
    }

  private:
    const FreeLie* alg_;
    std::map<Word, C> terms_;

    static std::string display(const CycScalar& c) { return c.to_string(); }
    static std::string display(const Rational& c) { return c.to_string(); }
    static std::string display(const std::complex<double>& c) {
        return std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") + std::to_string(c.imag()) + "i";
    }
    template <class X>
    static std::string display(const X&) {
        return "#";
    }
};

// A Lie algebra morphism determined by generator images, extended through the
// standard bracketing of Lyndon words; the target may be a different algebra.
template <class C>
class LieHom {
  public:
    LieHom(const FreeLie* src, const FreeLie* dst) : src_(src), dst_(dst) {}

    const FreeLie* source() const { return src_; }
    const FreeLie* target() const { return dst_; }

    void set_image(const std::string& gen, Lie<C> img) {
        images_[src_->generator_index(gen)] = std::move(img);
    }
    const Lie<C>& image(const std::string& gen) const {
        auto it = images_.find(src_->generator_index(gen));
        if (it == images_.end()) throw std::invalid_argument("LieHom: missing image " + gen);
        return it->second;
    }

    Lie<C> apply(const Lie<C>& e, int maxdeg) const {
        Lie<C> r(dst_);
        for (const auto& [w, c] : e.terms()) {
            Lie<C> bw = image_of_word(w);
            for (const auto& [u, cu] : bw.terms())
                if (static_cast<int>(u.size()) <= maxdeg) r.add_term(u, cu * c);
        }
        return r;
    }

  private:
    const FreeLie* src_;
    const FreeLie* dst_;
    std::map<int, Lie<C>> images_;
    mutable std::map<Word, Lie<C>> cache_;

    const Lie<C>& image_of_word(const Word& w) const {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        Lie<C> img(dst_);
        if (w.size() == 1) {
            auto gi = images_.find(static_cast<int>(static_cast<unsigned char>(w[0])));
            if (gi == images_.end())
                throw std::invalid_argument("LieHom: missing image for generator " +
                                            src_->names()[static_cast<unsigned char>(w[0])]);
            img = gi->second;
        } else {
            auto [u, v] = LyndonBasis::standard_factorization(w);
            img = bracket(image_of_word(u), image_of_word(v));
        }
        return cache_.emplace(w, std::move(img)).first->second;
    }
};

}  // namespace kzb

#endif

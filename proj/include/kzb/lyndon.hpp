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
// Lyndon words over a small ordered alphabet, their standard factorization
// and bracketing, and cached expansions of the bracketings into the tensor
// algebra. The expansion of the bracketing of a Lyndon word w has w as its
// lexicographically smallest word, with coefficient 1; that triangularity is
// what converts tensor-algebra elements back to Lyndon coordinates.

#ifndef KZB_LYNDON_HPP
#define KZB_LYNDON_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kzb {

using Word = std::basic_string<char>;  // letters 0,1,2,... as raw chars

// Duval's algorithm: all Lyndon words over alphabet {0..a-1} of length exactly n,
// in lexicographic order.
inline std::vector<Word> lyndon_words(int alphabet, int n) {
    if (alphabet < 1 || n < 1) throw std::invalid_argument("lyndon_words: bad arguments");
    std::vector<Word> out;
    Word w(1, static_cast<char>(0));
    while (true) {
        if (static_cast<int>(w.size()) == n) out.push_back(w);
        // extend periodically to length n, then increment
        std::string t = w;
        while (static_cast<int>(t.size()) < n) t += t[t.size() % w.size()];
        // find next
        while (!t.empty() && t.back() == static_cast<char>(alphabet - 1)) t.pop_back();
        if (t.empty()) break;
        ++t.back();
        w = t;
    }
    return out;
}

inline bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word rot = w.substr(i) + w.substr(0, i);
        if (!(w < rot)) return false;
    }
    return true;
}

// Shared, cached combinatorial data for one alphabet size and degree bound.
class LyndonBasis {
  public:
    LyndonBasis(int alphabet, int maxdeg) : alphabet_(alphabet), maxdeg_(maxdeg) {
        words_by_deg_.resize(maxdeg + 1);
        for (int d = 1; d <= maxdeg; ++d) words_by_deg_[d] = lyndon_words(alphabet, d);
    }

    int alphabet() const { return alphabet_; }
    int maxdeg() const { return maxdeg_; }
    const std::vector<Word>& words(int deg) const { return words_by_deg_[deg]; }

    // standard factorization w = u v: v is the longest proper Lyndon suffix
    static std::pair<Word, Word> standard_factorization(const Word& w) {
        if (w.size() < 2) throw std::invalid_argument("standard_factorization: need length >= 2");
        for (std::size_t i = 1; i < w.size(); ++i) {
            Word v = w.substr(i);
            if (is_lyndon(v)) return {w.substr(0, i), v};
        }
        throw std::logic_error("standard_factorization: not a Lyndon word");
    }

    // expansion of the right-normed standard bracketing of Lyndon word w in
    // the tensor algebra; integer coefficients
    const std::map<Word, long long>& expansion(const Word& w) const {
        auto it = expansion_cache_.find(w);
        if (it != expansion_cache_.end()) return it->second;
        std::map<Word, long long> e;
        if (w.size() == 1) {
            e[w] = 1;
        } else {
            auto [u, v] = standard_factorization(w);
            const auto& eu = expansion(u);
            const auto& ev = expansion(v);
            for (const auto& [wu, cu] : eu)
                for (const auto& [wv, cv] : ev) {
                    e[wu + wv] += cu * cv;
                    e[wv + wu] -= cu * cv;
                }
            for (auto it2 = e.begin(); it2 != e.end();)
                it2 = it2->second == 0 ? e.erase(it2) : std::next(it2);
        }
        return expansion_cache_.emplace(w, std::move(e)).first->second;
    }

  private:
    int alphabet_;
    int maxdeg_;
    std::vector<std::vector<Word>> words_by_deg_;
    mutable std::map<Word, std::map<Word, long long>> expansion_cache_;
};

inline std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    std::string s;
    for (char c : w) {
        if (!s.empty()) s += ".";
        s += names[static_cast<unsigned char>(c)];
    }
    return s;
}

}  // namespace kzb

#endif

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
// Small customization points so the Lie/series containers work over the
// exact field, complex doubles, rational forms and series thereof.

#ifndef KZB_COEFF_TRAITS_HPP
#define KZB_COEFF_TRAITS_HPP

#include <complex>

#include "kzb/cyc.hpp"
#include "kzb/ratform.hpp"

namespace kzb {

inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const CycScalar& c) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0); }
inline bool coeff_is_zero(const RatFunc& c) { return !c.has_terms(); }
template <class C>
bool coeff_is_zero(const C& c) {
    return c.is_zero();
}

inline Rational int_scale(const Rational& c, long long k) { return c * Rational(k); }
inline CycScalar int_scale(const CycScalar& c, long long k) { return c * CycScalar(k); }
inline std::complex<double> int_scale(const std::complex<double>& c, long long k) {
    return c * static_cast<double>(k);
}
inline RatFunc int_scale(const RatFunc& c, long long k) { return c.scaled(CycScalar(k)); }
template <class C>
C int_scale(const C& c, long long k) {
    return c.mapped([&](const auto& x) { return int_scale(x, k); });
}

// multiplication by an exact scalar from Q(2*pi*i)
inline CycScalar cyc_scale(const CycScalar& c, const CycScalar& s) { return c * s; }
inline std::complex<double> cyc_scale(const std::complex<double>& c, const CycScalar& s) {
    return c * s.eval_numeric();
}
inline RatFunc cyc_scale(const RatFunc& c, const CycScalar& s) { return c.scaled(s); }
template <class C>
C cyc_scale(const C& c, const CycScalar& s) {
    return c.mapped([&](const auto& x) { return cyc_scale(x, s); });
}

}  // namespace kzb

#endif

/*
   Copyright 2026 The rzcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <vector>

#include "rzcert/certificate.hpp"
#include "rzcert/unipoly.hpp"

namespace rz {

/// Polynomial bases with exact, invertible conversions: standard powers
/// x^i, falling factorials (x)_i = x(x-1)...(x-i+1), and binomials
/// binom(x, i).
enum class BasisKind { standard_power, falling_factorial, binomial_choose };

/// Coefficients of p in the requested basis. Falling-factorial
/// coefficients come from repeated synthetic division by (x - j); binomial
/// coefficients from forward differences at 0, 1, 2, ...
std::vector<BigRational> to_basis(const UniPoly& p, BasisKind kind);
UniPoly from_basis(const std::vector<BigRational>& coeffs, BasisKind kind);

/// The invertible operator sending (x)_i to x^i, extended linearly.
UniPoly t_transform(const UniPoly& p);
UniPoly t_inverse(const UniPoly& f);

/// The invertible operator sending binom(x, i) to x^i, extended linearly.
UniPoly e_transform(const UniPoly& p);
UniPoly e_inverse(const UniPoly& f);

/// Exact identity T((x - xi) p) = (x - xi) T(p) + x T(p)'.
Certificate verify_t_identity(const UniPoly& p, const BigRational& xi);

/// Exact identity E((x - alpha) p) = (x - alpha) E(p) + x(x+1) E(p)'.
Certificate verify_e_identity(const UniPoly& p, const BigRational& alpha);

/// With f = T(p) in RZ(-inf, 0] and m the multiplicity of 0 in f, checks:
/// (a) F := T((x - xi) p) has only real zeros; (b) F in RZ(-inf, 0] iff
/// xi <= m; (c) the multiplicity of 0 in F is m when xi != m and at least
/// m + 1 when xi = m. Also re-verifies the instance through the general
/// F = u f + v f' checker and asserts agreement. Throws NotApplicable when
/// f is zero or not in RZ(-inf, 0].
Certificate check_t_prop(const UniPoly& p, const BigRational& xi);

/// With f = E(p) in RZ[-1, 0] and alpha in [-1, 0], checks that
/// F := E((x - alpha) p) stays in RZ[-1, 0], that f separates F, that
/// simple zeros stay simple, and the multiplicities of 0 and -1 in F
/// (unchanged except in the boundary cases m0 = alpha = 0 and
/// m1 = 0, alpha = -1, where they grow by one). Cross-checked against the
/// (ax+b) f + x(x+1) f' corollary checker. Throws NotApplicable when the
/// preconditions fail.
Certificate check_e_prop(const UniPoly& p, const BigRational& alpha);

}  // namespace rz

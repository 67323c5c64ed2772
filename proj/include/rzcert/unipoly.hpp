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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rzcert/rational.hpp"

namespace rz {

/// Dense univariate polynomial over BigRational. coeffs()[i] is the
/// coefficient of x^i; trailing zeros are trimmed so the zero polynomial
/// is the empty sequence and degree() is disengaged for it. Values are
/// immutable after construction and all operations are pure.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(const BigRational& constant);

    static UniPoly from_coeffs(std::vector<BigRational> coeffs);
    static UniPoly monomial(const BigRational& c, int k);
    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(BigRational(1)); }
    static UniPoly x() { return monomial(BigRational(1), 1); }
    /// x - r
    static UniPoly linear_root(const BigRational& r);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree; disengaged for the zero polynomial (conventionally minus
    /// infinity, never encoded as an integer).
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    BigRational coeff(int i) const;
    /// Leading coefficient; requires a nonzero polynomial.
    const BigRational& leading() const;
    /// Nonzero with a strictly positive leading coefficient.
    bool is_standard() const { return !is_zero() && leading().sign() > 0; }

    UniPoly derivative() const;
    /// Horner evaluation.
    BigRational operator()(const BigRational& x0) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const BigRational& c);
    friend UniPoly operator*(const BigRational& c, const UniPoly& a) { return a * c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly pow(int e) const;

    /// Canonical text form: comma-separated "num/den" in ascending degree
    /// order; the zero polynomial is the empty string.
    std::string canonical_str() const;
    static UniPoly parse(std::string_view text);
    /// Human-readable form, e.g. "2*x + 12*x^2 + 10*x^3".
    std::string pretty() const;

  private:
    std::vector<BigRational> coeffs_;
    void trim();
};

/// Quotient and remainder with deg r < deg d. Requires d nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d);

/// Exact quotient p / d; throws NotDivisible if the remainder is nonzero.
UniPoly divide_exact(const UniPoly& p, const UniPoly& d);

/// Monic greatest common divisor over Q. Requires not both arguments zero.
/// Remainder sequences are content-stripped to integer primitive form to
/// bound coefficient growth.
UniPoly gcd(const UniPoly& p, const UniPoly& r);

/// Yun decomposition p = c * prod p_i^{m_i} with each p_i monic, squarefree
/// and pairwise coprime; returned as (p_i, m_i) in increasing multiplicity.
/// The content c is the leading coefficient of p. Requires p nonzero.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Largest k with (x - r)^k dividing p exactly. Requires p nonzero.
int multiplicity_at(const UniPoly& p, const BigRational& r);

/// (1+x)^n * p(x/(1+x)), expanded exactly. Requires deg p <= n (throws
/// DegreeTooHigh otherwise) and n >= 0.
UniPoly binomial_substitute(const UniPoly& p, int n);

/// p scaled to leading coefficient 1. Requires p nonzero.
UniPoly monic(const UniPoly& p);

/// p scaled by the positive rational that makes all coefficients integers
/// with gcd 1; the sign pattern (and in particular sign at every point)
/// is preserved. primitive_part(0) = 0.
UniPoly primitive_part(const UniPoly& p);

/// Exact deflation p / (x - r); requires p(r) == 0.
UniPoly deflate(const UniPoly& p, const BigRational& r);

}  // namespace rz

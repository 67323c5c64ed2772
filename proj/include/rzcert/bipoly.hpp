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
#include <vector>

#include "rzcert/unipoly.hpp"

namespace rz {

/// Polynomial in x whose coefficients are UniPoly values in a second
/// variable q. Dense in both variables; trailing zero x-coefficients are
/// trimmed. Specializing q commutes with all arithmetic.
class BiPoly {
  public:
    BiPoly() = default;

    static BiPoly from_coeffs(std::vector<UniPoly> coeffs);
    /// Constant in x (a pure polynomial in q).
    static BiPoly q_constant(UniPoly q_poly);
    /// Lift a polynomial in x to a BiPoly with q-free coefficients.
    static BiPoly from_x_poly(const UniPoly& p);
    static BiPoly zero() { return BiPoly(); }
    static BiPoly one() { return q_constant(UniPoly::one()); }

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> x_degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const std::vector<UniPoly>& coeffs() const { return coeffs_; }
    UniPoly coeff(int i) const;

    /// Substitute q = q0 exactly.
    UniPoly specialize(const BigRational& q0) const;
    /// d/dx with q untouched.
    BiPoly derivative_x() const;
    /// Multiply every coefficient by a polynomial in q.
    BiPoly scale_q(const UniPoly& q_poly) const;

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Canonical form: one UniPoly canonical string per x-degree.
    std::vector<std::string> canonical_strings() const;
    std::string pretty() const;

  private:
    std::vector<UniPoly> coeffs_;
    void trim();
};

}  // namespace rz

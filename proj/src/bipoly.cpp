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

#include "rzcert/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rz {

void BiPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly BiPoly::from_coeffs(std::vector<UniPoly> coeffs) {
    BiPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

BiPoly BiPoly::q_constant(UniPoly q_poly) {
    BiPoly p;
    if (!q_poly.is_zero()) p.coeffs_.push_back(std::move(q_poly));
    return p;
}

BiPoly BiPoly::from_x_poly(const UniPoly& p) {
    std::vector<UniPoly> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(UniPoly(v));
    return from_coeffs(std::move(c));
}

UniPoly BiPoly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return UniPoly();
    return coeffs_[static_cast<size_t>(i)];
}

UniPoly BiPoly::specialize(const BigRational& q0) const {
    std::vector<BigRational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i](q0);
    return UniPoly::from_coeffs(std::move(c));
}

BiPoly BiPoly::derivative_x() const {
    if (coeffs_.size() <= 1) return BiPoly();
    std::vector<UniPoly> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
    }
    return from_coeffs(std::move(d));
}

BiPoly BiPoly::scale_q(const UniPoly& q_poly) const {
    std::vector<UniPoly> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * q_poly;
    return from_coeffs(std::move(c));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<UniPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = c[i] + a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return BiPoly::from_coeffs(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    std::vector<UniPoly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = c[i] + a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] - b.coeffs_[i];
    return BiPoly::from_coeffs(std::move(c));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::vector<UniPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return BiPoly::from_coeffs(std::move(c));
}

std::vector<std::string> BiPoly::canonical_strings() const {
    std::vector<std::string> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].canonical_str();
    return out;
}

std::string BiPoly::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i].pretty() << ")";
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
    }
    return os.str();
}

}  // namespace rz

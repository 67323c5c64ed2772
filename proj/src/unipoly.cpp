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

#include "rzcert/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rzcert/errors.hpp"

namespace rz {

UniPoly::UniPoly(const BigRational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

UniPoly UniPoly::from_coeffs(std::vector<BigRational> coeffs) {
    UniPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

UniPoly UniPoly::monomial(const BigRational& c, int k) {
    if (k < 0) throw std::invalid_argument("UniPoly::monomial: negative exponent");
    UniPoly p;
    if (!c.is_zero()) {
        p.coeffs_.assign(static_cast<size_t>(k) + 1, BigRational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

UniPoly UniPoly::linear_root(const BigRational& r) {
    return from_coeffs({-r, BigRational(1)});
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational UniPoly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return BigRational(0);
    return coeffs_[static_cast<size_t>(i)];
}

const BigRational& UniPoly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("UniPoly::leading: zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        d[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
    }
    return from_coeffs(std::move(d));
}

BigRational UniPoly::operator()(const BigRational& x0) const {
    BigRational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x0 + coeffs_[i];
    }
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly operator*(const UniPoly& a, const BigRational& c) {
    if (c.is_zero()) return UniPoly();
    UniPoly r = a;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
    UniPoly acc = one();
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string UniPoly::canonical_str() const {
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].str();
    }
    return out;
}

UniPoly UniPoly::parse(std::string_view text) {
    std::vector<BigRational> c;
    if (!text.empty()) {
        size_t start = 0;
        while (true) {
            const size_t comma = text.find(',', start);
            const auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
            c.push_back(BigRational::parse(piece));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return from_coeffs(std::move(c));
}

std::string UniPoly::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const BigRational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (a == BigRational(1));
        const std::string mag = a.is_integer() ? a.num().get_str() : a.num().get_str() + "/" + a.den().get_str();
        if (i == 0) {
            os << mag;
        } else {
            if (!unit) os << mag << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    if (p.is_zero()) return {UniPoly(), UniPoly()};
    const int dd = *d.degree();
    std::vector<BigRational> rem(p.coeffs().begin(), p.coeffs().end());
    int rdeg = *p.degree();
    if (rdeg < dd) return {UniPoly(), p};
    std::vector<BigRational> quot(static_cast<size_t>(rdeg - dd) + 1, BigRational(0));
    const BigRational& lc = d.leading();
    while (rdeg >= dd) {
        const BigRational c = rem[static_cast<size_t>(rdeg)] / lc;
        const int shift = rdeg - dd;
        quot[static_cast<size_t>(shift)] = c;
        if (!c.is_zero()) {
            for (int i = 0; i <= dd; ++i) {
                rem[static_cast<size_t>(i + shift)] -= c * d.coeff(i);
            }
        }
        --rdeg;
        while (rdeg >= 0 && rem[static_cast<size_t>(rdeg)].is_zero()) --rdeg;
    }
    rem.resize(static_cast<size_t>(rdeg + 1));
    return {UniPoly::from_coeffs(std::move(quot)), UniPoly::from_coeffs(std::move(rem))};
}

UniPoly divide_exact(const UniPoly& p, const UniPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw NotDivisible("divide_exact: nonzero remainder");
    return q;
}

UniPoly monic(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("monic: zero polynomial");
    return p * (BigRational(1) / p.leading());
}

UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero()) return p;
    BigInt lcm_den(1);
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        BigInt l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
        lcm_den = l;
    }
    BigInt g(0);
    std::vector<BigInt> ints(p.coeffs().size());
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        const auto& c = p.coeffs()[i];
        ints[i] = c.num() * (lcm_den / c.den());
        BigInt gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
        g = gg;
    }
    std::vector<BigRational> out(ints.size());
    for (size_t i = 0; i < ints.size(); ++i) out[i] = BigRational(ints[i] / g);
    return UniPoly::from_coeffs(std::move(out));
}

UniPoly gcd(const UniPoly& p, const UniPoly& r) {
    if (p.is_zero() && r.is_zero()) {
        throw std::invalid_argument("gcd: both arguments zero");
    }
    UniPoly a = primitive_part(p);
    UniPoly b = primitive_part(r);
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (*a.degree() < *b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UniPoly rem = divmod(a, b).second;
        a = std::move(b);
        b = rem.is_zero() ? std::move(rem) : primitive_part(rem);
    }
    return monic(a);
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (*p.degree() == 0) return out;
    const UniPoly f = monic(p);
    const UniPoly a0 = gcd(f, f.derivative());
    UniPoly b = divide_exact(f, a0);
    UniPoly c = divide_exact(f.derivative(), a0);
    UniPoly d = c - b.derivative();
    for (int i = 1; *b.degree() > 0; ++i) {
        const UniPoly g = gcd(b, d);
        if (*g.degree() > 0) out.emplace_back(g, i);
        b = divide_exact(b, g);
        c = divide_exact(d, g);
        d = c - b.derivative();
    }
    return out;
}

UniPoly deflate(const UniPoly& p, const BigRational& r) {
    if (p.is_zero() || *p.degree() < 1) throw std::invalid_argument("deflate: degree < 1");
    // Synthetic division by (x - r); the remainder must be p(r) == 0.
    const auto& c = p.coeffs();
    std::vector<BigRational> q(c.size() - 1);
    BigRational acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
        q[i] = acc;
        acc = acc * r + c[i];
    }
    if (!acc.is_zero()) throw NotDivisible("deflate: point is not a root");
    return UniPoly::from_coeffs(std::move(q));
}

int multiplicity_at(const UniPoly& p, const BigRational& r) {
    if (p.is_zero()) throw std::invalid_argument("multiplicity_at: zero polynomial");
    int k = 0;
    UniPoly q = p;
    while (!q.is_constant() && q(r).is_zero()) {
        q = deflate(q, r);
        ++k;
    }
    return k;
}

UniPoly binomial_substitute(const UniPoly& p, int n) {
    if (n < 0) throw std::invalid_argument("binomial_substitute: n < 0");
    if (!p.is_zero() && *p.degree() > n) {
        throw DegreeTooHigh("binomial_substitute: deg p > n");
    }
    const UniPoly one_plus_x = UniPoly::from_coeffs({BigRational(1), BigRational(1)});
    std::vector<UniPoly> powers(static_cast<size_t>(n) + 1);
    powers[0] = UniPoly::one();
    for (int j = 1; j <= n; ++j) powers[static_cast<size_t>(j)] = powers[static_cast<size_t>(j - 1)] * one_plus_x;
    UniPoly acc;
    for (size_t k = 0; k < p.coeffs().size(); ++k) {
        if (p.coeffs()[k].is_zero()) continue;
        acc = acc + UniPoly::monomial(p.coeffs()[k], static_cast<int>(k)) *
                        powers[static_cast<size_t>(n) - k];
    }
    return acc;
}

}  // namespace rz

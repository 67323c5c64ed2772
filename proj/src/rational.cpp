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

#include "rzcert/rational.hpp"

#include <stdexcept>

namespace rz {

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("BigRational: zero denominator");
    q_.canonicalize();
}

BigRational::BigRational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigRational::parse: empty string");
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(BigInt(std::string(text)));
    }
    const std::string num_s(text.substr(0, slash));
    const std::string den_s(text.substr(slash + 1));
    if (num_s.empty() || den_s.empty()) {
        throw std::invalid_argument("BigRational::parse: malformed rational");
    }
    return BigRational(BigInt(num_s), BigInt(den_s));
}

BigRational BigRational::abs() const {
    return sign() < 0 ? -*this : *this;
}

BigInt BigRational::floor() const {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), mpq_numref(q_.get_mpq_t()), mpq_denref(q_.get_mpq_t()));
    return f;
}

BigInt BigRational::ceil() const {
    BigInt c;
    mpz_cdiv_q(c.get_mpz_t(), mpq_numref(q_.get_mpq_t()), mpq_denref(q_.get_mpq_t()));
    return c;
}

BigRational BigRational::pow(long e) const {
    if (e == 0) return BigRational(1);
    if (e < 0) {
        if (is_zero()) throw std::domain_error("BigRational::pow: 0 to a negative power");
        BigRational inv(den(), num());
        return inv.pow(-e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
    // num/den already coprime, so the powers are too.
    BigRational r;
    r.q_ = mpq_class(n, d);
    return r;
}

std::string BigRational::str() const {
    return num().get_str() + "/" + den().get_str();
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.q_ = -q_;
    return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
}

BigRational simplest_in(const BigRational& lo, const BigRational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("simplest_in: requires lo < hi");
    if (lo.sign() < 0 && hi.sign() > 0) return BigRational(0);
    if (hi.sign() <= 0) return -simplest_in(-hi, -lo);
    // 0 <= lo < hi from here on.
    const BigInt n = lo.floor();
    const BigRational next_int(n + 1);
    if (next_int < hi) return next_int;  // an integer strictly inside
    const BigRational base(n);
    if (lo == base) {
        // (n, hi) with hi - n <= 1: answer is n + 1/k for the least k with 1/k < hi - n.
        const BigRational h = hi - base;
        const BigInt k = (BigRational(1) / h).floor() + 1;
        return base + BigRational(BigInt(1), k);
    }
    // No integer inside; recurse on the reciprocal interval.
    const BigRational inner = simplest_in(BigRational(1) / (hi - base), BigRational(1) / (lo - base));
    return base + BigRational(1) / inner;
}

}  // namespace rz

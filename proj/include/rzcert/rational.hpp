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

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace rz {

using BigInt = mpz_class;

/// Exact rational scalar. Values are always kept in lowest terms with a
/// positive denominator; arithmetic never rounds.
class BigRational {
  public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}  // NOLINT: implicit by design
    BigRational(const BigInt& n) : q_(n) {}  // NOLINT
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den);

    /// Parses "num" or "num/den" with an optional leading sign.
    /// Throws std::invalid_argument on malformed input, std::domain_error
    /// on a zero denominator.
    static BigRational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational abs() const;
    BigInt floor() const;
    BigInt ceil() const;

    /// this^e, exact; e < 0 requires a nonzero base.
    BigRational pow(long e) const;

    /// Canonical form "num/den"; the denominator is always printed.
    std::string str() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o) {
        q_ += o.q_;
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        q_ -= o.q_;
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        q_ *= o.q_;
        return *this;
    }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) {
        a += b;
        return a;
    }
    friend BigRational operator-(BigRational a, const BigRational& b) {
        a -= b;
        return a;
    }
    friend BigRational operator*(BigRational a, const BigRational& b) {
        a *= b;
        return a;
    }
    friend BigRational operator/(BigRational a, const BigRational& b) {
        a /= b;
        return a;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return cmp(a.q_, b.q_) == 0;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

  private:
    mpq_class q_;
};

/// The rational with the smallest denominator strictly inside the open
/// interval (lo, hi). Ties in denominator are resolved by the Stern-Brocot
/// walk; the result is deterministic. Requires lo < hi.
BigRational simplest_in(const BigRational& lo, const BigRational& hi);

}  // namespace rz

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

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rzcert/unipoly.hpp"

namespace rz {

using Json = nlohmann::ordered_json;

/// Where zeros are allowed to live: the whole line, a closed interval
/// [a, b], or a closed ray (-inf, b] / [a, +inf).
class IntervalSpec {
  public:
    enum class Kind { whole_line, closed_interval, ray_le, ray_ge };

    static IntervalSpec whole_line();
    static IntervalSpec closed(const BigRational& a, const BigRational& b);
    static IntervalSpec ray_le(const BigRational& b);  // (-inf, b]
    static IntervalSpec ray_ge(const BigRational& a);  // [a, +inf)

    Kind kind() const { return kind_; }
    const BigRational& lower() const { return a_; }
    const BigRational& upper() const { return b_; }

    bool contains(const BigRational& r) const;
    /// Finite boundary points of the region.
    std::vector<BigRational> boundary() const;
    std::string str() const;

  private:
    IntervalSpec(Kind k, BigRational a, BigRational b)
        : kind_(k), a_(std::move(a)), b_(std::move(b)) {}
    Kind kind_;
    BigRational a_, b_;
};

/// A rational endpoint extended with the two infinities.
struct ExtendedRational {
    enum class Kind { neg_inf, finite, pos_inf };
    Kind kind = Kind::finite;
    BigRational value;

    static ExtendedRational neg_inf() { return {Kind::neg_inf, BigRational(0)}; }
    static ExtendedRational pos_inf() { return {Kind::pos_inf, BigRational(0)}; }
    static ExtendedRational at(BigRational v) { return {Kind::finite, std::move(v)}; }
    bool before(const ExtendedRational& o) const;
};

/// Sturm sequence of a squarefree polynomial: negated remainders with every
/// member reduced to primitive integer form (signs preserved). Signs at
/// +-infinity come from leading coefficients.
class SturmChain {
  public:
    /// Throws NotSquarefree if gcd(p, p') is nonconstant; requires p != 0.
    explicit SturmChain(const UniPoly& p);

    int variations_at(const ExtendedRational& x) const;
    /// Number of distinct real roots in the half-open interval (lo, hi].
    int count_half_open(const ExtendedRational& lo, const ExtendedRational& hi) const;
    /// Number of distinct real roots in the open interval (lo, hi).
    int count_open(const BigRational& lo, const BigRational& hi) const;
    int count_all() const;

  private:
    UniPoly p_;
    std::vector<UniPoly> chain_;
};

/// Distinct real roots of a squarefree nonzero p in (lo, hi]; endpoints may
/// be infinite. Throws NotSquarefree when gcd(p, p') is nonconstant.
int sturm_count(const UniPoly& p, const ExtendedRational& lo, const ExtendedRational& hi);

/// One distinct real root of the analyzed polynomial: either an exact
/// rational, or an open isolating interval (lo, hi) of a squarefree factor
/// that provably has no rational roots. multiplicity is the root's
/// multiplicity in the original polynomial.
struct RootDescriptor {
    bool is_rational = true;
    BigRational value;      // rational case
    BigRational lo, hi;     // irrational case: factor has exactly one root in (lo, hi)
    UniPoly factor;         // squarefree, monic, free of rational roots
    int multiplicity = 1;

    static RootDescriptor rational(BigRational v, int mult);
    static RootDescriptor interval(BigRational lo, BigRational hi, UniPoly factor, int mult);

    /// Halve the isolating interval (irrational roots only).
    void bisect();
    /// Shrink the interval so a rational point is outside its closure's
    /// interior; no-op when the point is already outside.
    void exclude_point(const BigRational& pt);
    Json to_json() const;
};

/// Complete description of the real zeros of a polynomial.
struct RootReport {
    int degree = 0;
    std::vector<RootDescriptor> roots;  // ascending; intervals pairwise disjoint
    int nonreal_count = 0;

    int real_count() const;  // sum of multiplicities
    bool only_real_zeros() const { return nonreal_count == 0; }
    std::vector<std::pair<BigRational, int>> rational_roots() const;
    Json to_json() const;
};

/// Full real-zero analysis. Rational roots are found exactly: the points
/// 0, -1, 1 are always tested, bisection midpoints that evaluate to zero
/// are promoted, and each isolating interval is searched for the unique
/// smallest-denominator rational it could contain (denominators of
/// rational roots divide the primitive leading coefficient, which bounds
/// the search). Remaining roots are certified irrational and isolated.
/// Requires p nonzero.
RootReport analyze(const UniPoly& p);

struct RzResult {
    bool holds = false;
    RootReport report;
};

/// True iff p has only real zeros and all of them lie in the region.
/// Closed endpoints are decided by exact evaluation; isolating intervals
/// are refined until they are entirely inside or outside. Requires p
/// nonzero.
RzResult is_rz(const UniPoly& p, const IntervalSpec& region);

/// True iff gcd(p, p') is constant. Requires p nonzero.
bool all_simple(const UniPoly& p);

/// 2 + max |a_i| / |a_deg|: every real root lies strictly inside (-B, B).
BigRational cauchy_bound(const UniPoly& p);

}  // namespace rz

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

#include <cstdint>
#include <random>

#include "rzcert/certificate.hpp"
#include "rzcert/families.hpp"
#include "rzcert/interlace.hpp"
#include "rzcert/realroots.hpp"

namespace rz {

/// An instance of the main derivative-relation setup: standard real-rooted
/// f together with u, v such that F := u f + v f' is standard of degree
/// deg f or deg f + 1 and v is nonpositive at every real root of f.
struct MthmInstance {
    UniPoly f, u, v;
    UniPoly big_f() const { return u * f + v * f.derivative(); }
    Json to_json() const;
};

/// Verifies F in RZ, f separates F, and the multiplicity trichotomy at
/// every rational root r of f with multiplicity m:
///   m - 1 when v(r) != 0;  m when v(r) = 0, u(r) + m v'(r) != 0;
///   m + 1 when both vanish.
/// Throws NotApplicable when the instance hypotheses fail.
Certificate check_mthm(const MthmInstance& inst);

/// Verifies the two endpoint biconditionals: with r the largest root of f
/// (multiplicity m), F in RZ(-inf, r] iff v(r) = 0 and u(r) + m v'(r) >= 0;
/// with r the smallest root, F in RZ[r, +inf) iff deg F = deg f, or
/// v(r) = 0 and u(r) + m v'(r) <= 0. The extreme roots must be rational so
/// the right-hand sides evaluate exactly. Throws NotApplicable otherwise.
Certificate check_mthm_AB(const MthmInstance& inst);

/// With f standard in RZ[-1, 0], m0/m1 the multiplicities of 0 and -1, and
/// F = (ax + b) f + x(x+1) f': under b + m0 >= 0 and a + m1 >= b, verifies
/// F in RZ[-1, 0], f separates F, and the exact multiplicity dichotomy at
/// 0 and -1. Throws NotApplicable when the preconditions fail.
Certificate check_corollary(const UniPoly& f, const BigRational& a, const BigRational& b);

/// Zero-location facts for A_n(x;q): (a) q > 0: nonpositive simple zeros;
/// (b) n + q <= 0: A_{n+1}(x;q) in RZ[1, +inf); (c) q = -t a negative
/// integer: A_n in RZ[1, +inf) with (x-1)^{max(n+q,0)} exactly dividing,
/// and A_n(x;-1) = -(x-1)^{n-1}. Every applicable branch is asserted.
Certificate check_eprop(int n, const BigRational& q0);

/// q_frobenius(n) equals q_eulerian(n) as an exact bivariate identity.
Certificate verify_q_frobenius(int n);

/// Composition polynomial facts: multiplicity of -1 equals max(n_i) - 1,
/// zeros lie in [-1, 0], and f separates each single-copy extension.
Certificate check_simion(const Multiset& m);

/// (x+1) F_n(x) = x^{n+1} A_n((x+1)/x) as exact polynomials.
Certificate verify_fn_relation(int n);

/// Alternating-runs facts for n >= 2: zeros in [-1, 0]; -1 has multiplicity
/// floor(n/2) - 1; the cofactor has exactly ceil(n/2) simple zeros
/// including 0; and R_n separates R_{n+1}.
Certificate check_bona_wilf(int n);

/// Evaluates R_n(x0) = ((1+x0)/2)^{n-1} (1+w)^{n+1} A_n((1-w)/(1+w)) at the
/// rational point x0 = (1-w^2)/(1+w^2), 0 < w < 1 (throws InvalidW
/// otherwise). The n = 1 evaluation is recorded with its exact mismatch.
Certificate verify_knuth_identity(int n, const BigRational& w0);

/// Deterministic generator of admissible random instances for the
/// randomized suites. All sampling is from fixed small pools so runs are
/// reproducible for a given seed across platforms.
class InstanceGen {
  public:
    explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

    /// Instance with rational roots and v(r) <= 0 at each; F standard of
    /// admissible degree. Mixes the three trichotomy cases.
    MthmInstance next_mthm();
    /// (f, a, b) admissible for check_corollary.
    struct CorollaryInstance {
        UniPoly f;
        BigRational a, b;
    };
    CorollaryInstance next_corollary();
    /// (p, xi) with T(p) in RZ(-inf, 0].
    struct TPropInstance {
        UniPoly p;
        BigRational xi;
    };
    TPropInstance next_t_prop();
    /// (p, alpha) with E(p) in RZ[-1, 0] and alpha in [-1, 0].
    struct EPropInstance {
        UniPoly p;
        BigRational alpha;
    };
    EPropInstance next_e_prop();
    /// Random polynomial with small rational coefficients, deg <= max_deg.
    UniPoly random_poly(int max_deg);
    /// Random rational from a small pool (includes negatives and zero).
    BigRational random_rational();

  private:
    std::mt19937_64 rng_;
    std::uint64_t pick(std::uint64_t n) { return rng_() % n; }
    int range(int lo, int hi);  // inclusive
    BigRational pool_pick(const std::vector<BigRational>& pool);
};

}  // namespace rz

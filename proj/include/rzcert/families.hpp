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
#include <vector>

#include "rzcert/bipoly.hpp"
#include "rzcert/unipoly.hpp"

namespace rz {

/// Multiset (n_1, n_2, ...) with n_i >= 1 copies of the i-th element type.
struct Multiset {
    std::vector<int> counts;

    explicit Multiset(std::vector<int> c);
    static Multiset parse(std::string_view text);  // "2,3,1"
    int total() const;
    int max_count() const;
    /// Adjoin one copy of type j (0-based); j == counts.size() starts a
    /// new type.
    Multiset plus_copy(size_t j) const;
    std::string str() const;
};

// Eulerian-type generating polynomials. Each generator runs its defining
// recurrence in exact arithmetic; the *_oracle variants enumerate
// permutations or compositions directly and exist to cross-check them.

/// Classical Eulerian polynomial: A_0 = 1, A_{n+1} = (n+1)x A_n + x(1-x) A_n'.
UniPoly eulerian(int n);

/// Cycle q-analog built symbolically in q:
/// A_{n+1}(x;q) = (nx + q) A_n(x;q) + x(1-x) d/dx A_n(x;q), A_0 = 1.
BiPoly q_eulerian(int n);
UniPoly q_eulerian_at(int n, const BigRational& q0);

/// Enumerates all n! permutations, accumulating x^{excedances} q^{cycles}.
/// Throws TooLarge for n > 9.
BiPoly q_eulerian_oracle(int n);

/// E_0 = 1, E_{n+1} = q(1+x) E_n + x(1+x) E_n' at fixed rational q.
UniPoly e_poly(int n, const BigRational& q0);

/// Bell polynomial: B_0 = 1, B_n = x B_{n-1} + x B_{n-1}'.
UniPoly bell(int n);
/// Stirling number of the second kind, exact (integer-valued).
BigRational stirling2(int n, int k);

/// Alternating-runs polynomial R_n: R_1 = 1, R_2 = 2x,
/// R_{n+2} = x(nx+2) R_{n+1} + x(1-x^2) R_{n+1}'.
UniPoly alt_runs(int n);
/// Triangle recurrence R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2).
BigInt alt_runs_triangle(int n, int k);
/// Permutation enumeration; throws TooLarge for n > 9.
UniPoly alt_runs_oracle(int n);

/// Composition counting polynomial of a multiset, built copy by copy via
/// (n_j + 1) f_{n+e_j} = (x + n_j) f_n + x(x+1) f_n' from f = 1 for the
/// empty multiset; exact division by (n_j + 1) at every step.
UniPoly composition_gf(const Multiset& m);
/// Recursive first-part enumeration (memoized); throws TooLarge for
/// total > 10.
UniPoly composition_oracle(const Multiset& m);

/// F_n(x) = sum_{k=1}^n k! S(n,k) x^k.
UniPoly kfact_stirling(int n);

/// sum_k rising(q,k) S(n,k) (x-1)^{n-k}, where rising(q,k) =
/// q(q+1)...(q+k-1) is binomial(q+k-1, k) k! expanded in q.
BiPoly q_frobenius(int n);

/// Negative-integer specialization
/// sum_k (-1)^k binomial(t,k) k! S(n,k) (x-1)^{n-k}; equals A_n(x;-t).
UniPoly q_eulerian_neg(int n, int t);

/// Classical Frobenius form x sum_k k! S(n,k) (x-1)^{n-k}; equals A_n(x).
UniPoly eulerian_frobenius(int n);

/// All multisets (as nondecreasing count tuples) of the given total size.
std::vector<Multiset> multisets_of_total(int total);

}  // namespace rz

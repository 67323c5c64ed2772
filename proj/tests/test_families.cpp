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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "rzcert/errors.hpp"
#include "rzcert/families.hpp"

using namespace rz;

namespace {

// Independent oracle: partitions of {1..n} into exactly k nonempty blocks,
// counted by direct enumeration of block assignments in restricted-growth
// form.
long count_set_partitions(int n, int k) {
    std::vector<int> assign(static_cast<size_t>(n), 0);
    long count = 0;
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            if (used == k) ++count;
            return;
        }
        for (int b = 0; b <= used && b < k; ++b) {
            assign[static_cast<size_t>(i)] = b;
            self(self, i + 1, b == used ? used + 1 : used);
        }
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace

TEST_CASE("classical Eulerian polynomials") {
    CHECK(eulerian(0) == P({1}));
    CHECK(eulerian(1) == P({0, 1}));
    CHECK(eulerian(2) == P({0, 1, 1}));
    CHECK(eulerian(3) == P({0, 1, 4, 1}));
    // x * A_n(x;1) = A_n(x)
    for (int n = 1; n <= 12; ++n) {
        CHECK(P({0, 1}) * q_eulerian_at(n, BigRational(1)) == eulerian(n));
    }
}

TEST_CASE("q-Eulerian symbolic values") {
    CHECK(q_eulerian(0) == BiPoly::one());
    CHECK(q_eulerian(1) == BiPoly::q_constant(UniPoly::x()));
    // A_2 = q x + q^2
    const BiPoly a2 = BiPoly::from_coeffs({UniPoly::monomial(BigRational(1), 2), UniPoly::x()});
    CHECK(q_eulerian(2) == a2);
    // A_3 = q^3 + (3q^2 + q) x + q x^2
    const BiPoly a3 = BiPoly::from_coeffs({UniPoly::monomial(BigRational(1), 3),
                                           PQ("0/1,1/1,3/1"), UniPoly::x()});
    CHECK(q_eulerian(3) == a3);
}

TEST_CASE("q-Eulerian permutation oracle") {
    CHECK(q_eulerian_oracle(0) == BiPoly::one());
    CHECK(q_eulerian_oracle(2) == q_eulerian(2));
    CHECK(q_eulerian_oracle(3) == q_eulerian(3));
    for (int n = 0; n <= 6; ++n) {
        CHECK(q_eulerian_oracle(n) == q_eulerian(n));
    }
    CHECK_THROWS_AS(q_eulerian_oracle(10), TooLarge);
}

TEST_CASE("E-transform recurrence family") {
    CHECK(e_poly(0, Q("5/7")) == P({1}));
    for (const auto& q0 : {BigRational(1), Q("-1/2"), BigRational(3)}) {
        CHECK(e_poly(1, q0) == P({1, 1}) * q0);
    }
    CHECK(e_poly(2, BigRational(1)) == P({1, 3, 2}));  // (1+x)(2x+1)
    for (int n = 0; n <= 10; ++n) {
        for (const auto& q0 : {BigRational(1), Q("-1/2"), Q("2/3")}) {
            CHECK(e_poly(n, q0) == binomial_substitute(q_eulerian_at(n, q0), n));
        }
    }
}

TEST_CASE("Bell polynomials and Stirling numbers") {
    CHECK(bell(0) == P({1}));
    CHECK(bell(1) == P({0, 1}));
    CHECK(bell(2) == P({0, 1, 1}));
    CHECK(stirling2(4, 2) == BigRational(7));
    CHECK(stirling2(0, 0) == BigRational(1));
    CHECK(stirling2(5, 0) == BigRational(0));
    for (int n = 0; n <= 9; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(stirling2(n, k) == BigRational(count_set_partitions(n, k)));
            CHECK(bell(n).coeff(k) == stirling2(n, k));
        }
    }
}

TEST_CASE("alternating runs: three constructions agree") {
    CHECK(alt_runs(1) == P({1}));
    CHECK(alt_runs(2) == P({0, 2}));
    CHECK(alt_runs(3) == P({0, 2, 4}));
    CHECK(alt_runs(4) == P({0, 2, 12, 10}));
    for (int n = 1; n <= 8; ++n) {
        CHECK(alt_runs(n) == alt_runs_oracle(n));
        for (int k = 0; k <= n; ++k) {
            CHECK(alt_runs(n).coeff(k) == BigRational(alt_runs_triangle(n, k)));
        }
    }
    CHECK(alt_runs_triangle(4, 1) == 2);
    CHECK(alt_runs_triangle(4, 2) == 12);
    CHECK(alt_runs_triangle(4, 3) == 10);
    CHECK_THROWS_AS(alt_runs_oracle(10), TooLarge);
}

TEST_CASE("composition generating polynomials") {
    CHECK(composition_gf(Multiset({1})) == P({0, 1}));
    CHECK(composition_gf(Multiset({2})) == P({0, 1, 1}));
    // {a,b}: [{a,b}], [{a}{b}], [{b}{a}]
    CHECK(composition_oracle(Multiset({1, 1})) == P({0, 1, 2}));
    CHECK(composition_oracle(Multiset({2})) == P({0, 1, 1}));
    for (int total = 1; total <= 7; ++total) {
        for (const auto& m : multisets_of_total(total)) {
            CHECK(composition_gf(m) == composition_oracle(m));
        }
    }
    // order invariance of the build
    {
        const UniPoly ref = composition_gf(Multiset({1, 2, 3}));
        std::vector<int> perm = {1, 2, 3};
        do {
            CHECK(composition_gf(Multiset(perm)) == ref);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    CHECK_THROWS_AS(composition_oracle(Multiset({11})), TooLarge);
}

TEST_CASE("k! S(n,k) polynomials") {
    CHECK(kfact_stirling(1) == P({0, 1}));
    CHECK(kfact_stirling(2) == P({0, 1, 2}));
    CHECK(kfact_stirling(3) == P({0, 1, 6, 6}));
    for (int n = 1; n <= 10; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        CHECK(composition_gf(Multiset(ones)) == kfact_stirling(n));
    }
}

TEST_CASE("q-Frobenius expansion matches the recurrence") {
    CHECK(q_frobenius(0) == BiPoly::one());
    CHECK(q_frobenius(1) == BiPoly::q_constant(UniPoly::x()));
    CHECK(q_frobenius(2) == q_eulerian(2));
    for (int n = 0; n <= 12; ++n) {
        CHECK(q_frobenius(n) == q_eulerian(n));
    }
}

TEST_CASE("negative-integer specialization") {
    CHECK(q_eulerian_neg(3, 1) == -P({-1, 1}).pow(2));
    CHECK(q_eulerian_neg(2, 3) == P({9, -3}));
    CHECK(q_eulerian_neg(2, 3) == q_eulerian_at(2, BigRational(-3)));
    for (int t = 1; t <= 4; ++t) {
        for (int n = 0; n <= 8; ++n) {
            const UniPoly a = q_eulerian_neg(n, t);
            CHECK(a == q_eulerian_at(n, BigRational(-t)));
            if (n >= t) {
                CHECK(multiplicity_at(a, BigRational(1)) == n - t);
            }
        }
    }
}

TEST_CASE("classical Frobenius form") {
    // The x-prefixed form only matches for n >= 1: at n = 0 it yields x
    // while A_0 = 1.
    CHECK(eulerian_frobenius(0) == P({0, 1}));
    for (int n = 1; n <= 12; ++n) {
        CHECK(eulerian_frobenius(n) == eulerian(n));
    }
}

TEST_CASE("multiset utilities") {
    CHECK(Multiset::parse("2,3,1").total() == 6);
    CHECK(Multiset::parse("2,3,1").max_count() == 3);
    CHECK(Multiset({2, 3}).plus_copy(0).counts == std::vector<int>{3, 3});
    CHECK(Multiset({2, 3}).plus_copy(2).counts == std::vector<int>{2, 3, 1});
    CHECK_THROWS_AS(Multiset({0, 2}), std::invalid_argument);
    CHECK(multisets_of_total(4).size() == 5);   // partitions of 4
    CHECK(multisets_of_total(8).size() == 22);  // partitions of 8
}

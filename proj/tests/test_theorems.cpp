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

#include "doctest.h"
#include "helpers.hpp"
#include "rzcert/basisops.hpp"
#include "rzcert/errors.hpp"
#include "rzcert/theorems.hpp"

using namespace rz;

TEST_CASE("the q-Eulerian recurrence is an instance of the main check") {
    // f = A_4(x;2), u = 4x + 2, v = x(1-x): F must be A_5(x;2).
    const UniPoly f = q_eulerian_at(4, BigRational(2));
    const MthmInstance inst{f, P({2, 4}), P({0, 1, -1})};
    CHECK(inst.big_f() == q_eulerian_at(5, BigRational(2)));
    CHECK(check_mthm(inst).holds());
    // The extreme roots of A_4(x;2) are irrational, so the endpoint
    // biconditionals decline rather than evaluate inexactly.
    CHECK_THROWS_AS(check_mthm_AB(inst), NotApplicable);
}

TEST_CASE("multiplicity trichotomy cases") {
    SUBCASE("case (a): v(r) != 0 drops the multiplicity") {
        // f = (x-1)^2, u = 1, v = -1: F = (x-1)^2 - 2(x-1) = (x-1)(x-3)
        const MthmInstance inst{P({-1, 1}).pow(2), P({1}), P({-1})};
        CHECK(inst.big_f() == P({3, -4, 1}));
        const Certificate c = check_mthm(inst);
        CHECK(c.holds());
        CHECK(multiplicity_at(inst.big_f(), BigRational(1)) == 1);
    }
    SUBCASE("case (b): v(r) = 0, u(r) + m v'(r) != 0 keeps it") {
        // f = (x-1)^2, u = 3, v = -(x-1): F = (x-1)^2
        const MthmInstance inst{P({-1, 1}).pow(2), P({3}), P({1, -1})};
        CHECK(inst.big_f() == P({1, -2, 1}));
        CHECK(check_mthm(inst).holds());
        CHECK(multiplicity_at(inst.big_f(), BigRational(1)) == 2);
    }
    SUBCASE("case (c): both vanish and the multiplicity grows") {
        // f = (x-1)^2, u = 2 + (x-1), v = -(x-1): F = (x-1)^3
        const MthmInstance inst{P({-1, 1}).pow(2), P({1, 1}), P({1, -1})};
        CHECK(inst.big_f() == P({-1, 1}).pow(3));
        CHECK(check_mthm(inst).holds());
        CHECK(multiplicity_at(inst.big_f(), BigRational(1)) == 3);
    }
    SUBCASE("degenerate F is rejected") {
        // f = (x-1)^2, u = 2, v = -(x-1): F = 0
        const MthmInstance inst{P({-1, 1}).pow(2), P({2}), P({1, -1})};
        CHECK(inst.big_f().is_zero());
        CHECK_THROWS_AS(check_mthm(inst), NotApplicable);
    }
    SUBCASE("v positive at a root is rejected") {
        const MthmInstance inst{P({0, 1}), P({0, 1}), P({1})};
        CHECK_THROWS_AS(check_mthm(inst), NotApplicable);
    }
}

TEST_CASE("endpoint biconditionals on hand-checked instances") {
    SUBCASE("largest root stays extreme when u(r) + m v'(r) >= 0") {
        // f = x(x+1), u = x, v = x(x+1): F = x(x+1)(3x+1)
        const MthmInstance inst{P({0, 1, 1}), P({0, 1}), P({0, 1, 1})};
        CHECK(inst.big_f() == P({0, 1, 1}) * P({1, 3}));
        CHECK(check_mthm_AB(inst).holds());
        CHECK(is_rz(inst.big_f(), IntervalSpec::ray_le(BigRational(0))).holds);
    }
    SUBCASE("boundary case u(r) + m v'(r) = 0") {
        // f = x(x+1), u = x-1, v = x(x+1): F = 3x^2(x+1)
        const MthmInstance inst{P({0, 1, 1}), P({-1, 1}), P({0, 1, 1})};
        CHECK(inst.big_f() == P({0, 0, 3, 3}));
        CHECK(check_mthm_AB(inst).holds());
        CHECK(is_rz(inst.big_f(), IntervalSpec::ray_le(BigRational(0))).holds);
    }
    SUBCASE("v(r) != 0 at the largest root forces a zero beyond it") {
        // f = x+1, u = x, v = -1: F = x^2 + x - 1 with a root above -1
        const MthmInstance inst{P({1, 1}), P({0, 1}), P({-1})};
        CHECK(check_mthm_AB(inst).holds());
        CHECK(!is_rz(inst.big_f(), IntervalSpec::ray_le(BigRational(-1))).holds);
    }
}

TEST_CASE("corollary instances from the examples") {
    SUBCASE("f = x(x+1), a = 2, b = 1") {
        const Certificate c = check_corollary(P({0, 1, 1}), BigRational(2), BigRational(1));
        CHECK(c.holds());
        // F = 2x(x+1)(2x+1)
        const UniPoly F = P({1, 2}) * P({0, 1, 1}) + P({0, 1, 1}) * P({1, 2});
        CHECK(F == P({0, 2, 6, 4}));
    }
    SUBCASE("f = x, a = 1, b = 0: multiplicity of 0 is preserved") {
        const Certificate c = check_corollary(P({0, 1}), BigRational(1), BigRational(0));
        CHECK(c.holds());
        const UniPoly F = P({0, 0, 1}) + P({0, 1, 1});
        CHECK(multiplicity_at(F, BigRational(0)) == 1);
    }
    SUBCASE("f = x, a = 0, b = -1: multiplicity of 0 grows") {
        const Certificate c = check_corollary(P({0, 1}), BigRational(0), BigRational(-1));
        CHECK(c.holds());
        const UniPoly F = P({-1}) * P({0, 1}) + P({0, 1, 1});
        CHECK(F == P({0, 0, 1}));
        CHECK(multiplicity_at(F, BigRational(0)) == 2);
    }
    SUBCASE("inadmissible coefficients") {
        CHECK_THROWS_AS(check_corollary(P({0, 1}), BigRational(0), BigRational(-2)),
                        NotApplicable);
        CHECK_THROWS_AS(check_corollary(P({-3, 1}), BigRational(1), BigRational(1)),
                        NotApplicable);
    }
}

TEST_CASE("zero-location certificates for the q-Eulerian family") {
    CHECK(check_eprop(6, Q("1/3")).holds());
    CHECK(check_eprop(5, BigRational(-3)).holds());
    CHECK(multiplicity_at(q_eulerian_at(5, BigRational(-3)), BigRational(1)) == 2);
    CHECK(check_eprop(4, BigRational(-1)).holds());
    CHECK(q_eulerian_at(4, BigRational(-1)) == -P({-1, 1}).pow(3));
    CHECK(check_eprop(0, BigRational(-2)).holds());
    CHECK(check_eprop(0, BigRational(0)).holds());  // vacuous zero-polynomial branch
    CHECK(check_eprop(3, Q("-7/2")).holds());       // n + q <= 0 with fractional q
}

TEST_CASE("zero-location certificates at q = -n and q = -n-1") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(check_eprop(n, BigRational(-n)).holds());
        CHECK(check_eprop(n, BigRational(-n - 1)).holds());
    }
}

TEST_CASE("q-Frobenius certificates") {
    CHECK(verify_q_frobenius(0).holds());
    CHECK(verify_q_frobenius(3).holds());
    CHECK(verify_q_frobenius(12).holds());
}

TEST_CASE("composition certificates") {
    SUBCASE("single type with two copies") {
        const Certificate c = check_simion(Multiset({2}));
        CHECK(c.holds());
        CHECK(multiplicity_at(composition_gf(Multiset({2})), BigRational(-1)) == 1);
    }
    SUBCASE("three singleton types") {
        CHECK(check_simion(Multiset({1, 1, 1})).holds());
        CHECK(multiplicity_at(kfact_stirling(3), BigRational(-1)) == 0);
    }
    SUBCASE("mixed multiset") {
        CHECK(check_simion(Multiset({3, 2})).holds());
    }
}

TEST_CASE("Frobenius link between F_n and the Eulerian polynomial") {
    CHECK(verify_fn_relation(1).holds());
    CHECK(verify_fn_relation(2).holds());
    CHECK(verify_fn_relation(12).holds());
}

TEST_CASE("alternating-runs certificates") {
    CHECK(check_bona_wilf(2).holds());
    CHECK(check_bona_wilf(4).holds());
    const Certificate c7 = check_bona_wilf(7);
    CHECK(c7.holds());
    CHECK(multiplicity_at(alt_runs(7), BigRational(-1)) == 2);
    CHECK_THROWS_AS(check_bona_wilf(1), std::invalid_argument);
}

TEST_CASE("Knuth evaluation identity") {
    // n = 2, w = 1/2: x0 = 3/5, both sides 6/5.
    const Certificate c = verify_knuth_identity(2, Q("1/2"));
    CHECK(c.holds());
    CHECK(alt_runs(2)(Q("3/5")) == Q("6/5"));
    for (int n = 2; n <= 8; ++n) {
        CHECK(verify_knuth_identity(n, Q("2/3")).holds());
    }
    // n = 1 records the exact mismatch w^2 and fails the equality claim.
    const Certificate c1 = verify_knuth_identity(1, Q("1/2"));
    CHECK(!c1.holds());
    CHECK(c1.assertions().size() == 2);
    CHECK(c1.assertions()[0].pass);   // the recorded anomaly is exact
    CHECK(!c1.assertions()[1].pass);  // the identity itself fails
    CHECK_THROWS_AS(verify_knuth_identity(3, BigRational(2)), InvalidW);
    CHECK_THROWS_AS(verify_knuth_identity(3, BigRational(0)), InvalidW);
}

TEST_CASE("seeded instance suites are deterministic and pass") {
    InstanceGen g1(123), g2(123);
    for (int i = 0; i < 50; ++i) {
        const MthmInstance a = g1.next_mthm();
        const MthmInstance b = g2.next_mthm();
        CHECK(a.to_json() == b.to_json());
        CHECK(check_mthm(a).holds());
        CHECK(check_mthm_AB(a).holds());
    }
    InstanceGen g3(5);
    for (int i = 0; i < 25; ++i) {
        const auto c = g3.next_corollary();
        CHECK(check_corollary(c.f, c.a, c.b).holds());
        const auto t = g3.next_t_prop();
        CHECK(check_t_prop(t.p, t.xi).holds());
        const auto e = g3.next_e_prop();
        CHECK(check_e_prop(e.p, e.alpha).holds());
    }
}

TEST_CASE("certificates serialize with digests") {
    const Certificate c = check_eprop(4, BigRational(-1));
    const Json j = c.to_json();
    CHECK(j["claim_id"] == "eprop");
    CHECK(j["holds"] == true);
    CHECK(j["sub_assertions"].is_array());
    CHECK(!c.digest().empty());
    // digest is stable
    CHECK(c.digest() == check_eprop(4, BigRational(-1)).digest());
}

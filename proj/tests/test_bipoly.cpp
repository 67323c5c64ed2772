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

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rzcert/bipoly.hpp"
#include "rzcert/families.hpp"

using namespace rz;

namespace {

BiPoly random_bipoly(std::mt19937_64& rng) {
    const int dx = static_cast<int>(rng() % 4);
    std::vector<UniPoly> c(static_cast<size_t>(dx) + 1);
    for (auto& qc : c) {
        const int dq = static_cast<int>(rng() % 3);
        std::vector<BigRational> qq(static_cast<size_t>(dq) + 1);
        for (auto& v : qq) v = BigRational(static_cast<long>(rng() % 9) - 4);
        qc = UniPoly::from_coeffs(std::move(qq));
    }
    return BiPoly::from_coeffs(std::move(c));
}

}  // namespace

TEST_CASE("specialization of the small q-Eulerian list") {
    // A_3(x;q) = q[x^2 + (3q+1)x + q^2] at q = 1: x^2 + 4x + 1
    CHECK(q_eulerian(3).specialize(BigRational(1)) == P({1, 4, 1}));
    // A_2(x;q) = q(x+q) at q = -1: 1 - x
    CHECK(q_eulerian(2).specialize(BigRational(-1)) == P({1, -1}));
    // A_1(x;q) = q at q = 0: zero polynomial
    CHECK(q_eulerian(1).specialize(BigRational(0)).is_zero());
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937_64 rng(29);
    const BigRational pts[] = {BigRational(0), BigRational(1), Q("-1/2"), Q("7/3")};
    for (int i = 0; i < 100; ++i) {
        const BiPoly a = random_bipoly(rng);
        const BiPoly b = random_bipoly(rng);
        for (const auto& q0 : pts) {
            CHECK((a + b).specialize(q0) == a.specialize(q0) + b.specialize(q0));
            CHECK((a * b).specialize(q0) == a.specialize(q0) * b.specialize(q0));
            CHECK(a.derivative_x().specialize(q0) == a.specialize(q0).derivative());
        }
    }
}

TEST_CASE("canonical serialization of a BiPoly") {
    // A_2(x;q) = q^2 + q x
    const auto strings = q_eulerian(2).canonical_strings();
    REQUIRE(strings.size() == 2);
    CHECK(strings[0] == "0/1,0/1,1/1");
    CHECK(strings[1] == "0/1,1/1");
    CHECK(BiPoly::zero().canonical_strings().empty());
}

TEST_CASE("trailing zero x-coefficients are trimmed") {
    const BiPoly p = BiPoly::from_coeffs({UniPoly::x(), UniPoly(), UniPoly()});
    CHECK(*p.x_degree() == 0);
    CHECK(BiPoly::from_coeffs({UniPoly()}).is_zero());
}

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

// Acceptance suite: one timed pass/fail line per criterion. Every check is
// exact (no tolerances); runtime bounds are part of the criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "rzcert/basisops.hpp"
#include "rzcert/theorems.hpp"

using namespace rz;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double limit_seconds,
               const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= limit_seconds;
    const bool pass = ok && in_time;
    if (!pass) ++g_failures;
    std::printf("criterion %2d %-58s %s (%.2fs, limit %.0fs)%s%s\n", number, name.c_str(),
                pass ? "PASS" : "FAIL", secs, limit_seconds,
                error.empty() ? "" : " error: ", error.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    criterion(1, "small q-Eulerian list n = 0..3", 1.0, [] {
        const BiPoly a0 = BiPoly::one();
        const BiPoly a1 = BiPoly::q_constant(UniPoly::x());
        const BiPoly a2 = BiPoly::from_coeffs({UniPoly::monomial(BigRational(1), 2), UniPoly::x()});
        const BiPoly a3 = BiPoly::from_coeffs(
            {UniPoly::monomial(BigRational(1), 3),
             UniPoly::from_coeffs({BigRational(0), BigRational(1), BigRational(3)}),
             UniPoly::x()});
        return q_eulerian(0) == a0 && q_eulerian(1) == a1 && q_eulerian(2) == a2 &&
               q_eulerian(3) == a3;
    });

    criterion(2, "q-Frobenius identity for 0 <= n <= 12", 5.0, [] {
        for (int n = 0; n <= 12; ++n) {
            if (!verify_q_frobenius(n).holds()) return false;
        }
        return true;
    });

    criterion(3, "oracle equivalence (permutations, runs, compositions)", 30.0, [] {
        for (int n = 0; n <= 8; ++n) {
            if (!(q_eulerian(n) == q_eulerian_oracle(n))) return false;
        }
        for (int n = 1; n <= 8; ++n) {
            if (!(alt_runs(n) == alt_runs_oracle(n))) return false;
        }
        for (int total = 1; total <= 8; ++total) {
            for (const auto& m : multisets_of_total(total)) {
                if (!(composition_gf(m) == composition_oracle(m))) return false;
            }
        }
        return true;
    });

    criterion(4, "q-Eulerian zero locations (positive, ray, negative q)", 30.0, [] {
        for (const auto& q0 : {BigRational(1, 3), BigRational(1), BigRational(7, 2)}) {
            for (int n = 2; n <= 12; ++n) {
                if (!check_eprop(n, q0).holds()) return false;
            }
        }
        for (int n = 0; n <= 10; ++n) {
            if (!check_eprop(n, BigRational(-n)).holds()) return false;
            if (!check_eprop(n, BigRational(-n - 3)).holds()) return false;
        }
        for (int t = 1; t <= 5; ++t) {
            for (int n = 0; n <= 12; ++n) {
                if (!check_eprop(n, BigRational(-t)).holds()) return false;
            }
        }
        return true;
    });

    criterion(5, "alternating-runs zero structure for 2 <= n <= 20", 60.0, [] {
        for (int n = 2; n <= 20; ++n) {
            if (!check_bona_wilf(n).holds()) return false;
        }
        return true;
    });

    criterion(6, "500 seeded u f + v f' instances (incl. (A)/(B))", 60.0, [] {
        InstanceGen gen(42);
        for (int i = 0; i < 500; ++i) {
            const MthmInstance inst = gen.next_mthm();
            if (!check_mthm(inst).holds()) return false;
            if (!check_mthm_AB(inst).holds()) return false;
        }
        return true;
    });

    criterion(7, "corollary + operator propositions + identities", 30.0, [] {
        InstanceGen gen(43);
        for (int i = 0; i < 200; ++i) {
            const auto c = gen.next_corollary();
            if (!check_corollary(c.f, c.a, c.b).holds()) return false;
        }
        InstanceGen gen_t(44);
        for (int i = 0; i < 200; ++i) {
            const auto t = gen_t.next_t_prop();
            if (!check_t_prop(t.p, t.xi).holds()) return false;
        }
        InstanceGen gen_e(45);
        for (int i = 0; i < 200; ++i) {
            const auto e = gen_e.next_e_prop();
            if (!check_e_prop(e.p, e.alpha).holds()) return false;
        }
        InstanceGen gen_id(46);
        for (int i = 0; i < 100; ++i) {
            if (!verify_t_identity(gen_id.random_poly(12), gen_id.random_rational()).holds()) {
                return false;
            }
            if (!verify_e_identity(gen_id.random_poly(12), gen_id.random_rational()).holds()) {
                return false;
            }
        }
        return true;
    });

    criterion(8, "composition polynomials, all multisets of size <= 8", 60.0, [] {
        for (int total = 1; total <= 8; ++total) {
            for (const auto& m : multisets_of_total(total)) {
                if (!check_simion(m).holds()) return false;
            }
        }
        return true;
    });

    criterion(9, "Knuth evaluation identity (incl. n = 1 record)", 5.0, [] {
        const std::vector<BigRational> ws = {BigRational(1, 3), BigRational(1, 2),
                                             BigRational(2, 3), BigRational(3, 4),
                                             BigRational(9, 10)};
        for (const auto& w : ws) {
            for (int n = 2; n <= 10; ++n) {
                if (!verify_knuth_identity(n, w).holds()) return false;
            }
            // n = 1: the identity fails; the certificate must record the
            // exact defect w^2 (first sub-assertion) and report the failed
            // equality (second).
            const Certificate c1 = verify_knuth_identity(1, w);
            if (c1.holds()) return false;
            if (c1.assertions().size() != 2 || !c1.assertions()[0].pass) return false;
        }
        return true;
    });

    criterion(10, "Bell polynomials: simple nonpositive zeros; T link", 10.0, [] {
        for (int n = 1; n <= 20; ++n) {
            const UniPoly b = bell(n);
            if (!is_rz(b, IntervalSpec::ray_le(BigRational(0))).holds) return false;
            if (!all_simple(b)) return false;
        }
        for (int n = 0; n <= 15; ++n) {
            if (!(t_transform(UniPoly::x().pow(n)) == bell(n))) return false;
        }
        return true;
    });

    criterion(11, "classical links (A_n, Frobenius, F_n relation)", 10.0, [] {
        for (int n = 1; n <= 20; ++n) {
            if (!(UniPoly::x() * q_eulerian_at(n, BigRational(1)) == eulerian(n))) return false;
        }
        for (int n = 1; n <= 15; ++n) {
            if (!(eulerian(n) == eulerian_frobenius(n))) return false;
        }
        for (int n = 1; n <= 12; ++n) {
            if (!verify_fn_relation(n).holds()) return false;
        }
        return true;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}

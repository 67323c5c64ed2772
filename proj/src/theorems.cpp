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

#include "rzcert/theorems.hpp"

#include <stdexcept>

#include "rzcert/basisops.hpp"
#include "rzcert/errors.hpp"

namespace rz {

namespace {

// v(r) <= 0 for every real root r of f, decided exactly: rational roots by
// evaluation, interval roots by shrinking the isolating interval until v
// has constant sign on it (or the root is a common root of the factor and
// v, in which case v vanishes there).
bool nonpositive_on_roots(const UniPoly& v, RootReport& f_report) {
    if (v.is_zero()) return true;
    for (auto& d : f_report.roots) {
        if (d.is_rational) {
            if (v(d.value).sign() > 0) return false;
            continue;
        }
        const UniPoly h = gcd(d.factor, v);
        if (*h.degree() > 0 && SturmChain(h).count_open(d.lo, d.hi) == 1) {
            continue;  // v vanishes at this root
        }
        // v(root) != 0: refine until no zero of v is inside, then read the
        // constant sign at the midpoint.
        const UniPoly vs = divide_exact(v, gcd(v, v.derivative()));  // squarefree part
        const SturmChain vchain(vs);
        long budget = 64 + 4 * (static_cast<long>(mpz_sizeinbase(cauchy_bound(d.factor).ceil().get_mpz_t(), 2)) +
                                *d.factor.degree() + *v.degree());
        while (vchain.count_open(d.lo, d.hi) > 0 ||
               v(d.lo).sign() == 0 || v(d.hi).sign() == 0) {
            if (--budget < 0) throw RefinementDefect("nonpositive_on_roots: refinement bound exceeded");
            d.bisect();
        }
        if (v((d.lo + d.hi) * BigRational(1, 2)).sign() > 0) return false;
    }
    return true;
}

struct ValidatedInstance {
    UniPoly F;
    RootReport f_report;
};

ValidatedInstance validate_mthm(const MthmInstance& inst) {
    if (inst.f.is_zero() || !inst.f.is_standard()) {
        throw NotApplicable("mthm: f must be standard");
    }
    ValidatedInstance out;
    out.F = inst.big_f();
    if (out.F.is_zero() || !out.F.is_standard()) {
        throw NotApplicable("mthm: F must be standard");
    }
    const int df = *inst.f.degree();
    const int dF = *out.F.degree();
    if (dF != df && dF != df + 1) {
        throw NotApplicable("mthm: deg F must be deg f or deg f + 1");
    }
    out.f_report = analyze(inst.f);
    if (!out.f_report.only_real_zeros()) {
        throw NotApplicable("mthm: f must have only real zeros");
    }
    if (!nonpositive_on_roots(inst.v, out.f_report)) {
        throw NotApplicable("mthm: v must be nonpositive at every root of f");
    }
    return out;
}

}  // namespace

Json MthmInstance::to_json() const {
    return Json{{"f", f.canonical_str()}, {"u", u.canonical_str()}, {"v", v.canonical_str()}};
}

Certificate check_mthm(const MthmInstance& inst) {
    auto val = validate_mthm(inst);
    Certificate cert("mthm");
    cert.echo_input("f", inst.f.canonical_str());
    cert.echo_input("u", inst.u.canonical_str());
    cert.echo_input("v", inst.v.canonical_str());
    cert.echo_input("F", val.F.canonical_str());

    const auto rz_whole = is_rz(val.F, IntervalSpec::whole_line());
    cert.require("F has only real zeros", rz_whole.holds, rz_whole.report.to_json());

    const auto sep = separates(inst.f, val.F);
    cert.require("f separates F", sep.holds, sep.to_json());

    const UniPoly vp = inst.v.derivative();
    for (const auto& [r, m] : val.f_report.rational_roots()) {
        const BigRational vr = inst.v(r);
        int expected;
        const char* why;
        if (!vr.is_zero()) {
            expected = m - 1;
            why = "v(r) != 0";
        } else if (!(inst.u(r) + BigRational(m) * vp(r)).is_zero()) {
            expected = m;
            why = "v(r) = 0, u(r) + m v'(r) != 0";
        } else {
            expected = m + 1;
            why = "v(r) = 0, u(r) + m v'(r) = 0";
        }
        const int got = multiplicity_at(val.F, r);
        cert.require("multiplicity at " + r.str() + ": " + why + " gives " + std::to_string(expected),
                     got == expected, Json{{"root", r.str()}, {"m", m}, {"expected", expected}, {"got", got}});
    }
    return cert;
}

Certificate check_mthm_AB(const MthmInstance& inst) {
    auto val = validate_mthm(inst);
    if (val.f_report.roots.empty()) {
        throw NotApplicable("mthm-ab: f has no real roots");
    }
    const RootDescriptor& largest = val.f_report.roots.back();
    const RootDescriptor& smallest = val.f_report.roots.front();
    if (!largest.is_rational || !smallest.is_rational) {
        throw NotApplicable("mthm-ab: extreme roots must be rational for exact evaluation");
    }
    Certificate cert("mthm-ab");
    cert.echo_input("f", inst.f.canonical_str());
    cert.echo_input("u", inst.u.canonical_str());
    cert.echo_input("v", inst.v.canonical_str());
    cert.echo_input("F", val.F.canonical_str());

    const UniPoly vp = inst.v.derivative();
    {
        const BigRational& r = largest.value;
        const int m = largest.multiplicity;
        const bool left = is_rz(val.F, IntervalSpec::ray_le(r)).holds;
        const bool right = inst.v(r).is_zero() && (inst.u(r) + BigRational(m) * vp(r)).sign() >= 0;
        cert.require("(A) F in RZ(-inf,r] iff v(r) = 0 and u(r) + m v'(r) >= 0", left == right,
                     Json{{"r", r.str()}, {"m", m}, {"left", left}, {"right", right}});
    }
    {
        const BigRational& r = smallest.value;
        const int m = smallest.multiplicity;
        const bool left = is_rz(val.F, IntervalSpec::ray_ge(r)).holds;
        const bool right = (*val.F.degree() == *inst.f.degree()) ||
                           (inst.v(r).is_zero() && (inst.u(r) + BigRational(m) * vp(r)).sign() <= 0);
        cert.require("(B) F in RZ[r,+inf) iff deg F = deg f, or v(r) = 0 and u(r) + m v'(r) <= 0",
                     left == right, Json{{"r", r.str()}, {"m", m}, {"left", left}, {"right", right}});
    }
    return cert;
}

Certificate check_corollary(const UniPoly& f, const BigRational& a, const BigRational& b) {
    if (f.is_zero() || !f.is_standard()) {
        throw NotApplicable("corollary: f must be standard");
    }
    const IntervalSpec region = IntervalSpec::closed(BigRational(-1), BigRational(0));
    if (!is_rz(f, region).holds) {
        throw NotApplicable("corollary: f not in RZ[-1,0]");
    }
    const int m0 = multiplicity_at(f, BigRational(0));
    const int m1 = multiplicity_at(f, BigRational(-1));
    if (b + BigRational(m0) < BigRational(0) || a + BigRational(m1) < b) {
        throw NotApplicable("corollary: requires b + m0 >= 0 and a + m1 >= b");
    }
    const UniPoly x_x_plus_1 = UniPoly::from_coeffs({BigRational(0), BigRational(1), BigRational(1)});
    const UniPoly F = UniPoly::from_coeffs({b, a}) * f + x_x_plus_1 * f.derivative();
    if (F.is_zero() || !F.is_standard()) {
        throw NotApplicable("corollary: F must be standard");
    }
    Certificate cert("corollary");
    cert.echo_input("f", f.canonical_str());
    cert.echo_input("a", a.str());
    cert.echo_input("b", b.str());
    cert.echo_input("F", F.canonical_str());

    const auto in_region = is_rz(F, region);
    cert.require("F in RZ[-1,0]", in_region.holds, in_region.report.to_json());

    const auto sep = separates(f, F);
    cert.require("f separates F", sep.holds, sep.to_json());

    const int f0 = multiplicity_at(F, BigRational(0));
    const bool zero_grows = (b + BigRational(m0)).is_zero();
    cert.require(zero_grows ? "x^(m0+1) exactly divides F (b + m0 = 0)"
                            : "x^m0 exactly divides F (b + m0 > 0)",
                 f0 == (zero_grows ? m0 + 1 : m0), Json{{"m0", m0}, {"mult_F", f0}});

    const int f1 = multiplicity_at(F, BigRational(-1));
    const bool neg1_grows = (a + BigRational(m1) == b);
    cert.require(neg1_grows ? "(x+1)^(m1+1) exactly divides F (a + m1 = b)"
                            : "(x+1)^m1 exactly divides F (a + m1 > b)",
                 f1 == (neg1_grows ? m1 + 1 : m1), Json{{"m1", m1}, {"mult_F", f1}});
    return cert;
}

Certificate check_eprop(int n, const BigRational& q0) {
    if (n < 0) throw std::invalid_argument("check_eprop: n < 0");
    Certificate cert("eprop");
    cert.echo_input("n", n);
    cert.echo_input("q", q0.str());
    bool any_branch = false;

    if (q0.sign() > 0) {
        any_branch = true;
        const UniPoly a = q_eulerian_at(n, q0);
        const auto loc = is_rz(a, IntervalSpec::ray_le(BigRational(0)));
        cert.require("(a) zeros are real and nonpositive", loc.holds, loc.report.to_json());
        cert.require("(a) zeros are simple", all_simple(a), Json::object());
    }

    if (BigRational(n) + q0 <= BigRational(0)) {
        any_branch = true;
        const UniPoly next = q_eulerian_at(n + 1, q0);
        if (next.is_zero()) {
            cert.require("(b) A_{n+1}(x;q) in RZ[1,+inf) (zero polynomial, vacuous)", true,
                         Json::object());
        } else {
            const auto loc = is_rz(next, IntervalSpec::ray_ge(BigRational(1)));
            cert.require("(b) A_{n+1}(x;q) in RZ[1,+inf)", loc.holds, loc.report.to_json());
        }
    }

    if (q0.sign() < 0 && q0.is_integer()) {
        any_branch = true;
        const long t = -q0.num().get_si();
        const UniPoly a = q_eulerian_at(n, q0);
        const auto loc = is_rz(a, IntervalSpec::ray_ge(BigRational(1)));
        cert.require("(c) A_n(x;q) in RZ[1,+inf)", loc.holds, loc.report.to_json());
        const int m = n + q0 > BigRational(0) ? static_cast<int>(n + q0.num().get_si()) : 0;
        const int got = a.is_zero() ? -1 : multiplicity_at(a, BigRational(1));
        cert.require("(c) (x-1)^m exactly divides A_n(x;q) with m = max(n+q, 0)", got == m,
                     Json{{"m", m}, {"got", got}});
        cert.require("(c) matches the alternating-sum expansion",
                     a == q_eulerian_neg(n, static_cast<int>(t)), Json::object());
        if (t == 1 && n >= 1) {
            const UniPoly expected = -UniPoly::from_coeffs({BigRational(-1), BigRational(1)}).pow(n - 1);
            cert.require("(c) A_n(x;-1) = -(x-1)^(n-1)", a == expected,
                         Json{{"expected", expected.canonical_str()}});
        }
    }

    if (!any_branch) {
        cert.require("no branch applies for this (n, q)", true, Json::object());
    }
    return cert;
}

Certificate verify_q_frobenius(int n) {
    Certificate cert("q-frobenius");
    cert.echo_input("n", n);
    const BiPoly lhs = q_eulerian(n);
    const BiPoly rhs = q_frobenius(n);
    cert.require("recurrence and Frobenius-sum forms agree", lhs == rhs,
                 Json{{"recurrence", lhs.canonical_strings()}, {"sum", rhs.canonical_strings()}});
    return cert;
}

Certificate check_simion(const Multiset& m) {
    Certificate cert("simion");
    cert.echo_input("multiset", m.str());
    const UniPoly f = composition_gf(m);
    cert.echo_input("f", f.canonical_str());

    const auto loc = is_rz(f, IntervalSpec::closed(BigRational(-1), BigRational(0)));
    cert.require("f in RZ[-1,0]", loc.holds, loc.report.to_json());

    const int expect = m.max_count() - 1;
    const int got = multiplicity_at(f, BigRational(-1));
    cert.require("multiplicity of -1 equals max(n_i) - 1", got == expect,
                 Json{{"expected", expect}, {"got", got}});

    for (size_t j = 0; j <= m.counts.size(); ++j) {
        const Multiset ext = m.plus_copy(j);
        const auto sep = separates(f, composition_gf(ext));
        cert.require("f separates the extension " + ext.str(), sep.holds, sep.to_json());
    }
    return cert;
}

Certificate verify_fn_relation(int n) {
    if (n < 1) throw std::invalid_argument("verify_fn_relation: n >= 1");
    Certificate cert("fn-relation");
    cert.echo_input("n", n);
    const UniPoly fn = kfact_stirling(n);
    const UniPoly an = eulerian(n);
    // x^{n+1} A_n((x+1)/x) expanded exactly: sum a_k (x+1)^k x^{n-k}, times x.
    const UniPoly x_plus_1 = UniPoly::from_coeffs({BigRational(1), BigRational(1)});
    UniPoly subst;
    for (size_t k = 0; k < an.coeffs().size(); ++k) {
        if (an.coeffs()[k].is_zero()) continue;
        subst = subst + x_plus_1.pow(static_cast<int>(k)) *
                            UniPoly::monomial(an.coeffs()[k], n - static_cast<int>(k));
    }
    const UniPoly lhs = x_plus_1 * fn;
    const UniPoly rhs = UniPoly::x() * subst;
    cert.require("(x+1) F_n(x) = x^{n+1} A_n((x+1)/x)", lhs == rhs,
                 Json{{"lhs", lhs.canonical_str()}, {"rhs", rhs.canonical_str()}});
    return cert;
}

Certificate check_bona_wilf(int n) {
    if (n < 2) throw std::invalid_argument("check_bona_wilf: n >= 2");
    Certificate cert("bona-wilf");
    cert.echo_input("n", n);
    const UniPoly r = alt_runs(n);
    cert.echo_input("R_n", r.canonical_str());

    const auto loc = is_rz(r, IntervalSpec::closed(BigRational(-1), BigRational(0)));
    cert.require("R_n in RZ[-1,0]", loc.holds, loc.report.to_json());

    const int want_m1 = n / 2 - 1;
    const int got_m1 = multiplicity_at(r, BigRational(-1));
    cert.require("multiplicity of -1 is floor(n/2) - 1", got_m1 == want_m1,
                 Json{{"expected", want_m1}, {"got", got_m1}});

    const UniPoly cofactor =
        divide_exact(r, UniPoly::from_coeffs({BigRational(1), BigRational(1)}).pow(got_m1));
    const int want_simple = (n + 1) / 2;
    const auto co = analyze(cofactor);
    const bool simple_ok = co.only_real_zeros() && all_simple(cofactor) &&
                           static_cast<int>(co.roots.size()) == want_simple &&
                           cofactor(BigRational(0)).is_zero() &&
                           !cofactor(BigRational(-1)).is_zero();
    cert.require("cofactor has exactly ceil(n/2) simple zeros including 0", simple_ok,
                 co.to_json());

    const auto sep = separates(r, alt_runs(n + 1));
    cert.require("R_n separates R_{n+1}", sep.holds, sep.to_json());
    return cert;
}

Certificate verify_knuth_identity(int n, const BigRational& w0) {
    if (n < 1) throw std::invalid_argument("verify_knuth_identity: n >= 1");
    if (!(BigRational(0) < w0 && w0 < BigRational(1))) {
        throw InvalidW("verify_knuth_identity: w must be in (0,1)");
    }
    Certificate cert("knuth");
    cert.echo_input("n", n);
    cert.echo_input("w", w0.str());
    const BigRational w2 = w0 * w0;
    const BigRational x0 = (BigRational(1) - w2) / (BigRational(1) + w2);
    cert.echo_input("x0", x0.str());
    const BigRational lhs = alt_runs(n)(x0);
    const BigRational rhs = ((BigRational(1) + x0) * BigRational(1, 2)).pow(n - 1) *
                            (BigRational(1) + w0).pow(n + 1) *
                            eulerian(n)((BigRational(1) - w0) / (BigRational(1) + w0));
    if (n == 1) {
        // The evaluation mismatches at n = 1; record the exact defect
        // rather than asserting equality.
        cert.require("n = 1 evaluation recorded: R_1(x0) - rhs = w^2", lhs - rhs == w2,
                     Json{{"lhs", lhs.str()}, {"rhs", rhs.str()}, {"delta", (lhs - rhs).str()}});
        cert.require("identity holds at n = 1", lhs == rhs,
                     Json{{"lhs", lhs.str()}, {"rhs", rhs.str()}});
        return cert;
    }
    cert.require("R_n(x0) equals the Eulerian evaluation", lhs == rhs,
                 Json{{"lhs", lhs.str()}, {"rhs", rhs.str()}});
    return cert;
}

int InstanceGen::range(int lo, int hi) {
    return lo + static_cast<int>(pick(static_cast<std::uint64_t>(hi - lo + 1)));
}

BigRational InstanceGen::pool_pick(const std::vector<BigRational>& pool) {
    return pool[pick(pool.size())];
}

BigRational InstanceGen::random_rational() {
    static const std::vector<BigRational> pool = {
        BigRational(0),     BigRational(1),      BigRational(-1),    BigRational(2),
        BigRational(-2),    BigRational(3),      BigRational(-3),    BigRational(1, 2),
        BigRational(-1, 2), BigRational(3, 2),   BigRational(-3, 2), BigRational(1, 3),
        BigRational(-1, 3), BigRational(5, 2),   BigRational(-5, 3), BigRational(4),
    };
    return pool_pick(pool);
}

UniPoly InstanceGen::random_poly(int max_deg) {
    const int d = range(0, max_deg);
    std::vector<BigRational> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = random_rational();
    return UniPoly::from_coeffs(std::move(c));
}

MthmInstance InstanceGen::next_mthm() {
    static const std::vector<BigRational> root_pool = {
        BigRational(0),     BigRational(1),    BigRational(-1),    BigRational(2),
        BigRational(-2),    BigRational(3),    BigRational(-3),    BigRational(1, 2),
        BigRational(-1, 2), BigRational(3, 2), BigRational(-3, 2), BigRational(-5, 2),
    };
    static const std::vector<BigRational> pos_pool = {BigRational(1), BigRational(2),
                                                      BigRational(1, 2), BigRational(3)};
    for (;;) {
        const int k = range(1, 3);
        std::vector<std::pair<BigRational, int>> roots;
        int total = 0;
        while (static_cast<int>(roots.size()) < k) {
            const BigRational r = pool_pick(root_pool);
            bool dup = false;
            for (const auto& [v, m] : roots) dup = dup || v == r;
            if (dup) continue;
            const int m = range(1, 2);
            roots.emplace_back(r, m);
            total += m;
        }
        if (total > 5) continue;
        UniPoly f = UniPoly::one();
        BigRational rmin = roots.front().first;
        for (const auto& [r, m] : roots) {
            f = f * UniPoly::linear_root(r).pow(m);
            if (r < rmin) rmin = r;
        }
        int rmin_mult = 0;
        for (const auto& [r, m] : roots) {
            if (r == rmin) rmin_mult = m;
        }

        UniPoly v;
        UniPoly u;
        const int mode = range(0, 3);
        if (mode == 0) {
            v = UniPoly(-pool_pick(pos_pool));
            u = random_poly(1);
        } else if (mode == 1) {
            // -c (x - r_i)^2: vanishes to second order at one root. The
            // x^{deg f + 1} contributions of u f and v f' must cancel for
            // F to have an admissible degree, which pins the slope of u.
            const BigRational r = roots[static_cast<size_t>(range(0, k - 1))].first;
            const BigRational c = pool_pick(pos_pool);
            v = UniPoly::linear_root(r).pow(2) * -c;
            u = UniPoly::from_coeffs({random_rational(), c * BigRational(total)});
        } else if (mode == 2) {
            // -c (x - r_min): zero at the smallest root, negative at the rest.
            v = UniPoly::linear_root(rmin) * -pool_pick(pos_pool);
            u = random_poly(1);
        } else {
            // Engineered third-case instance: v(r) = 0 and u(r) + m v'(r) = 0
            // at the smallest root.
            const BigRational c = pool_pick(pos_pool);
            v = UniPoly::linear_root(rmin) * -c;
            const BigRational target = BigRational(rmin_mult) * c;  // u(rmin) must equal m c
            u = UniPoly(target) + UniPoly::linear_root(rmin) * (random_poly(0) + UniPoly::one());
        }

        // Admissibility: v <= 0 at every root, F standard of valid degree.
        bool ok = true;
        for (const auto& [r, m] : roots) ok = ok && v(r).sign() <= 0;
        if (!ok) continue;
        const MthmInstance inst{f, u, v};
        const UniPoly F = inst.big_f();
        if (F.is_zero() || !F.is_standard()) continue;
        const int dF = *F.degree();
        const int df = *f.degree();
        if (dF != df && dF != df + 1) continue;
        return inst;
    }
}

InstanceGen::CorollaryInstance InstanceGen::next_corollary() {
    static const std::vector<BigRational> inner_pool = {
        BigRational(1, 2), BigRational(1, 3), BigRational(2, 3),
        BigRational(1, 4), BigRational(3, 4), BigRational(2, 5)};
    static const std::vector<BigRational> slack_pool = {BigRational(0), BigRational(1, 2),
                                                        BigRational(1), BigRational(2)};
    for (;;) {
        const int m0 = range(0, 2);
        const int m1 = range(0, 2);
        const int inner = range(0, 3);
        if (m0 + m1 + inner == 0) continue;
        UniPoly f = UniPoly::x().pow(m0) *
                    UniPoly::from_coeffs({BigRational(1), BigRational(1)}).pow(m1);
        for (int i = 0; i < inner; ++i) {
            f = f * UniPoly::linear_root(-pool_pick(inner_pool));
        }
        const BigRational b = BigRational(-m0) + pool_pick(slack_pool);
        const BigRational a = b - BigRational(m1) + pool_pick(slack_pool);
        // Reject instances whose F degenerates (zero or nonstandard); the
        // leading coefficients of (ax+b) f and x(x+1) f' can cancel.
        const UniPoly x_x_plus_1 =
            UniPoly::from_coeffs({BigRational(0), BigRational(1), BigRational(1)});
        const UniPoly F = UniPoly::from_coeffs({b, a}) * f + x_x_plus_1 * f.derivative();
        if (F.is_zero() || !F.is_standard()) continue;
        return {f, a, b};
    }
}

InstanceGen::TPropInstance InstanceGen::next_t_prop() {
    static const std::vector<BigRational> neg_pool = {
        BigRational(1, 2), BigRational(1), BigRational(2), BigRational(3), BigRational(1, 3)};
    const int m = range(0, 2);
    const int others = range(m == 0 ? 1 : 0, 3);
    UniPoly f = UniPoly::x().pow(m);
    for (int i = 0; i < others; ++i) {
        f = f * UniPoly::linear_root(-pool_pick(neg_pool));
    }
    BigRational xi;
    const int mode = range(0, 2);
    if (mode == 0) {
        xi = BigRational(m);  // boundary: multiplicity must grow
    } else if (mode == 1) {
        xi = BigRational(m) - pool_pick(neg_pool);  // strictly below m
    } else {
        xi = BigRational(m) + pool_pick(neg_pool);  // strictly above m
    }
    return {t_inverse(f), xi};
}

InstanceGen::EPropInstance InstanceGen::next_e_prop() {
    static const std::vector<BigRational> inner_pool = {
        BigRational(1, 2), BigRational(1, 3), BigRational(2, 3), BigRational(1, 4),
        BigRational(3, 4), BigRational(2, 5)};
    static const std::vector<BigRational> alpha_pool = {
        BigRational(0),     BigRational(-1),    BigRational(-1, 2),
        BigRational(-1, 3), BigRational(-2, 3), BigRational(-1, 4)};
    for (;;) {
        const int m0 = range(0, 2);
        const int m1 = range(0, 2);
        const int inner = range(0, 2);
        if (m0 + m1 + inner == 0) continue;
        UniPoly f = UniPoly::x().pow(m0) *
                    UniPoly::from_coeffs({BigRational(1), BigRational(1)}).pow(m1);
        for (int i = 0; i < inner; ++i) {
            f = f * UniPoly::linear_root(-pool_pick(inner_pool));
        }
        return {e_inverse(f), pool_pick(alpha_pool)};
    }
}

}  // namespace rz

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

#include "rzcert/basisops.hpp"

#include <stdexcept>

#include "rzcert/errors.hpp"
#include "rzcert/realroots.hpp"
#include "rzcert/theorems.hpp"

namespace rz {

std::vector<BigRational> to_basis(const UniPoly& p, BasisKind kind) {
    switch (kind) {
        case BasisKind::standard_power:
            return p.coeffs();
        case BasisKind::falling_factorial: {
            // Newton form at nodes 0, 1, 2, ...: repeated synthetic division
            // by (x - j) peels off the (x)_j coefficient.
            std::vector<BigRational> out;
            UniPoly r = p;
            long j = 0;
            while (!r.is_zero()) {
                const BigRational node(j);
                out.push_back(r(node));
                if (r.is_constant()) break;
                r = divmod(r, UniPoly::linear_root(node)).first;
                ++j;
            }
            while (!out.empty() && out.back().is_zero()) out.pop_back();
            return out;
        }
        case BasisKind::binomial_choose: {
            // Forward differences of the values at 0, 1, ..., deg p.
            if (p.is_zero()) return {};
            const int d = *p.degree();
            std::vector<BigRational> diffs(static_cast<size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) diffs[static_cast<size_t>(i)] = p(BigRational(i));
            std::vector<BigRational> out;
            out.reserve(diffs.size());
            for (int k = 0; k <= d; ++k) {
                out.push_back(diffs[0]);
                for (size_t i = 0; i + 1 < diffs.size() - static_cast<size_t>(k); ++i) {
                    diffs[i] = diffs[i + 1] - diffs[i];
                }
            }
            while (!out.empty() && out.back().is_zero()) out.pop_back();
            return out;
        }
    }
    throw std::invalid_argument("to_basis: unknown basis");
}

UniPoly from_basis(const std::vector<BigRational>& coeffs, BasisKind kind) {
    switch (kind) {
        case BasisKind::standard_power:
            return UniPoly::from_coeffs(coeffs);
        case BasisKind::falling_factorial: {
            UniPoly acc;
            UniPoly ff = UniPoly::one();  // (x)_k
            for (size_t k = 0; k < coeffs.size(); ++k) {
                if (k > 0) ff = ff * UniPoly::linear_root(BigRational(static_cast<long>(k) - 1));
                acc = acc + ff * coeffs[k];
            }
            return acc;
        }
        case BasisKind::binomial_choose: {
            UniPoly acc;
            UniPoly ch = UniPoly::one();  // binom(x, k)
            for (size_t k = 0; k < coeffs.size(); ++k) {
                if (k > 0) {
                    ch = ch * UniPoly::linear_root(BigRational(static_cast<long>(k) - 1)) *
                         BigRational(1, static_cast<long>(k));
                }
                acc = acc + ch * coeffs[k];
            }
            return acc;
        }
    }
    throw std::invalid_argument("from_basis: unknown basis");
}

UniPoly t_transform(const UniPoly& p) {
    return UniPoly::from_coeffs(to_basis(p, BasisKind::falling_factorial));
}

UniPoly t_inverse(const UniPoly& f) {
    return from_basis(f.coeffs(), BasisKind::falling_factorial);
}

UniPoly e_transform(const UniPoly& p) {
    return UniPoly::from_coeffs(to_basis(p, BasisKind::binomial_choose));
}

UniPoly e_inverse(const UniPoly& f) {
    return from_basis(f.coeffs(), BasisKind::binomial_choose);
}

Certificate verify_t_identity(const UniPoly& p, const BigRational& xi) {
    Certificate cert("t-identity");
    cert.echo_input("p", p.canonical_str());
    cert.echo_input("xi", xi.str());
    const UniPoly f = t_transform(p);
    const UniPoly lhs = t_transform(UniPoly::linear_root(xi) * p);
    const UniPoly rhs = UniPoly::linear_root(xi) * f + UniPoly::x() * f.derivative();
    cert.require("T((x-xi)p) = (x-xi)T(p) + x T(p)'", lhs == rhs,
                 Json{{"lhs", lhs.canonical_str()}, {"rhs", rhs.canonical_str()}});
    return cert;
}

Certificate verify_e_identity(const UniPoly& p, const BigRational& alpha) {
    Certificate cert("e-identity");
    cert.echo_input("p", p.canonical_str());
    cert.echo_input("alpha", alpha.str());
    const UniPoly f = e_transform(p);
    const UniPoly x_x_plus_1 = UniPoly::from_coeffs({BigRational(0), BigRational(1), BigRational(1)});
    const UniPoly lhs = e_transform(UniPoly::linear_root(alpha) * p);
    const UniPoly rhs = UniPoly::linear_root(alpha) * f + x_x_plus_1 * f.derivative();
    cert.require("E((x-alpha)p) = (x-alpha)E(p) + x(x+1)E(p)'", lhs == rhs,
                 Json{{"lhs", lhs.canonical_str()}, {"rhs", rhs.canonical_str()}});
    return cert;
}

Certificate check_t_prop(const UniPoly& p_in, const BigRational& xi) {
    UniPoly p = p_in;
    UniPoly f = t_transform(p);
    if (f.is_zero()) throw NotApplicable("check_t_prop: T(p) is zero");
    if (f.leading().sign() < 0) {
        // All claims are sign-invariant; normalize so the general checker's
        // standardness hypothesis applies.
        p = -p;
        f = -f;
    }
    if (!is_rz(f, IntervalSpec::ray_le(BigRational(0))).holds) {
        throw NotApplicable("check_t_prop: T(p) not in RZ(-inf,0]");
    }
    Certificate cert("t-prop");
    cert.echo_input("p", p.canonical_str());
    cert.echo_input("xi", xi.str());
    const int m = multiplicity_at(f, BigRational(0));
    const UniPoly F = t_transform(UniPoly::linear_root(xi) * p);
    cert.echo_input("T(p)", f.canonical_str());
    cert.echo_input("F", F.canonical_str());

    const auto rz_whole = is_rz(F, IntervalSpec::whole_line());
    cert.require("(a) F has only real zeros", rz_whole.holds, rz_whole.report.to_json());

    const bool left = is_rz(F, IntervalSpec::ray_le(BigRational(0))).holds;
    const bool right = xi <= BigRational(m);
    cert.require("(b) F in RZ(-inf,0] iff xi <= m", left == right,
                 Json{{"F_in_region", left}, {"xi<=m", right}, {"m", m}});

    const int mF = multiplicity_at(F, BigRational(0));
    if (xi == BigRational(m)) {
        cert.require("(c) multiplicity of 0 is at least m+1 when xi = m", mF >= m + 1,
                     Json{{"m", m}, {"mult_F", mF}});
    } else {
        cert.require("(c) multiplicity of 0 stays m when xi != m", mF == m,
                     Json{{"m", m}, {"mult_F", mF}});
    }

    // Same instance through the general checker: F = (x-xi) f + x f'.
    const MthmInstance inst{f, UniPoly::linear_root(xi), UniPoly::x()};
    const Certificate general = check_mthm(inst);
    cert.require("agrees with the u f + v f' checker", general.holds(),
                 Json{{"claim", general.claim_id()}, {"holds", general.holds()}});
    return cert;
}

Certificate check_e_prop(const UniPoly& p_in, const BigRational& alpha) {
    if (alpha < BigRational(-1) || alpha > BigRational(0)) {
        throw NotApplicable("check_e_prop: alpha outside [-1,0]");
    }
    UniPoly p = p_in;
    UniPoly f = e_transform(p);
    if (f.is_zero()) throw NotApplicable("check_e_prop: E(p) is zero");
    if (f.leading().sign() < 0) {
        p = -p;
        f = -f;
    }
    const IntervalSpec region = IntervalSpec::closed(BigRational(-1), BigRational(0));
    if (!is_rz(f, region).holds) {
        throw NotApplicable("check_e_prop: E(p) not in RZ[-1,0]");
    }
    Certificate cert("e-prop-op");
    cert.echo_input("p", p.canonical_str());
    cert.echo_input("alpha", alpha.str());
    const UniPoly F = e_transform(UniPoly::linear_root(alpha) * p);
    cert.echo_input("E(p)", f.canonical_str());
    cert.echo_input("F", F.canonical_str());

    const UniPoly x_x_plus_1 = UniPoly::from_coeffs({BigRational(0), BigRational(1), BigRational(1)});
    const UniPoly composed = UniPoly::linear_root(alpha) * f + x_x_plus_1 * f.derivative();
    cert.require("F = (x-alpha)E(p) + x(x+1)E(p)'", F == composed,
                 Json{{"composed", composed.canonical_str()}});

    const auto in_region = is_rz(F, region);
    cert.require("F in RZ[-1,0]", in_region.holds, in_region.report.to_json());

    const auto sep = separates(f, F);
    cert.require("E(p) separates F", sep.holds, sep.to_json());

    if (all_simple(f)) {
        cert.require("simple zeros are preserved", all_simple(F), Json::object());
    }

    const int m0 = multiplicity_at(f, BigRational(0));
    const int m1 = multiplicity_at(f, BigRational(-1));
    const int f0 = multiplicity_at(F, BigRational(0));
    const int f1 = multiplicity_at(F, BigRational(-1));
    const bool zero_exceptional = (m0 == 0 && alpha == BigRational(0));
    const bool neg1_exceptional = (m1 == 0 && alpha == BigRational(-1));
    cert.require(zero_exceptional ? "multiplicity of 0 grows to m0+1 (m0 = alpha = 0)"
                                  : "multiplicity of 0 stays m0",
                 f0 == (zero_exceptional ? m0 + 1 : m0), Json{{"m0", m0}, {"mult_F", f0}});
    cert.require(neg1_exceptional ? "multiplicity of -1 grows to m1+1 (m1 = 0, alpha = -1)"
                                  : "multiplicity of -1 stays m1",
                 f1 == (neg1_exceptional ? m1 + 1 : m1), Json{{"m1", m1}, {"mult_F", f1}});

    // Same instance as (ax+b) f + x(x+1) f' with a = 1, b = -alpha.
    const Certificate coro = check_corollary(f, BigRational(1), -alpha);
    cert.require("agrees with the (ax+b) f + x(x+1) f' checker", coro.holds(),
                 Json{{"claim", coro.claim_id()}, {"holds", coro.holds()}});
    return cert;
}

}  // namespace rz

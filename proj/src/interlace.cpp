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

#include "rzcert/interlace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rzcert/errors.hpp"

namespace rz {

namespace {

long refinement_budget(const RootDescriptor& a, const RootDescriptor& b) {
    long bits = 64;
    for (const RootDescriptor* d : {&a, &b}) {
        if (!d->is_rational) {
            bits += 4 * (static_cast<long>(mpz_sizeinbase(cauchy_bound(d->factor).ceil().get_mpz_t(), 2)) +
                         *d->factor.degree());
        }
    }
    return bits;
}

int cmp_rational_interval(const BigRational& r, RootDescriptor& d) {
    if (r <= d.lo) return -1;
    if (r >= d.hi) return 1;
    d.exclude_point(r);  // r is never a root of d.factor
    return r <= d.lo ? -1 : 1;
}

}  // namespace

int compare_roots(RootDescriptor& a, RootDescriptor& b) {
    if (a.is_rational && b.is_rational) {
        if (a.value < b.value) return -1;
        if (a.value > b.value) return 1;
        return 0;
    }
    if (a.is_rational) return cmp_rational_interval(a.value, b);
    if (b.is_rational) return -cmp_rational_interval(b.value, a);

    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;

    // Overlapping intervals: decide equality algebraically first. Both
    // factors are squarefree, so their gcd is too; the two roots coincide
    // exactly when the gcd has a root in the overlap.
    const UniPoly h = gcd(a.factor, b.factor);
    if (*h.degree() > 0) {
        const BigRational lo = std::max(a.lo, b.lo);
        const BigRational hi = std::min(a.hi, b.hi);
        if (lo < hi && SturmChain(h).count_open(lo, hi) == 1) return 0;
    }
    const long budget = refinement_budget(a, b);
    for (long round = 0; round <= budget; ++round) {
        a.bisect();
        b.bisect();
        if (a.hi <= b.lo) return -1;
        if (b.hi <= a.lo) return 1;
    }
    throw RefinementDefect("compare_roots: refinement bound exceeded");
}

Json WitnessEntry::to_json() const {
    Json j;
    j["tag"] = tag;
    if (root.is_rational) {
        j["root"] = root.value.str();
    } else {
        j["root"] = Json::array({root.lo.str(), root.hi.str()});
    }
    j["mult"] = mult;
    return j;
}

Json SeparationVerdict::to_json() const {
    Json w = Json::array();
    for (const auto& e : witness) w.push_back(e.to_json());
    Json j;
    j["holds"] = holds;
    j["degree_ok"] = degree_ok;
    j["witness"] = w;
    j["failure_reason"] = failure_reason.empty() ? Json() : Json(failure_reason);
    return j;
}

SeparationVerdict separates(const UniPoly& f, const UniPoly& F) {
    if (f.is_zero() || F.is_zero()) {
        throw std::invalid_argument("separates: zero polynomial");
    }
    SeparationVerdict v;
    const RootReport af = analyze(f);
    const RootReport aF = analyze(F);
    const int df = *f.degree();
    const int dF = *F.degree();
    v.degree_ok = df <= dF && dF <= df + 1;
    if (!af.only_real_zeros() || !aF.only_real_zeros()) {
        v.failure_reason = "NotRealRooted";
        return v;
    }

    // Distinct roots in nonincreasing order (analyze returns ascending).
    std::vector<RootDescriptor> fr(af.roots.rbegin(), af.roots.rend());
    std::vector<RootDescriptor> Fr(aF.roots.rbegin(), aF.roots.rend());

    // Memoized comparison of F-root i against f-root j.
    std::map<std::pair<size_t, size_t>, int> memo;
    auto cmp_Ff = [&](size_t i, size_t j) {
        const auto key = std::make_pair(i, j);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        const int c = compare_roots(Fr[i], fr[j]);
        memo.emplace(key, c);
        return c;
    };

    // Expand by multiplicity into flat nonincreasing index sequences.
    std::vector<size_t> rseq, sseq;
    for (size_t j = 0; j < fr.size(); ++j) {
        for (int k = 0; k < fr[j].multiplicity; ++k) rseq.push_back(j);
    }
    for (size_t i = 0; i < Fr.size(); ++i) {
        for (int k = 0; k < Fr[i].multiplicity; ++k) sseq.push_back(i);
    }

    bool chain_ok = true;
    std::string chain_reason;
    if (v.degree_ok) {
        for (size_t i = 0; i < rseq.size() && chain_ok; ++i) {
            if (cmp_Ff(sseq[i], rseq[i]) < 0) {
                chain_ok = false;
                chain_reason = "chain violated: s_" + std::to_string(i + 1) + " < r_" + std::to_string(i + 1);
            } else if (i + 1 < sseq.size() && cmp_Ff(sseq[i + 1], rseq[i]) > 0) {
                chain_ok = false;
                chain_reason = "chain violated: r_" + std::to_string(i + 1) + " < s_" + std::to_string(i + 2);
            }
        }
    }

    // Merged witness over distinct roots, nonincreasing, with shared-root
    // multiplicities equal to the gcd multiplicities.
    size_t i = 0, j = 0;
    while (i < Fr.size() || j < fr.size()) {
        if (i == Fr.size()) {
            v.witness.push_back({"f", fr[j], fr[j].multiplicity});
            ++j;
        } else if (j == fr.size()) {
            v.witness.push_back({"F", Fr[i], Fr[i].multiplicity});
            ++i;
        } else {
            const int c = cmp_Ff(i, j);
            if (c > 0) {
                v.witness.push_back({"F", Fr[i], Fr[i].multiplicity});
                ++i;
            } else if (c < 0) {
                v.witness.push_back({"f", fr[j], fr[j].multiplicity});
                ++j;
            } else {
                const int shared = std::min(Fr[i].multiplicity, fr[j].multiplicity);
                v.witness.push_back({"shared", fr[j], shared});
                if (Fr[i].multiplicity > shared) {
                    v.witness.push_back({"F", Fr[i], Fr[i].multiplicity - shared});
                }
                if (fr[j].multiplicity > shared) {
                    v.witness.push_back({"f", fr[j], fr[j].multiplicity - shared});
                }
                ++i;
                ++j;
            }
        }
    }

    if (!v.degree_ok) {
        v.failure_reason = "DegreeCondition";
    } else if (!chain_ok) {
        v.failure_reason = chain_reason;
    }
    v.holds = v.degree_ok && chain_ok;
    return v;
}

SeparationVerdict derivative_interlaces(const UniPoly& f) {
    if (f.is_zero() || *f.degree() < 1) {
        throw std::invalid_argument("derivative_interlaces: requires deg f >= 1");
    }
    return separates(f.derivative(), f);
}

}  // namespace rz

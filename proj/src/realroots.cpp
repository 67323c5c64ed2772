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

#include "rzcert/realroots.hpp"

#include <algorithm>
#include <stdexcept>

#include "rzcert/errors.hpp"

namespace rz {

namespace {

int sign_at(const UniPoly& p, const BigRational& x) {
    return p(x).sign();
}

BigRational midpoint(const BigRational& lo, const BigRational& hi) {
    return (lo + hi) * BigRational(1, 2);
}

}  // namespace

IntervalSpec IntervalSpec::whole_line() {
    return IntervalSpec(Kind::whole_line, BigRational(0), BigRational(0));
}

IntervalSpec IntervalSpec::closed(const BigRational& a, const BigRational& b) {
    if (a > b) throw std::invalid_argument("IntervalSpec::closed: requires a <= b");
    return IntervalSpec(Kind::closed_interval, a, b);
}

IntervalSpec IntervalSpec::ray_le(const BigRational& b) {
    return IntervalSpec(Kind::ray_le, BigRational(0), b);
}

IntervalSpec IntervalSpec::ray_ge(const BigRational& a) {
    return IntervalSpec(Kind::ray_ge, a, BigRational(0));
}

bool IntervalSpec::contains(const BigRational& r) const {
    switch (kind_) {
        case Kind::whole_line: return true;
        case Kind::closed_interval: return a_ <= r && r <= b_;
        case Kind::ray_le: return r <= b_;
        case Kind::ray_ge: return r >= a_;
    }
    return false;
}

std::vector<BigRational> IntervalSpec::boundary() const {
    switch (kind_) {
        case Kind::whole_line: return {};
        case Kind::closed_interval: return {a_, b_};
        case Kind::ray_le: return {b_};
        case Kind::ray_ge: return {a_};
    }
    return {};
}

std::string IntervalSpec::str() const {
    switch (kind_) {
        case Kind::whole_line: return "(-inf,+inf)";
        case Kind::closed_interval: return "[" + a_.str() + "," + b_.str() + "]";
        case Kind::ray_le: return "(-inf," + b_.str() + "]";
        case Kind::ray_ge: return "[" + a_.str() + ",+inf)";
    }
    return "?";
}

bool ExtendedRational::before(const ExtendedRational& o) const {
    if (kind == Kind::neg_inf) return o.kind != Kind::neg_inf;
    if (kind == Kind::pos_inf) return false;
    if (o.kind == Kind::pos_inf) return true;
    if (o.kind == Kind::neg_inf) return false;
    return value < o.value;
}

SturmChain::SturmChain(const UniPoly& p) : p_(p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    if (*p.degree() >= 1) {
        const UniPoly g = gcd(p, p.derivative());
        if (*g.degree() != 0) throw NotSquarefree("SturmChain: input has repeated roots");
    }
    chain_.push_back(primitive_part(p));
    if (*p.degree() >= 1) {
        chain_.push_back(primitive_part(p.derivative()));
        while (*chain_.back().degree() > 0) {
            UniPoly rem = divmod(chain_[chain_.size() - 2], chain_.back()).second;
            // Squarefree input: the sequence reaches a nonzero constant.
            chain_.push_back(-primitive_part(rem));
        }
    }
}

int SturmChain::variations_at(const ExtendedRational& x) const {
    int last = 0;
    int count = 0;
    for (const auto& s : chain_) {
        int sg = 0;
        switch (x.kind) {
            case ExtendedRational::Kind::finite: sg = sign_at(s, x.value); break;
            case ExtendedRational::Kind::pos_inf: sg = s.leading().sign(); break;
            case ExtendedRational::Kind::neg_inf:
                sg = s.leading().sign() * ((*s.degree() % 2 == 0) ? 1 : -1);
                break;
        }
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

int SturmChain::count_half_open(const ExtendedRational& lo, const ExtendedRational& hi) const {
    if (!lo.before(hi)) throw std::invalid_argument("SturmChain: requires lo < hi");
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_open(const BigRational& lo, const BigRational& hi) const {
    int n = count_half_open(ExtendedRational::at(lo), ExtendedRational::at(hi));
    if (sign_at(p_, hi) == 0) --n;
    return n;
}

int SturmChain::count_all() const {
    return count_half_open(ExtendedRational::neg_inf(), ExtendedRational::pos_inf());
}

int sturm_count(const UniPoly& p, const ExtendedRational& lo, const ExtendedRational& hi) {
    return SturmChain(p).count_half_open(lo, hi);
}

BigRational cauchy_bound(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
    BigRational m(0);
    const BigRational lead = p.leading().abs();
    for (size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        const BigRational v = p.coeffs()[i].abs() / lead;
        if (v > m) m = v;
    }
    return m + BigRational(2);
}

RootDescriptor RootDescriptor::rational(BigRational v, int mult) {
    RootDescriptor d;
    d.is_rational = true;
    d.value = std::move(v);
    d.multiplicity = mult;
    return d;
}

RootDescriptor RootDescriptor::interval(BigRational lo, BigRational hi, UniPoly factor, int mult) {
    RootDescriptor d;
    d.is_rational = false;
    d.lo = std::move(lo);
    d.hi = std::move(hi);
    d.factor = std::move(factor);
    d.multiplicity = mult;
    return d;
}

void RootDescriptor::bisect() {
    if (is_rational) return;
    const BigRational mid = midpoint(lo, hi);
    // The factor has no rational roots, so the sign at mid is nonzero.
    if (sign_at(factor, lo) * sign_at(factor, mid) < 0) {
        hi = mid;
    } else {
        lo = mid;
    }
}

void RootDescriptor::exclude_point(const BigRational& pt) {
    if (is_rational) return;
    if (pt <= lo || pt >= hi) return;
    if (sign_at(factor, lo) * sign_at(factor, pt) < 0) {
        hi = pt;
    } else {
        lo = pt;
    }
}

Json RootDescriptor::to_json() const {
    if (is_rational) return Json::array({value.str(), multiplicity});
    return Json::array({lo.str(), hi.str(), multiplicity});
}

int RootReport::real_count() const {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

std::vector<std::pair<BigRational, int>> RootReport::rational_roots() const {
    std::vector<std::pair<BigRational, int>> out;
    for (const auto& r : roots) {
        if (r.is_rational) out.emplace_back(r.value, r.multiplicity);
    }
    return out;
}

Json RootReport::to_json() const {
    Json rational = Json::array();
    Json intervals = Json::array();
    for (const auto& r : roots) {
        if (r.is_rational) {
            rational.push_back(r.to_json());
        } else {
            intervals.push_back(r.to_json());
        }
    }
    return Json{{"degree", degree},
                {"rational", rational},
                {"intervals", intervals},
                {"nonreal", nonreal_count}};
}

namespace {

// All real roots of one squarefree monic factor, each tagged with the
// factor's multiplicity in the original polynomial. Rational roots are
// extracted exactly; the rest are isolated and certified irrational.
void extract_and_isolate(const UniPoly& factor, int mult, std::vector<RootDescriptor>& out) {
    UniPoly g = factor;
    // Designated points first: the families under study make exact claims
    // at 0 and +-1.
    for (const long pt : {0L, -1L, 1L}) {
        const BigRational r(pt);
        if (!g.is_constant() && g(r).is_zero()) {
            out.push_back(RootDescriptor::rational(r, mult));
            g = deflate(g, r);
        }
    }
    std::vector<RootDescriptor> pending;
    bool again = true;
    while (again) {
        again = false;
        pending.clear();
        if (g.is_constant()) break;
        const SturmChain chain(g);
        const BigRational bound = cauchy_bound(g);
        const ExtendedRational lo_e = ExtendedRational::at(-bound);
        const ExtendedRational hi_e = ExtendedRational::at(bound);
        const int total = chain.count_half_open(lo_e, hi_e);
        if (total == 0) break;

        // Phase 1: split (-B, B) into cells holding exactly one root each.
        std::vector<std::pair<BigRational, BigRational>> cells;
        std::vector<std::tuple<BigRational, BigRational, int>> stack;
        stack.emplace_back(-bound, bound, total);
        while (!stack.empty() && !again) {
            auto [lo, hi, c] = stack.back();
            stack.pop_back();
            if (c == 1) {
                cells.emplace_back(lo, hi);
                continue;
            }
            const BigRational mid = midpoint(lo, hi);
            if (g(mid).is_zero()) {
                out.push_back(RootDescriptor::rational(mid, mult));
                g = deflate(g, mid);
                again = true;
                break;
            }
            const int cl = chain.count_half_open(ExtendedRational::at(lo), ExtendedRational::at(mid));
            const int ch = c - cl;
            if (cl > 0) stack.emplace_back(lo, mid, cl);
            if (ch > 0) stack.emplace_back(mid, hi, ch);
        }
        if (again) continue;

        // Phase 2: per cell, either pin the root to an exact rational or
        // certify it irrational. Any rational root a/b of the primitive
        // integer form has b dividing the leading coefficient, so once the
        // smallest-denominator rational in the cell is not a root and
        // either exceeds that bound or the cell is narrower than 1/B^2,
        // no rational root can remain inside.
        const BigInt den_bound = abs(primitive_part(g).leading().num());  // integer
        const BigRational width_limit = BigRational(BigInt(1), den_bound * den_bound);
        for (auto& [lo, hi] : cells) {
            while (true) {
                const BigRational s = simplest_in(lo, hi);
                if (g(s).is_zero()) {
                    out.push_back(RootDescriptor::rational(s, mult));
                    g = deflate(g, s);
                    again = true;
                    break;
                }
                if (s.den() > den_bound || hi - lo < width_limit) {
                    pending.push_back(RootDescriptor::interval(lo, hi, UniPoly(), mult));
                    break;
                }
                const BigRational mid = midpoint(lo, hi);
                if (g(mid).is_zero()) {
                    out.push_back(RootDescriptor::rational(mid, mult));
                    g = deflate(g, mid);
                    again = true;
                    break;
                }
                if (sign_at(g, lo) * sign_at(g, mid) < 0) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            if (again) break;
        }
        if (!again) {
            // g is now certified free of rational roots; attach it.
            for (auto& d : pending) {
                d.factor = g;
                out.push_back(std::move(d));
            }
        }
    }
}

// Bisect overlapping isolating intervals (necessarily from coprime factors)
// until pairwise disjoint.
void make_disjoint(std::vector<RootDescriptor>& roots) {
    long budget = 64;
    for (const auto& d : roots) {
        if (!d.is_rational) {
            budget += 4 * (static_cast<long>(mpz_sizeinbase(cauchy_bound(d.factor).ceil().get_mpz_t(), 2)) +
                           *d.factor.degree());
        }
    }
    for (long round = 0;; ++round) {
        bool overlap = false;
        for (size_t i = 0; i < roots.size(); ++i) {
            if (roots[i].is_rational) continue;
            for (size_t j = i + 1; j < roots.size(); ++j) {
                if (roots[j].is_rational) continue;
                RootDescriptor& a = roots[i];
                RootDescriptor& b = roots[j];
                if (a.lo < b.hi && b.lo < a.hi) {
                    a.bisect();
                    b.bisect();
                    overlap = true;
                }
            }
        }
        if (!overlap) return;
        if (round > budget) {
            throw RefinementDefect("make_disjoint: refinement bound exceeded");
        }
    }
}

bool descriptor_less(const RootDescriptor& a, const RootDescriptor& b) {
    // Valid once intervals are pairwise disjoint and exclude all listed
    // rational roots.
    if (a.is_rational && b.is_rational) return a.value < b.value;
    if (a.is_rational) return a.value <= b.lo;
    if (b.is_rational) return a.hi <= b.value;
    return a.hi <= b.lo;
}

}  // namespace

RootReport analyze(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("analyze: zero polynomial");
    RootReport rep;
    rep.degree = *p.degree();
    if (rep.degree == 0) return rep;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        extract_and_isolate(factor, mult, rep.roots);
    }
    // No isolating interval may contain a listed rational root.
    for (auto& d : rep.roots) {
        if (d.is_rational) continue;
        for (const auto& r : rep.roots) {
            if (r.is_rational) d.exclude_point(r.value);
        }
    }
    make_disjoint(rep.roots);
    std::sort(rep.roots.begin(), rep.roots.end(), descriptor_less);
    rep.nonreal_count = rep.degree - rep.real_count();
    return rep;
}

RzResult is_rz(const UniPoly& p, const IntervalSpec& region) {
    RzResult res;
    res.report = analyze(p);
    bool ok = res.report.only_real_zeros();
    if (ok) {
        const auto bounds = region.boundary();
        for (auto& d : res.report.roots) {
            if (d.is_rational) {
                if (!region.contains(d.value)) {
                    ok = false;
                    break;
                }
                continue;
            }
            // Region endpoints are rational and interval roots are not, so
            // one split per endpoint puts the interval strictly on one side.
            for (const auto& b : bounds) d.exclude_point(b);
            bool inside = true;
            switch (region.kind()) {
                case IntervalSpec::Kind::whole_line: break;
                case IntervalSpec::Kind::ray_le: inside = d.hi <= region.upper(); break;
                case IntervalSpec::Kind::ray_ge: inside = d.lo >= region.lower(); break;
                case IntervalSpec::Kind::closed_interval:
                    inside = d.lo >= region.lower() && d.hi <= region.upper();
                    break;
            }
            if (!inside) {
                ok = false;
                break;
            }
        }
    }
    res.holds = ok;
    return res;
}

bool all_simple(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("all_simple: zero polynomial");
    if (p.is_constant()) return true;
    return *gcd(p, p.derivative()).degree() == 0;
}

}  // namespace rz

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

#include "rzcert/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rzcert/errors.hpp"

namespace rz {

namespace {

constexpr int kPermutationCap = 9;
constexpr int kCompositionCap = 10;

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("family index must be nonnegative");
}

std::vector<std::vector<BigInt>> stirling2_table(int n) {
    std::vector<std::vector<BigInt>> s(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        s[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, BigInt(0));
    }
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= i; ++k) {
            s[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                BigInt(k) * (k <= i - 1 ? s[static_cast<size_t>(i - 1)][static_cast<size_t>(k)] : BigInt(0)) +
                s[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)];
        }
    }
    return s;
}

BigInt factorial(int k) {
    BigInt f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

BigInt binomial_int(int t, int k) {
    if (k < 0 || k > t) return BigInt(0);
    BigInt b(1);
    for (int i = 0; i < k; ++i) {
        b *= t - i;
        b /= i + 1;
    }
    return b;
}

int count_cycles(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(perm[j] - 1);
        }
    }
    return cycles;
}

int count_excedances(const std::vector<int>& perm) {
    int e = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] > static_cast<int>(i) + 1) ++e;
    }
    return e;
}

int count_alternating_runs(const std::vector<int>& perm) {
    const size_t n = perm.size();
    if (n <= 1) return 0;
    int changes = 0;
    for (size_t i = 1; i + 1 < n; ++i) {
        if ((perm[i - 1] < perm[i] && perm[i] > perm[i + 1]) ||
            (perm[i - 1] > perm[i] && perm[i] < perm[i + 1])) {
            ++changes;
        }
    }
    return changes + 1;
}

}  // namespace

Multiset::Multiset(std::vector<int> c) : counts(std::move(c)) {
    for (int v : counts) {
        if (v < 1) throw std::invalid_argument("Multiset: counts must be >= 1");
    }
}

Multiset Multiset::parse(std::string_view text) {
    std::vector<int> c;
    std::string cur;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (cur.empty()) throw std::invalid_argument("Multiset::parse: empty entry");
            c.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += text[i];
        }
    }
    return Multiset(std::move(c));
}

int Multiset::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

int Multiset::max_count() const {
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

Multiset Multiset::plus_copy(size_t j) const {
    std::vector<int> c = counts;
    if (j < c.size()) {
        ++c[j];
    } else if (j == c.size()) {
        c.push_back(1);
    } else {
        throw std::invalid_argument("Multiset::plus_copy: type index out of range");
    }
    return Multiset(std::move(c));
}

std::string Multiset::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) os << ",";
        os << counts[i];
    }
    return os.str();
}

UniPoly eulerian(int n) {
    check_n(n);
    UniPoly a = UniPoly::one();
    const UniPoly x = UniPoly::x();
    const UniPoly x_one_minus_x = UniPoly::from_coeffs({BigRational(0), BigRational(1), BigRational(-1)});
    for (int m = 0; m < n; ++m) {
        a = x * BigRational(m + 1) * a + x_one_minus_x * a.derivative();
    }
    return a;
}

BiPoly q_eulerian(int n) {
    check_n(n);
    BiPoly a = BiPoly::one();
    const BiPoly x_one_minus_x = BiPoly::from_coeffs({UniPoly(), UniPoly::one(), -UniPoly::one()});
    for (int m = 0; m < n; ++m) {
        // (m x + q)
        const BiPoly mul = BiPoly::from_coeffs({UniPoly::x(), UniPoly(BigRational(m))});
        a = mul * a + x_one_minus_x * a.derivative_x();
    }
    return a;
}

UniPoly q_eulerian_at(int n, const BigRational& q0) {
    return q_eulerian(n).specialize(q0);
}

BiPoly q_eulerian_oracle(int n) {
    check_n(n);
    if (n > kPermutationCap) throw TooLarge("q_eulerian_oracle: n > 9");
    if (n == 0) return BiPoly::one();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    // monomial counts indexed by [excedances][cycles]
    std::vector<std::vector<BigInt>> counts(static_cast<size_t>(n),
                                            std::vector<BigInt>(static_cast<size_t>(n) + 1, BigInt(0)));
    do {
        const int e = count_excedances(perm);
        const int c = count_cycles(perm);
        counts[static_cast<size_t>(e)][static_cast<size_t>(c)] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<UniPoly> xcoeffs(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e) {
        std::vector<BigRational> qc(static_cast<size_t>(n) + 1, BigRational(0));
        for (int c = 0; c <= n; ++c) qc[static_cast<size_t>(c)] = BigRational(counts[static_cast<size_t>(e)][static_cast<size_t>(c)]);
        xcoeffs[static_cast<size_t>(e)] = UniPoly::from_coeffs(std::move(qc));
    }
    return BiPoly::from_coeffs(std::move(xcoeffs));
}

UniPoly e_poly(int n, const BigRational& q0) {
    check_n(n);
    UniPoly e = UniPoly::one();
    const UniPoly one_plus_x = UniPoly::from_coeffs({BigRational(1), BigRational(1)});
    const UniPoly x_one_plus_x = UniPoly::from_coeffs({BigRational(0), BigRational(1), BigRational(1)});
    for (int m = 0; m < n; ++m) {
        e = one_plus_x * q0 * e + x_one_plus_x * e.derivative();
    }
    return e;
}

UniPoly bell(int n) {
    check_n(n);
    UniPoly b = UniPoly::one();
    const UniPoly x = UniPoly::x();
    for (int m = 0; m < n; ++m) {
        b = x * b + x * b.derivative();
    }
    return b;
}

BigRational stirling2(int n, int k) {
    check_n(n);
    if (k < 0 || k > n) throw std::invalid_argument("stirling2: requires 0 <= k <= n");
    return BigRational(stirling2_table(n)[static_cast<size_t>(n)][static_cast<size_t>(k)]);
}

UniPoly alt_runs(int n) {
    if (n < 1) throw std::invalid_argument("alt_runs: requires n >= 1");
    if (n == 1) return UniPoly::one();
    UniPoly r = UniPoly::monomial(BigRational(2), 1);  // R_2
    const UniPoly x = UniPoly::x();
    const UniPoly x_one_minus_x2 =
        UniPoly::from_coeffs({BigRational(0), BigRational(1), BigRational(0), BigRational(-1)});
    for (int m = 3; m <= n; ++m) {
        // R_m from R_{m-1} with recurrence index m-2.
        const UniPoly mul = UniPoly::from_coeffs({BigRational(0), BigRational(2), BigRational(m - 2)});
        r = mul * r + x_one_minus_x2 * r.derivative();
    }
    return r;
}

BigInt alt_runs_triangle(int n, int k) {
    if (n < 1) throw std::invalid_argument("alt_runs_triangle: requires n >= 1");
    if (k < 0) return BigInt(0);
    std::vector<std::vector<BigInt>> r(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        r[static_cast<size_t>(i)].assign(static_cast<size_t>(std::max(i, 1)), BigInt(0));
    }
    auto at = [&](int i, int j) -> BigInt {
        if (j < 0 || j >= static_cast<int>(r[static_cast<size_t>(i)].size())) return BigInt(0);
        return r[static_cast<size_t>(i)][static_cast<size_t>(j)];
    };
    r[1][0] = 1;
    for (int i = 2; i <= n; ++i) {
        for (int j = 1; j <= i - 1; ++j) {
            r[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                BigInt(j) * at(i - 1, j) + BigInt(2) * at(i - 1, j - 1) + BigInt(i - j) * at(i - 1, j - 2);
        }
    }
    if (k >= static_cast<int>(r[static_cast<size_t>(n)].size())) return BigInt(0);
    return r[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

UniPoly alt_runs_oracle(int n) {
    if (n < 1) throw std::invalid_argument("alt_runs_oracle: requires n >= 1");
    if (n > kPermutationCap) throw TooLarge("alt_runs_oracle: n > 9");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<BigInt> counts(static_cast<size_t>(n), BigInt(0));
    do {
        counts[static_cast<size_t>(count_alternating_runs(perm))] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<BigRational> c(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) c[i] = BigRational(counts[i]);
    return UniPoly::from_coeffs(std::move(c));
}

UniPoly composition_gf(const Multiset& m) {
    UniPoly f = UniPoly::one();
    const UniPoly x_x_plus_1 = UniPoly::from_coeffs({BigRational(0), BigRational(1), BigRational(1)});
    // Canonical build order: types in index order, copies one at a time.
    for (int count : m.counts) {
        for (int have = 0; have < count; ++have) {
            const UniPoly lhs = UniPoly::from_coeffs({BigRational(have), BigRational(1)}) * f +
                                x_x_plus_1 * f.derivative();
            f = lhs * BigRational(1, have + 1);  // division is exact over Q
        }
    }
    return f;
}

namespace {

UniPoly composition_count(std::vector<int> remaining, std::map<std::vector<int>, UniPoly>& memo) {
    if (std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; })) {
        return UniPoly::one();
    }
    auto it = memo.find(remaining);
    if (it != memo.end()) return it->second;
    UniPoly acc;
    // Enumerate every nonempty sub-multiset as the first part.
    std::vector<int> part(remaining.size(), 0);
    while (true) {
        size_t pos = 0;
        while (pos < part.size() && part[pos] == remaining[pos]) {
            part[pos] = 0;
            ++pos;
        }
        if (pos == part.size()) break;
        ++part[pos];
        std::vector<int> rest(remaining.size());
        for (size_t i = 0; i < remaining.size(); ++i) rest[i] = remaining[i] - part[i];
        acc = acc + composition_count(std::move(rest), memo);
    }
    acc = acc * UniPoly::x();  // one more part
    memo.emplace(std::move(remaining), acc);
    return acc;
}

}  // namespace

UniPoly composition_oracle(const Multiset& m) {
    if (m.total() > kCompositionCap) throw TooLarge("composition_oracle: total > 10");
    std::map<std::vector<int>, UniPoly> memo;
    return composition_count(m.counts, memo);
}

UniPoly kfact_stirling(int n) {
    if (n < 1) throw std::invalid_argument("kfact_stirling: requires n >= 1");
    const auto s = stirling2_table(n);
    std::vector<BigRational> c(static_cast<size_t>(n) + 1, BigRational(0));
    for (int k = 1; k <= n; ++k) {
        c[static_cast<size_t>(k)] = BigRational(factorial(k) * s[static_cast<size_t>(n)][static_cast<size_t>(k)]);
    }
    return UniPoly::from_coeffs(std::move(c));
}

BiPoly q_frobenius(int n) {
    check_n(n);
    const auto s = stirling2_table(n);
    const UniPoly x_minus_1 = UniPoly::from_coeffs({BigRational(-1), BigRational(1)});
    BiPoly acc;
    UniPoly rising = UniPoly::one();  // q(q+1)...(q+k-1)
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            rising = rising * UniPoly::from_coeffs({BigRational(k - 1), BigRational(1)});
        }
        const BigInt sk = s[static_cast<size_t>(n)][static_cast<size_t>(k)];
        if (sgn(sk) == 0) continue;
        const BiPoly term = BiPoly::from_x_poly(x_minus_1.pow(n - k)).scale_q(rising * BigRational(sk));
        acc = acc + term;
    }
    return acc;
}

UniPoly q_eulerian_neg(int n, int t) {
    check_n(n);
    if (t < 1) throw std::invalid_argument("q_eulerian_neg: requires t >= 1");
    const auto s = stirling2_table(n);
    const UniPoly x_minus_1 = UniPoly::from_coeffs({BigRational(-1), BigRational(1)});
    UniPoly acc;
    for (int k = 0; k <= n; ++k) {
        const BigInt coeff = binomial_int(t, k) * factorial(k) * s[static_cast<size_t>(n)][static_cast<size_t>(k)];
        if (sgn(coeff) == 0) continue;
        const BigRational c = (k % 2 == 0) ? BigRational(coeff) : BigRational(-coeff);
        acc = acc + x_minus_1.pow(n - k) * c;
    }
    return acc;
}

UniPoly eulerian_frobenius(int n) {
    check_n(n);
    const auto s = stirling2_table(n);
    const UniPoly x_minus_1 = UniPoly::from_coeffs({BigRational(-1), BigRational(1)});
    UniPoly acc;
    for (int k = 0; k <= n; ++k) {
        const BigInt coeff = factorial(k) * s[static_cast<size_t>(n)][static_cast<size_t>(k)];
        if (sgn(coeff) == 0) continue;
        acc = acc + x_minus_1.pow(n - k) * BigRational(coeff);
    }
    return UniPoly::x() * acc;
}

namespace {

void multisets_rec(int remaining, int min_part, std::vector<int>& cur, std::vector<Multiset>& out) {
    if (remaining == 0) {
        out.push_back(Multiset(cur));
        return;
    }
    for (int part = min_part; part <= remaining; ++part) {
        cur.push_back(part);
        multisets_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Multiset> multisets_of_total(int total) {
    std::vector<Multiset> out;
    if (total < 1) return out;
    std::vector<int> cur;
    multisets_rec(total, 1, cur, out);
    return out;
}

}  // namespace rz

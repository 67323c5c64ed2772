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

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rzcert/basisops.hpp"
#include "rzcert/errors.hpp"
#include "rzcert/families.hpp"
#include "rzcert/theorems.hpp"

namespace {

using namespace rz;

constexpr std::uint64_t kDefaultSeed = 20260809ULL;

struct Options {
    std::string family;
    int n = 0;
    bool n_set = false;
    std::string q, t, w, xi, alpha, a, b, multiset;
    std::uint64_t seed = kDefaultSeed;
    int count = 1;
    bool count_set = false;
    std::string format = "pretty";
    std::string out;
    std::string write_baseline, check_baseline;
};

void emit(const Options& opt, const std::string& text) {
    std::cout << text;
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
        f << text;
    }
}

std::string tsv_row(const UniPoly& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << "\t";
        os << p.coeffs()[i].str();
    }
    return os.str();
}

std::string render_poly(const Options& opt, Json meta, const UniPoly& p) {
    if (opt.format == "json") {
        meta["poly"] = p.canonical_str();
        return meta.dump(2) + "\n";
    }
    if (opt.format == "tsv") return tsv_row(p) + "\n";
    return p.canonical_str() + "\n";
}

int run_gen(const Options& opt) {
    if (!opt.n_set && opt.family != "composition") {
        throw std::invalid_argument("gen: --n is required");
    }
    Json meta;
    meta["family"] = opt.family;
    if (opt.family == "composition") {
        const Multiset m = Multiset::parse(opt.multiset);
        meta["multiset"] = m.str();
        emit(opt, render_poly(opt, meta, composition_gf(m)));
        return 0;
    }
    meta["n"] = opt.n;

    if (opt.family == "q-eulerian") {
        const BiPoly p = q_eulerian(opt.n);
        Json arr = Json::array();
        for (const auto& s : p.canonical_strings()) arr.push_back(s);
        if (opt.format == "json") {
            meta["bipoly"] = arr;
            emit(opt, meta.dump(2) + "\n");
        } else if (opt.format == "tsv") {
            // coefficient table: row m holds the q-polynomials of A_m(x;q)
            std::ostringstream os;
            for (int m = 0; m <= opt.n; ++m) {
                const auto strings = q_eulerian(m).canonical_strings();
                for (size_t i = 0; i < strings.size(); ++i) {
                    if (i) os << "\t";
                    os << strings[i];
                }
                os << "\n";
            }
            emit(opt, os.str());
        } else {
            emit(opt, arr.dump() + "\n");
        }
        return 0;
    }

    int min_index = 0;
    std::function<UniPoly(int)> make;
    if (opt.family == "eulerian") {
        make = [](int m) { return eulerian(m); };
    } else if (opt.family == "q-eulerian-at") {
        const BigRational q0 = BigRational::parse(opt.q);
        meta["q"] = q0.str();
        make = [q0](int m) { return q_eulerian_at(m, q0); };
    } else if (opt.family == "e-poly") {
        const BigRational q0 = BigRational::parse(opt.q);
        meta["q"] = q0.str();
        make = [q0](int m) { return e_poly(m, q0); };
    } else if (opt.family == "bell") {
        make = [](int m) { return bell(m); };
    } else if (opt.family == "alt-runs") {
        min_index = 1;
        make = [](int m) { return alt_runs(m); };
    } else if (opt.family == "kfact-stirling") {
        min_index = 1;
        make = [](int m) { return kfact_stirling(m); };
    } else {
        throw std::invalid_argument("gen: unknown family '" + opt.family + "'");
    }
    if (opt.format == "tsv") {
        // coefficient triangle: rows m = min..n, columns k
        std::ostringstream os;
        for (int m = min_index; m <= opt.n; ++m) os << tsv_row(make(m)) << "\n";
        emit(opt, os.str());
        return 0;
    }
    emit(opt, render_poly(opt, meta, make(opt.n)));
    return 0;
}

std::string render_certificate(const Options& opt, const Certificate& cert) {
    if (opt.format == "json") return cert.to_json().dump(2) + "\n";
    if (opt.format == "tsv") {
        std::ostringstream os;
        for (const auto& s : cert.assertions()) {
            os << s.description << "\t" << (s.pass ? "pass" : "fail") << "\n";
        }
        return os.str();
    }
    return cert.pretty();
}

// Claims whose instances come from the seeded generator.
Certificate run_generated_claim(const std::string& claim, const Options& opt) {
    InstanceGen gen(opt.seed);
    auto one = [&](int idx) -> Certificate {
        if (claim == "mthm") return check_mthm(gen.next_mthm());
        if (claim == "mthm-ab") return check_mthm_AB(gen.next_mthm());
        if (claim == "corollary") {
            auto inst = gen.next_corollary();
            const BigRational a = opt.a.empty() ? inst.a : BigRational::parse(opt.a);
            const BigRational b = opt.b.empty() ? inst.b : BigRational::parse(opt.b);
            return check_corollary(inst.f, a, b);
        }
        if (claim == "t-prop") {
            auto inst = gen.next_t_prop();
            const BigRational xi = opt.xi.empty() ? inst.xi : BigRational::parse(opt.xi);
            return check_t_prop(inst.p, xi);
        }
        if (claim == "e-prop-op") {
            auto inst = gen.next_e_prop();
            const BigRational alpha = opt.alpha.empty() ? inst.alpha : BigRational::parse(opt.alpha);
            return check_e_prop(inst.p, alpha);
        }
        throw std::invalid_argument("unknown generated claim " + claim + " #" + std::to_string(idx));
    };
    if (opt.count <= 1) return one(0);
    Certificate agg(claim + "-suite");
    agg.echo_input("seed", opt.seed);
    agg.echo_input("count", opt.count);
    for (int i = 0; i < opt.count; ++i) {
        const Certificate c = one(i);
        agg.require("instance " + std::to_string(i) + " holds", c.holds(),
                    c.holds() ? Json(c.to_json()["inputs"]) : c.to_json());
    }
    return agg;
}

int run_check(const std::string& claim, const Options& opt) {
    Certificate cert("unset");
    if (claim == "eprop") {
        cert = check_eprop(opt.n, BigRational::parse(opt.q));
    } else if (claim == "q-frobenius") {
        cert = verify_q_frobenius(opt.n);
    } else if (claim == "simion") {
        cert = check_simion(Multiset::parse(opt.multiset));
    } else if (claim == "fn-relation") {
        cert = verify_fn_relation(opt.n);
    } else if (claim == "bona-wilf") {
        cert = check_bona_wilf(opt.n);
    } else if (claim == "knuth") {
        cert = verify_knuth_identity(opt.n, BigRational::parse(opt.w));
    } else if (claim == "mthm" || claim == "mthm-ab" || claim == "corollary" ||
               claim == "t-prop" || claim == "e-prop-op") {
        cert = run_generated_claim(claim, opt);
    } else {
        throw std::invalid_argument("check: unknown claim '" + claim + "'");
    }
    emit(opt, render_certificate(opt, cert));
    return cert.holds() ? 0 : 1;
}

struct SuiteLine {
    std::string key;
    bool pass = false;
    std::string digest;
};

void add_cert(std::vector<SuiteLine>& lines, const std::string& key, const Certificate& c) {
    lines.push_back({key, c.holds(), c.digest()});
}

void add_flag(std::vector<SuiteLine>& lines, const std::string& key, bool pass) {
    Certificate c(key);
    c.require(key, pass);
    lines.push_back({key, pass, c.digest()});
}

void suite_identities(std::uint64_t seed, std::vector<SuiteLine>& lines) {
    for (int n = 0; n <= 12; ++n) {
        add_cert(lines, "q-frobenius n=" + std::to_string(n), verify_q_frobenius(n));
    }
    for (int n = 1; n <= 15; ++n) {
        add_flag(lines, "classical-frobenius n=" + std::to_string(n),
                 eulerian(n) == eulerian_frobenius(n));
    }
    for (int n = 1; n <= 12; ++n) {
        add_cert(lines, "fn-relation n=" + std::to_string(n), verify_fn_relation(n));
    }
    InstanceGen gen(seed);
    bool t_ok = true, e_ok = true;
    for (int i = 0; i < 100; ++i) {
        t_ok = t_ok && verify_t_identity(gen.random_poly(12), gen.random_rational()).holds();
        e_ok = e_ok && verify_e_identity(gen.random_poly(12), gen.random_rational()).holds();
    }
    add_flag(lines, "t-operator identity x100", t_ok);
    add_flag(lines, "e-operator identity x100", e_ok);
}

void suite_families(std::vector<SuiteLine>& lines) {
    for (int n = 0; n <= 8; ++n) {
        add_flag(lines, "q-eulerian oracle n=" + std::to_string(n),
                 q_eulerian(n) == q_eulerian_oracle(n));
    }
    for (int n = 1; n <= 8; ++n) {
        add_flag(lines, "alt-runs oracle n=" + std::to_string(n),
                 alt_runs(n) == alt_runs_oracle(n));
    }
    {
        bool ok = true;
        for (int total = 1; total <= 8; ++total) {
            for (const auto& m : multisets_of_total(total)) {
                ok = ok && composition_gf(m) == composition_oracle(m);
            }
        }
        add_flag(lines, "composition oracle, all multisets of size <= 8", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 20; ++n) {
            const UniPoly r = alt_runs(n);
            for (int k = 0; k <= n; ++k) {
                ok = ok && r.coeff(k) == BigRational(alt_runs_triangle(n, k));
            }
        }
        add_flag(lines, "alt-runs triangle consistency n<=20", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 20; ++n) {
            ok = ok && UniPoly::x() * q_eulerian_at(n, BigRational(1)) == eulerian(n);
        }
        add_flag(lines, "x A_n(x;1) = A_n(x) for n<=20", ok);
    }
    {
        bool ok = true;
        const std::vector<BigRational> qs = {BigRational(-3),    BigRational(-1), BigRational(-1, 2),
                                             BigRational(1, 2),  BigRational(1),  BigRational(5)};
        for (int n = 0; n <= 15; ++n) {
            for (const auto& q0 : qs) {
                ok = ok && e_poly(n, q0) == binomial_substitute(q_eulerian_at(n, q0), n);
            }
        }
        add_flag(lines, "e-poly matches the binomial substitution", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 10; ++n) {
            std::vector<int> ones(static_cast<size_t>(n), 1);
            ok = ok && composition_gf(Multiset(ones)) == kfact_stirling(n);
        }
        add_flag(lines, "composition_gf(1^n) = sum k! S(n,k) x^k", ok);
    }
    {
        bool ok = true;
        for (int total = 1; total <= 8; ++total) {
            for (const auto& m : multisets_of_total(total)) {
                std::vector<int> rev(m.counts.rbegin(), m.counts.rend());
                ok = ok && composition_gf(m) == composition_gf(Multiset(rev));
            }
        }
        add_flag(lines, "composition_gf is build-order invariant", ok);
    }
}

void suite_mthm_random(std::uint64_t seed, int count, std::vector<SuiteLine>& lines) {
    InstanceGen gen(seed);
    Certificate agg("mthm-random");
    Certificate agg_ab("mthm-random-ab");
    agg.echo_input("seed", seed);
    agg.echo_input("count", count);
    agg_ab.echo_input("seed", seed);
    agg_ab.echo_input("count", count);
    for (int i = 0; i < count; ++i) {
        const MthmInstance inst = gen.next_mthm();
        agg.require("instance " + std::to_string(i), check_mthm(inst).holds(), inst.to_json());
        agg_ab.require("instance " + std::to_string(i), check_mthm_AB(inst).holds(),
                       inst.to_json());
    }
    add_cert(lines, "mthm conclusions on " + std::to_string(count) + " seeded instances", agg);
    add_cert(lines,
             "mthm (A)/(B) biconditionals on " + std::to_string(count) + " seeded instances",
             agg_ab);
}

void suite_props(std::uint64_t seed, std::vector<SuiteLine>& lines) {
    {
        bool ok = true;
        for (const auto& q0 : {BigRational(1, 3), BigRational(1), BigRational(7, 2)}) {
            for (int n = 2; n <= 12; ++n) ok = ok && check_eprop(n, q0).holds();
        }
        add_flag(lines, "eprop (a) positive q", ok);
    }
    {
        bool ok = true;
        for (int n = 0; n <= 10; ++n) {
            ok = ok && check_eprop(n, BigRational(-n)).holds();
            ok = ok && check_eprop(n, BigRational(-n - 3)).holds();
        }
        add_flag(lines, "eprop (b) n+q <= 0", ok);
    }
    {
        bool ok = true;
        for (int t = 1; t <= 5; ++t) {
            for (int n = 0; n <= 12; ++n) ok = ok && check_eprop(n, BigRational(-t)).holds();
        }
        add_flag(lines, "eprop (c) negative integer q", ok);
    }
    {
        bool ok = true;
        for (int n = 2; n <= 20; ++n) ok = ok && check_bona_wilf(n).holds();
        add_flag(lines, "bona-wilf n<=20", ok);
    }
    {
        bool ok = true;
        for (int total = 1; total <= 8; ++total) {
            for (const auto& m : multisets_of_total(total)) ok = ok && check_simion(m).holds();
        }
        add_flag(lines, "simion, all multisets of size <= 8", ok);
    }
    {
        InstanceGen gen(seed);
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            const auto inst = gen.next_corollary();
            ok = ok && check_corollary(inst.f, inst.a, inst.b).holds();
        }
        add_flag(lines, "corollary on 200 seeded instances", ok);
    }
    {
        InstanceGen gen(seed + 1);
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            const auto inst = gen.next_t_prop();
            ok = ok && check_t_prop(inst.p, inst.xi).holds();
        }
        add_flag(lines, "t-prop on 200 seeded instances", ok);
    }
    {
        InstanceGen gen(seed + 2);
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            const auto inst = gen.next_e_prop();
            ok = ok && check_e_prop(inst.p, inst.alpha).holds();
        }
        add_flag(lines, "e-prop operator on 200 seeded instances", ok);
    }
    {
        bool ok = true;
        const std::vector<BigRational> ws = {BigRational(1, 3), BigRational(1, 2), BigRational(2, 3),
                                             BigRational(3, 4), BigRational(9, 10)};
        for (const auto& w : ws) {
            for (int n = 2; n <= 10; ++n) ok = ok && verify_knuth_identity(n, w).holds();
        }
        add_flag(lines, "knuth identity 2<=n<=10", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 20; ++n) {
            ok = ok && is_rz(bell(n), IntervalSpec::ray_le(BigRational(0))).holds &&
                 all_simple(bell(n));
        }
        for (int n = 0; n <= 15; ++n) {
            ok = ok && t_transform(UniPoly::x().pow(n)) == bell(n);
        }
        add_flag(lines, "bell zeros and t-transform link", ok);
    }
}

int run_suite(const std::string& name, const Options& opt) {
    std::vector<SuiteLine> lines;
    const int count = opt.count_set ? opt.count : 500;
    if (name == "identities") {
        suite_identities(opt.seed, lines);
    } else if (name == "families") {
        suite_families(lines);
    } else if (name == "mthm-random") {
        suite_mthm_random(opt.seed, count, lines);
    } else if (name == "all") {
        suite_identities(opt.seed, lines);
        suite_families(lines);
        suite_mthm_random(opt.seed, count, lines);
        suite_props(opt.seed, lines);
    } else {
        throw std::invalid_argument("suite: unknown suite '" + name + "'");
    }

    int passed = 0;
    for (const auto& l : lines) passed += l.pass ? 1 : 0;
    const bool all_pass = passed == static_cast<int>(lines.size());

    std::ostringstream os;
    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& l : lines) {
            Json j;
            j["check"] = l.key;
            j["pass"] = l.pass;
            j["digest"] = l.digest;
            arr.push_back(std::move(j));
        }
        Json top;
        top["suite"] = name;
        top["seed"] = opt.seed;
        top["passed"] = passed;
        top["total"] = static_cast<int>(lines.size());
        top["checks"] = arr;
        os << top.dump(2) << "\n";
    } else {
        for (const auto& l : lines) {
            os << (l.pass ? "[ ok ] " : "[FAIL] ") << l.key << "\n";
        }
        os << passed << "/" << lines.size() << " checks passed\n";
    }
    emit(opt, os.str());

    if (!opt.write_baseline.empty()) {
        std::ofstream f(opt.write_baseline, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open baseline file: " + opt.write_baseline);
        for (const auto& l : lines) f << l.key << "\t" << l.digest << "\n";
    }
    if (!opt.check_baseline.empty()) {
        std::ifstream f(opt.check_baseline);
        if (!f) throw std::runtime_error("cannot open baseline file: " + opt.check_baseline);
        std::map<std::string, std::string> expected;
        std::string line;
        while (std::getline(f, line)) {
            const auto tab = line.find('\t');
            if (tab != std::string::npos) expected[line.substr(0, tab)] = line.substr(tab + 1);
        }
        bool match = true;
        for (const auto& l : lines) {
            auto it = expected.find(l.key);
            if (it == expected.end() || it->second != l.digest) {
                std::cerr << "baseline mismatch: " << l.key << "\n";
                match = false;
            }
        }
        if (!match) return 1;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rzcert: exact generation and certification of real-rooted polynomial families"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"json", "tsv", "pretty"}));
        sub->add_option("--out", opt.out, "Also write the output to this file");
    };

    CLI::App* gen = app.add_subcommand("gen", "Generate a polynomial family member");
    gen->add_option("--family", opt.family, "Family name")->required();
    gen->add_option("--n", opt.n, "Family index")->check(CLI::Range(0, 1000));
    gen->add_option("--q", opt.q, "Rational parameter q (num/den)");
    gen->add_option("--multiset", opt.multiset, "Multiset counts, e.g. 2,3,1");
    add_common(gen);

    CLI::App* check = app.add_subcommand("check", "Run one certificate check");
    std::string claim;
    check->add_option("claim", claim, "Claim id")->required();
    check->add_option("--n", opt.n, "Index parameter");
    check->add_option("--q", opt.q, "Rational parameter q");
    check->add_option("--t", opt.t, "Positive integer parameter t");
    check->add_option("--w", opt.w, "Rational parameter w in (0,1)");
    check->add_option("--xi", opt.xi, "Rational parameter xi");
    check->add_option("--alpha", opt.alpha, "Rational parameter alpha");
    check->add_option("--a", opt.a, "Rational parameter a");
    check->add_option("--b", opt.b, "Rational parameter b");
    check->add_option("--multiset", opt.multiset, "Multiset counts");
    check->add_option("--seed", opt.seed, "Seed for generated instances");
    check->add_option("--count", opt.count, "Number of generated instances");
    add_common(check);

    CLI::App* suite = app.add_subcommand("suite", "Run a named invariant suite");
    std::string suite_name;
    suite->add_option("name", suite_name, "Suite name")->required();
    suite->add_option("--seed", opt.seed, "Seed for randomized checks");
    suite->add_option("--count", opt.count, "Instance count for mthm-random");
    suite->add_option("--write-baseline", opt.write_baseline, "Write certificate digests");
    suite->add_option("--check-baseline", opt.check_baseline, "Compare digests to a baseline");
    add_common(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    // Track which options the user actually set.
    if (check->count("--n") || gen->count("--n")) opt.n_set = true;
    if (check->count("--count") || suite->count("--count")) opt.count_set = true;
    if (!check->count("--a")) opt.a.clear();
    if (!check->count("--b")) opt.b.clear();
    if (!check->count("--xi")) opt.xi.clear();
    if (!check->count("--alpha")) opt.alpha.clear();

    try {
        if (gen->parsed()) return run_gen(opt);
        if (check->parsed()) {
            // "--t" is accepted as an alias for a negative integer q.
            if (!opt.t.empty() && opt.q.empty()) {
                opt.q = "-" + opt.t;
            }
            return run_check(claim, opt);
        }
        if (suite->parsed()) return run_suite(suite_name, opt);
    } catch (const NotApplicable& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return 2;
    } catch (const TooLarge& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return 2;
    } catch (const InvalidW& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

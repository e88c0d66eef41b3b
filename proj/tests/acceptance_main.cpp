// Acceptance gate. Every numbered criterion below runs with its stated time
// bound and prints exactly one PASS/FAIL line. The process exits nonzero if
// anything fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgforge/buchberger.hpp"
#include "sgforge/errors.hpp"
#include "sgforge/family.hpp"
#include "sgforge/presentation.hpp"
#include "sgforge/semigroup.hpp"

using Clock = std::chrono::steady_clock;
using sgforge::Binomial;
using sgforge::FamilyParams;
using sgforge::Monomial;
using sgforge::NumericalSemigroup;

namespace {

int g_failures = 0;

struct Check {
    bool ok = true;
    std::ostringstream notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << "    " << what << '\n';
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int num, const std::string& label, const Check& c, double secs) {
    std::string dots(std::max<std::size_t>(2, 44 - label.size()), '.');
    std::printf("criterion %d: %s %s %s (%.2f s)\n", num, label.c_str(),
                dots.c_str(), c.ok ? "PASS" : "FAIL", secs);
    if (!c.ok) {
        ++g_failures;
        std::fputs(c.notes.str().c_str(), stdout);
    }
    std::fflush(stdout);
}

std::string join(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

// ---- criterion 1: apery closed forms ----

void criterion1() {
    auto t0 = Clock::now();
    Check c;
    for (long long i = 2; i <= 7; ++i) {  // e = 4, n = 5..10
        auto tn = Clock::now();
        FamilyParams p = sgforge::family(4, i);
        auto closed = sgforge::closed_apery_e4(p);
        auto brute = oracle::apery(p.generators, p.generators[0]);
        NumericalSemigroup sg(p.generators);
        auto generic = sg.apery(p.generators[0]).entries;
        std::sort(generic.begin(), generic.end());
        c.expect(closed == brute, "e=4 n=" + std::to_string(p.n) +
                                      ": closed apery differs from brute force");
        c.expect(closed == generic, "e=4 n=" + std::to_string(p.n) +
                                        ": closed apery differs from generic");
        c.expect(closed.size() == static_cast<std::size_t>(p.n * p.n + 2 * p.n),
                 "e=4 n=" + std::to_string(p.n) + ": apery cardinality");
        c.expect(seconds_since(tn) < 1.0,
                 "e=4 n=" + std::to_string(p.n) + ": over 1 s");
    }
    const std::size_t expected_card[] = {89, 131};
    int k = 0;
    for (long long i = 2; i <= 3; ++i) {  // e = 5, n = 8 and 10
        auto tn = Clock::now();
        FamilyParams p = sgforge::family(5, i);
        auto closed = sgforge::closed_apery_e5(p);
        auto brute = oracle::apery(p.generators, p.generators[0]);
        NumericalSemigroup sg(p.generators);
        auto generic = sg.apery(p.generators[0]).entries;
        std::sort(generic.begin(), generic.end());
        c.expect(closed == brute, "e=5 n=" + std::to_string(p.n) +
                                      ": closed apery differs from brute force");
        c.expect(closed == generic, "e=5 n=" + std::to_string(p.n) +
                                        ": closed apery differs from generic");
        c.expect(closed.size() == static_cast<std::size_t>(p.n * p.n + 3 * p.n + 1),
                 "e=5 n=" + std::to_string(p.n) + ": apery cardinality formula");
        c.expect(closed.size() == expected_card[k++],
                 "e=5 n=" + std::to_string(p.n) + ": apery cardinality frozen value");
        c.expect(seconds_since(tn) < 1.0,
                 "e=5 n=" + std::to_string(p.n) + ": over 1 s");
    }
    report(1, "apery closed forms", c, seconds_since(t0));
}

// ---- criterion 2: pseudo-frobenius and type ----

void criterion2() {
    auto t0 = Clock::now();
    Check c;
    std::vector<long long> types4;
    for (long long i = 2; i <= 7; ++i) {  // e = 4, n = 5..10
        auto tn = Clock::now();
        FamilyParams p = sgforge::family(4, i);
        auto closed = sgforge::closed_pf_e4(p);
        auto brute = oracle::pseudo_frobenius(p.generators);
        NumericalSemigroup sg(p.generators);
        auto inv = sg.invariants();
        if (closed != brute)
            c.notes << "    e=4 n=" << p.n << " closed PF " << join(closed)
                    << " vs brute " << join(brute) << '\n';
        c.expect(closed == brute, "e=4 n=" + std::to_string(p.n) + ": PF mismatch");
        c.expect(inv.pseudo_frobenius == closed,
                 "e=4 n=" + std::to_string(p.n) + ": library PF mismatch");
        c.expect(inv.type == 2 * p.n,
                 "e=4 n=" + std::to_string(p.n) + ": type is not 2n");
        types4.push_back(inv.type);
        c.expect(seconds_since(tn) < 1.0,
                 "e=4 n=" + std::to_string(p.n) + ": over 1 s");
    }
    c.expect(types4 == std::vector<long long>{10, 12, 14, 16, 18, 20},
             "e=4 type sequence is not 10,12,...,20");
    c.expect(std::is_sorted(types4.begin(), types4.end()) &&
                 std::adjacent_find(types4.begin(), types4.end()) == types4.end(),
             "e=4 type sequence is not strictly increasing");

    // e = 5: brute force first, then the closed form, n = 8 and 10
    const long long expected_type[] = {15, 18};
    int k = 0;
    for (long long i = 2; i <= 3; ++i) {
        auto tn = Clock::now();
        FamilyParams p = sgforge::family(5, i);
        auto brute = oracle::pseudo_frobenius(p.generators);
        auto closed = sgforge::closed_pf_e5(p);
        if (closed != brute)
            c.notes << "    e=5 n=" << p.n << " closed PF " << join(closed)
                    << " vs brute " << join(brute) << '\n';
        c.expect(closed == brute, "e=5 n=" + std::to_string(p.n) + ": PF mismatch");
        NumericalSemigroup sg(p.generators);
        auto inv = sg.invariants();
        c.expect(inv.pseudo_frobenius == closed,
                 "e=5 n=" + std::to_string(p.n) + ": library PF mismatch");
        c.expect(inv.type == 3 * (p.n / 2) + 3,
                 "e=5 n=" + std::to_string(p.n) + ": type is not 3n/2+3");
        c.expect(inv.type == expected_type[k++],
                 "e=5 n=" + std::to_string(p.n) + ": frozen type value");
        c.expect(seconds_since(tn) < 1.0,
                 "e=5 n=" + std::to_string(p.n) + ": over 1 s");
    }
    report(2, "pseudo-frobenius and type", c, seconds_since(t0));
}

// ---- criterion 3: quotient certification with explicit leading ideal ----

Monomial m5(int a0, int a1, int a2, int a3, int a4) {
    return Monomial(std::vector<int>{a0, a1, a2, a3, a4});
}

// The expected leading ideal of J + (x0) under lex(x0 > ... > x4): the
// proof's standard set plus the one extra S-pair element x2*x3^2.
std::vector<Monomial> expected_leading_ideal(long long n, long long idx) {
    int ni = static_cast<int>(n), ii = static_cast<int>(idx);
    std::vector<Monomial> out = {
        m5(1, 0, 0, 0, 0),           // x0
        m5(0, 1, 0, 1, 0),           // x1 x3
        m5(0, 1, 0, 0, 1),           // x1 x4
        m5(0, 2, 0, 0, 0),           // x1^2
        m5(0, 0, ii + 3, 0, 0),      // x2^(i+3)
        m5(0, 0, 0, 0, ni + 1),      // x4^(n+1)
        m5(0, 0, 1, 0, ni),          // x2 x4^n
        m5(0, 0, 1, 1, ni - 1),      // x2 x3 x4^(n-1)
        m5(0, 0, 1, 2, 0),           // x2 x3^2
    };
    for (int t = 1; t <= ni + 1; ++t) out.push_back(m5(0, 0, 0, t, ni + 1 - t));
    for (int k = 0; k <= ii; ++k) out.push_back(m5(0, 0, k + 2, 0, ni - 2 * k - 2));
    std::sort(out.begin(), out.end(), sgforge::MonomialKeyLess{});
    return out;
}

void criterion3() {
    auto t0 = Clock::now();
    Check c;
    const std::uint64_t expected_dim[] = {89, 131};
    int k = 0;
    for (long long i = 2; i <= 3; ++i) {
        auto tn = Clock::now();
        FamilyParams p = sgforge::family(5, i);
        auto set = sgforge::closed_ideal_generators_e5(p);
        std::vector<long long> w(p.generators.begin(), p.generators.end());
        auto res = sgforge::gastinger_check(set, w, 0);
        c.expect(res.certified, "n=" + std::to_string(p.n) + ": not certified");
        c.expect(res.dimension && *res.dimension == expected_dim[k],
                 "n=" + std::to_string(p.n) + ": standard monomial count");
        auto leads = res.leading_ideal;
        std::sort(leads.begin(), leads.end(), sgforge::MonomialKeyLess{});
        auto expect = expected_leading_ideal(p.n, p.index);
        if (leads != expect) {
            c.notes << "    n=" << p.n << " got " << leads.size()
                    << " leads, expected " << expect.size() << '\n';
            for (const auto& m : leads)
                if (!std::binary_search(expect.begin(), expect.end(), m,
                                        sgforge::MonomialKeyLess{}))
                    c.notes << "      unexpected lead " << m.str() << '\n';
            for (const auto& m : expect)
                if (!std::binary_search(leads.begin(), leads.end(), m,
                                        sgforge::MonomialKeyLess{}))
                    c.notes << "      missing lead " << m.str() << '\n';
        }
        c.expect(leads == expect,
                 "n=" + std::to_string(p.n) + ": leading ideal differs");
        c.expect(seconds_since(tn) < 10.0,
                 "n=" + std::to_string(p.n) + ": over 10 s");
        ++k;
    }
    report(3, "quotient certification at e=5", c, seconds_since(t0));
}

// ---- criterion 4: minimal generator count at e=5 ----

void criterion4() {
    auto t0 = Clock::now();
    Check c;
    const std::size_t expected_mu[] = {19, 22};
    int k = 0;
    for (long long i = 2; i <= 3; ++i) {
        auto tn = Clock::now();
        FamilyParams p = sgforge::family(5, i);
        auto set = sgforge::closed_ideal_generators_e5(p);
        c.expect(sgforge::minimality_check(p.generators, set),
                 "n=" + std::to_string(p.n) + ": set is not minimal");
        auto rep = sgforge::mu_and_betti_degrees(p.generators, set);
        c.expect(rep.mu == expected_mu[k],
                 "n=" + std::to_string(p.n) + ": mu != " +
                     std::to_string(expected_mu[k]) + " (got " +
                     std::to_string(rep.mu) + ")");
        c.expect(rep.mu == static_cast<std::size_t>(p.n + p.index + 9),
                 "n=" + std::to_string(p.n) + ": mu formula n+i+9");
        c.expect(rep.mu >= static_cast<std::size_t>(p.n + 2),
                 "n=" + std::to_string(p.n) + ": mu below n+2");
        c.expect(rep.generating_set.size() == set.size(),
                 "n=" + std::to_string(p.n) + ": generating set size changed");
        c.expect(seconds_since(tn) < 60.0,
                 "n=" + std::to_string(p.n) + ": over 60 s");
        ++k;
    }
    report(4, "minimal generator count at e=5", c, seconds_since(t0));
}

// ---- criterion 5: from-scratch mu at e=4 ----

void criterion5() {
    auto t0 = Clock::now();
    Check c;
    for (long long i = 2; i <= 4; ++i) {  // n = 5, 6, 7
        FamilyParams p = sgforge::family(4, i);
        for (auto st : {sgforge::ToricStrategy::Saturation,
                        sgforge::ToricStrategy::Elimination}) {
            auto set = sgforge::toric_ideal_generators(p.generators, st);
            auto rep = sgforge::mu_and_betti_degrees(p.generators, set);
            c.expect(rep.mu == static_cast<std::size_t>(2 * (p.n + 1)),
                     "n=" + std::to_string(p.n) + ": mu != 2(n+1) (got " +
                         std::to_string(rep.mu) + ")");
        }
    }
    c.expect(seconds_since(t0) < 300.0, "over 5 minutes total");
    report(5, "from-scratch mu at e=4", c, seconds_since(t0));
}

// ---- criterion 6: strategy equivalence ----

void criterion6() {
    auto t0 = Clock::now();
    Check c;
    const std::vector<std::vector<long long>> cases = {
        {2, 3}, {3, 4, 5}, {4, 9, 11}, {35, 36, 41, 42}};
    for (const auto& gens : cases) {
        auto a = sgforge::toric_ideal_generators(gens,
                                                 sgforge::ToricStrategy::Saturation);
        auto b = sgforge::toric_ideal_generators(
            gens, sgforge::ToricStrategy::Elimination);
        c.expect(sgforge::same_ideal(gens, a, b),
                 "<" + join(gens) + ">: strategies disagree");
    }
    c.expect(seconds_since(t0) < 60.0, "over 60 s");
    report(6, "strategy equivalence", c, seconds_since(t0));
}

// ---- criterion 7: randomized property suites ----

std::vector<long long> random_semigroup(std::mt19937& rng, long long max_m) {
    std::uniform_int_distribution<long long> mdist(2, max_m);
    for (;;) {
        long long m = mdist(rng);
        std::uniform_int_distribution<long long> gdist(m + 1, 3 * m);
        std::set<long long> gset = {m, gdist(rng), gdist(rng)};
        std::vector<long long> gens(gset.begin(), gset.end());
        long long g = 0;
        for (long long x : gens) g = std::gcd(g, x);
        if (g == 1) return gens;
    }
}

void criterion7() {
    auto t0 = Clock::now();
    Check c;
    std::mt19937 rng(0xACCE57);

    // (a) |Ap(S, a)| = a with one entry per residue class
    for (int t = 0; t < 1000; ++t) {
        auto gens = random_semigroup(rng, 25);
        NumericalSemigroup sg(gens);
        long long a = gens[t % gens.size()];
        auto table = sg.apery(a);
        bool sized = table.entries.size() == static_cast<std::size_t>(a);
        c.expect(sized, "apery size != a for <" + join(gens) + ">");
        if (!sized) break;
        bool residues_ok = true;
        for (long long r = 0; r < a; ++r)
            residues_ok &= table.entries[static_cast<std::size_t>(r)] % a == r;
        c.expect(residues_ok, "apery residue classes wrong for <" + join(gens) + ">");
        if (!residues_ok) break;
    }

    // (b) membership agrees with the knapsack table
    for (int t = 0; t < 40; ++t) {
        auto gens = random_semigroup(rng, 25);
        NumericalSemigroup sg(gens);
        long long bound = oracle::scan_bound(gens);
        auto in = oracle::membership(gens, bound);
        bool all_ok = true;
        for (long long x = 0; x <= bound; ++x)  // 40 semigroups x >1000 points
            all_ok &= sg.contains(x) == static_cast<bool>(
                                            in[static_cast<std::size_t>(x)]);
        c.expect(all_ok, "membership mismatch for <" + join(gens) + ">");
        if (!all_ok) break;
    }

    // (c) pseudo-frobenius satisfies its definition and matches brute force
    for (int t = 0; t < 1000; ++t) {
        auto gens = random_semigroup(rng, 22);
        NumericalSemigroup sg(gens);
        auto pf = sg.invariants().pseudo_frobenius;
        bool ok = pf == oracle::pseudo_frobenius(gens);
        for (long long w : pf) {
            if (w == -1) continue;
            ok &= !sg.contains(w);
            for (long long g : gens) ok &= sg.contains(w + g);
        }
        c.expect(ok, "pseudo-frobenius wrong for <" + join(gens) + ">");
        if (!ok) break;
    }

    // (d) Buchberger confluence: every S-polynomial of the output reduces to 0
    {
        std::uniform_int_distribution<int> e(0, 3), count(2, 4);
        int done = 0;
        bool ok = true;
        while (done < 1000 && ok) {
            sgforge::TermOrder ord = sgforge::TermOrder::lex(3);
            std::vector<Binomial> gens;
            int want = count(rng);
            for (int j = 0; j < want; ++j) {
                Monomial u(std::vector<int>{e(rng), e(rng), e(rng)});
                Monomial v(std::vector<int>{e(rng), e(rng), e(rng)});
                auto b = Binomial::make(u, v, ord);
                if (b) gens.push_back(*b);
            }
            if (gens.empty()) continue;
            sgforge::GroebnerBasis gb;
            try {
                gb = sgforge::buchberger(gens, ord);
            } catch (const sgforge::ResourceLimit&) {
                continue;
            }
            ++done;
            for (std::size_t a = 0; a < gb.elements.size() && ok; ++a)
                for (std::size_t b = a + 1; b < gb.elements.size() && ok; ++b) {
                    auto s = sgforge::s_polynomial(gb.elements[a], gb.elements[b], ord);
                    if (s && sgforge::normal_form(*s, gb.elements, ord)) ok = false;
                }
            for (const Binomial& g : gens)
                if (sgforge::normal_form(g, gb.elements, ord)) ok = false;
        }
        c.expect(ok, "an S-polynomial of a computed basis did not reduce to 0");
    }

    // (e) nu-homogeneity is preserved end to end
    {
        int done = 0;
        bool ok = true;
        while (done < 1000 && ok) {
            auto gens = random_semigroup(rng, 20);
            if (gens.size() < 2) continue;
            ++done;
            std::vector<Binomial> set;
            try {
                set = sgforge::toric_ideal_generators(
                    gens, sgforge::ToricStrategy::Saturation);
            } catch (const sgforge::ResourceLimit&) {
                continue;
            }
            std::vector<long long> w(gens.begin(), gens.end());
            for (const Binomial& b : set) ok &= b.homogeneous(w);
        }
        c.expect(ok, "toric output lost nu-homogeneity");
    }

    // (f) genus from the apery sum equals the direct gap count
    for (int t = 0; t < 1000; ++t) {
        auto gens = random_semigroup(rng, 30);
        NumericalSemigroup sg(gens);
        bool ok = sg.invariants().genus == oracle::genus(gens);
        c.expect(ok, "genus mismatch for <" + join(gens) + ">");
        if (!ok) break;
    }

    report(7, "randomized property suites", c, seconds_since(t0));
}

// ---- criterion 8: classic fixtures ----

void criterion8() {
    auto t0 = Clock::now();
    Check c;
    NumericalSemigroup s23({2, 3});
    c.expect(s23.invariants().frobenius == 1, "F(<2,3>) != 1");

    NumericalSemigroup s345({3, 4, 5});
    c.expect(s345.invariants().pseudo_frobenius == std::vector<long long>{1, 2},
             "PF(<3,4,5>) != {1,2}");

    auto set = sgforge::toric_ideal_generators({3, 4, 5},
                                               sgforge::ToricStrategy::Saturation);
    auto rep = sgforge::mu_and_betti_degrees({3, 4, 5}, set);
    c.expect(rep.mu == 3, "mu(<3,4,5>) != 3");
    c.expect(seconds_since(t0) < 1.0, "over 1 s");
    report(8, "classic fixtures", c, seconds_since(t0));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

#include "sgforge/family.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "sgforge/presentation.hpp"

namespace sgforge {

FamilyParams family(int e, long long index) {
    if (e < 4) throw InvalidParams("e >= 4 required");
    if (index < 2) throw InvalidParams("index >= 2 required");

    FamilyParams p;
    p.e = e;
    p.index = index;
    p.q = 0;
    p.n = index * (e - 3) + (e - 1);
    const long long n = p.n;
    for (int j = 0; j <= e - 3; ++j)
        p.generators.push_back(n * n + (e - 2) * n + (e - 4 + j));
    p.generators.push_back(n * n + (e - 1) * n + (2 * e - 7));
    p.generators.push_back(n * n + (e - 1) * n + (2 * e - 6));

    NumericalSemigroup sg(p.generators);
    if (sg.generators() != p.generators)
        throw Error("family generator list is not minimal");
    return p;
}

namespace {

std::vector<long long> finish_closed_set(std::vector<long long> out,
                                         std::size_t expected,
                                         const char* what) {
    std::sort(out.begin(), out.end());
    auto dup = std::adjacent_find(out.begin(), out.end());
    if (dup != out.end() || out.size() != expected)
        throw Error(std::string("closed-form ") + what + " evaluation is inconsistent");
    return out;
}

}  // namespace

std::vector<long long> closed_apery_e4(const FamilyParams& p) {
    if (p.e != 4) throw WrongE(p.e, 4);
    const long long n = p.n;
    const auto& m = p.generators;

    std::vector<long long> out;
    out.push_back(0);
    for (long long r = 1; r <= n; ++r) out.push_back(r * m[1]);
    for (long long r = 1; r <= n; ++r) out.push_back(r * m[2]);
    for (long long r = 1; r <= n - 1; ++r) out.push_back(r * m[3]);
    for (long long r = 1; r <= n - 1; ++r)
        for (long long s = 1; s <= n - r; ++s) out.push_back(r * m[1] + s * m[3]);
    for (long long r = 1; r <= n - 1; ++r)
        for (long long s = 1; s <= n - r; ++s) out.push_back(r * m[2] + s * m[3]);

    return finish_closed_set(std::move(out),
                             static_cast<std::size_t>(n * n + 2 * n), "apery");
}

std::vector<long long> closed_pf_e4(const FamilyParams& p) {
    if (p.e != 4) throw WrongE(p.e, 4);
    const long long n = p.n;
    const long long base = (n - 1) * p.generators[0] + n;

    std::vector<long long> out;
    out.push_back(base);
    for (long long k = 1; k <= n - 1; ++k) out.push_back(base + k * (n + 1));
    for (long long t = 1; t <= n; ++t)
        out.push_back(base + (n - 1) * (n + 1) + t);

    return finish_closed_set(std::move(out), static_cast<std::size_t>(2 * n),
                             "pseudo-Frobenius");
}

std::vector<long long> closed_apery_e5(const FamilyParams& p) {
    if (p.e != 5) throw WrongE(p.e, 5);
    const long long n = p.n;  // even: n = 2*index + 4
    const long long h = n / 2;
    const auto& m = p.generators;

    std::vector<long long> out;
    out.push_back(0);
    out.push_back(m[1]);
    for (long long r = 1; r <= h; ++r) out.push_back(r * m[2]);
    for (long long r = 1; r <= n; ++r) out.push_back(r * m[3]);
    for (long long r = 1; r <= n; ++r) out.push_back(r * m[4]);
    for (long long r = 1; r <= h; ++r) out.push_back(m[1] + r * m[2]);
    for (long long r = 1; r <= h; ++r) out.push_back(m[3] + r * m[2]);
    for (long long s = 1; s <= h - 1; ++s)
        for (long long r = 1; r <= h - s; ++r) out.push_back(r * m[2] + 2 * s * m[4]);
    for (long long s = 1; s <= h; ++s)
        for (long long r = 1; r <= h + 1 - s; ++r)
            out.push_back(r * m[2] + (2 * s - 1) * m[4]);
    for (long long k = 1; k <= n - 1; ++k)
        for (long long r = 1; r <= n - k; ++r)
            out.push_back(r * m[3] + (n - k - r + 1) * m[4]);
    for (long long s = 1; s <= h - 1; ++s)
        for (long long r = 1; r <= h - s; ++r)
            out.push_back(r * m[2] + m[3] + 2 * s * m[4]);
    for (long long s = 1; s <= h - 1; ++s)
        for (long long r = 1; r <= h + 1 - s; ++r)
            out.push_back(r * m[2] + m[3] + (2 * s - 1) * m[4]);

    return finish_closed_set(std::move(out),
                             static_cast<std::size_t>(n * n + 3 * n + 1), "apery");
}

std::vector<long long> closed_pf_e5(const FamilyParams& p) {
    if (p.e != 5) throw WrongE(p.e, 5);
    const long long n = p.n;
    const long long h = n / 2;
    const auto& m = p.generators;
    const long long base = h * m[0] + (n + 1);
    const long long step = m[3] + n + 2;

    std::vector<long long> out;
    out.push_back(base);
    for (long long k = 1; k <= h - 1; ++k) out.push_back(base + k * step);
    for (long long t = 0; t <= n + 2; ++t)
        out.push_back(base + (h - 1) * step + (n + 1 + t));

    return finish_closed_set(std::move(out),
                             static_cast<std::size_t>(3 * h + 3), "pseudo-Frobenius");
}

std::vector<Binomial> closed_ideal_generators_e5(const FamilyParams& p) {
    if (p.e != 5) throw WrongE(p.e, 5);
    const int n = static_cast<int>(p.n);
    const int i = static_cast<int>(p.index);
    const std::vector<long long>& w = p.generators;
    TermOrder ord = TermOrder::weighted_lex(w);

    auto mono = [](int a0, int a1, int a2, int a3, int a4) {
        return Monomial({a0, a1, a2, a3, a4});
    };
    std::vector<Binomial> out;
    auto add = [&](const Monomial& u, const Monomial& v) {
        auto b = Binomial::make(u, v, ord);
        assert(b && b->homogeneous(w));
        out.push_back(std::move(*b));
    };

    add(mono(0, 1, 0, 1, 0), mono(1, 0, 0, 0, 1));          // x1*x3 - x0*x4
    add(mono(0, 0, 1, 1, 0), mono(0, 1, 0, 0, 1));          // x2*x3 - x1*x4
    add(mono(0, 2, 0, 0, 0), mono(1, 0, 1, 0, 0));          // x1^2 - x0*x2
    add(mono(0, 0, i + 3, 0, 0), mono(i + 2, 0, 0, 1, 0));  // x2^(i+3) - x0^(i+2)*x3
    for (int t = 0; t <= n + 1; ++t)
        add(mono(t, n + 2 - t, 0, 0, 0), mono(0, 0, 0, t, n + 1 - t));
    for (int k = 0; k <= i; ++k)
        add(mono(k + 1, 0, 0, n - 2 * k - 1, 0), mono(0, 0, k + 2, 0, n - 2 * k - 2));
    add(mono(n + 1, 1, 0, 0, 0), mono(0, 0, 1, 0, n));      // x0^(n+1)*x1 - x2*x4^n
    add(mono(n + 2, 0, 0, 0, 0), mono(0, 0, 1, 1, n - 1));  // x0^(n+2) - x2*x3*x4^(n-1)

    assert(out.size() == static_cast<std::size_t>(n + i + 9));
    return out;
}

bool VerificationReport::all_match() const {
    if (!apery_match || !pf_match || type_computed != type_expected) return false;
    if (mu_computed) {
        if (*mu_computed != mu_expected) return false;
        if (gastinger_certified && !*gastinger_certified) return false;
        if (minimality_certified && !*minimality_certified) return false;
        if (mu_ge_n_plus_2 && !*mu_ge_n_plus_2) return false;
    }
    return true;
}

namespace {

void diff_sets(const std::vector<long long>& closed, const std::vector<long long>& generic,
               bool& match, std::vector<long long>& only_closed,
               std::vector<long long>& only_generic) {
    std::set_difference(closed.begin(), closed.end(), generic.begin(), generic.end(),
                        std::back_inserter(only_closed));
    std::set_difference(generic.begin(), generic.end(), closed.begin(), closed.end(),
                        std::back_inserter(only_generic));
    match = only_closed.empty() && only_generic.empty();
}

}  // namespace

VerificationReport verify_family(int e, long long index, const VerifyOptions& opts) {
    if (e != 4 && e != 5) {
        if (e < 4) throw InvalidParams("e >= 4 required");
        throw UnsupportedE(e);
    }

    VerificationReport rep;
    rep.params = family(e, index);
    const long long n = rep.params.n;
    if (n > opts.max_apery_n)
        throw InvalidParams("family member too large (n = " + std::to_string(n) + ")");

    NumericalSemigroup sg(rep.params.generators);

    std::vector<long long> generic_apery = sg.apery_multiplicity().entries;
    std::sort(generic_apery.begin(), generic_apery.end());
    std::vector<long long> closed_apery =
        e == 4 ? closed_apery_e4(rep.params) : closed_apery_e5(rep.params);
    diff_sets(closed_apery, generic_apery, rep.apery_match, rep.apery_only_closed,
              rep.apery_only_generic);

    SemigroupInvariants inv = sg.invariants();
    std::vector<long long> closed_pf =
        e == 4 ? closed_pf_e4(rep.params) : closed_pf_e5(rep.params);
    diff_sets(closed_pf, inv.pseudo_frobenius, rep.pf_match, rep.pf_only_closed,
              rep.pf_only_generic);

    rep.type_computed = static_cast<long long>(inv.type);
    rep.type_expected = e == 4 ? 2 * n : 3 * (n / 2) + 3;
    rep.mu_expected = static_cast<std::size_t>(e == 4 ? 2 * (n + 1) : n + index + 9);

    const long long ideal_cutoff = e == 4 ? opts.max_ideal_n_e4 : opts.max_ideal_n_e5;
    if (n <= ideal_cutoff) {
        const auto& gens = rep.params.generators;
        if (e == 5) {
            auto candidate = closed_ideal_generators_e5(rep.params);
            auto gast = gastinger_check(candidate, gens, 0, opts.budget);
            rep.gastinger_certified = gast.certified;
            if (gast.certified) {
                rep.minimality_certified = minimality_check(gens, candidate, opts.budget);
                auto report = mu_and_betti_degrees(gens, std::move(candidate), opts.budget);
                rep.mu_computed = report.mu;
            }
        } else {
            auto derived = toric_ideal_generators(gens, ToricStrategy::Elimination,
                                                  opts.budget);
            auto gast = gastinger_check(derived, gens, 0, opts.budget);
            rep.gastinger_certified = gast.certified;
            if (gast.certified) {
                auto report = mu_and_betti_degrees(gens, std::move(derived), opts.budget);
                rep.mu_computed = report.mu;
            }
        }
        if (rep.mu_computed)
            rep.mu_ge_n_plus_2 = static_cast<long long>(*rep.mu_computed) >= n + 2;
    }
    return rep;
}

}  // namespace sgforge

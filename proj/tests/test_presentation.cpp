#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "sgforge/errors.hpp"
#include "sgforge/presentation.hpp"
#include "sgforge/semigroup.hpp"

using sgforge::Binomial;
using sgforge::Monomial;
using sgforge::ToricStrategy;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

bool contains_binomial(const std::vector<Binomial>& set, const Monomial& u,
                       const Monomial& v) {
    for (const Binomial& b : set) {
        if (!b.tail()) continue;
        if ((b.lead() == u && *b.tail() == v) || (b.lead() == v && *b.tail() == u))
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("lattice kernel basis") {
    auto k = sgforge::lattice_kernel_basis(std::vector<long long>{2, 3});
    REQUIRE(k.size() == 1);
    // spans the same rank-1 lattice as (3, -2)
    CHECK((k[0] == std::vector<long long>{3, -2} ||
           k[0] == std::vector<long long>{-3, 2}));

    auto k3 = sgforge::lattice_kernel_basis(std::vector<long long>{3, 4, 5});
    REQUIRE(k3.size() == 2);
    for (const auto& row : k3)
        CHECK(3 * row[0] + 4 * row[1] + 5 * row[2] == 0);
}

TEST_CASE("factorizations") {
    auto f = sgforge::factorizations({3, 4, 5}, 10);
    std::vector<std::vector<int>> expect = {{0, 0, 2}, {2, 1, 0}};
    CHECK(f == expect);
    CHECK(f == oracle::factorizations({3, 4, 5}, 10));

    CHECK(sgforge::factorizations({3, 4, 5}, 0) ==
          std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(sgforge::factorizations({3, 4, 5}, 1).empty());
    CHECK(sgforge::factorizations({3, 4, 5}, 2).empty());

    // budget applies
    sgforge::Budget tiny;
    tiny.max_factorization_nodes = 2;
    CHECK_THROWS_AS(sgforge::factorizations({3, 4, 5}, 600, tiny),
                    sgforge::ResourceLimit);
}

TEST_CASE("factorizations match brute force on random inputs") {
    std::mt19937 rng(1009);
    std::uniform_int_distribution<long long> gd(3, 25);
    std::uniform_int_distribution<long long> sd(0, 150);
    for (int t = 0; t < 400; ++t) {
        std::set<long long> gset = {gd(rng), gd(rng), gd(rng)};
        std::vector<long long> gens(gset.begin(), gset.end());
        long long s = sd(rng);
        CHECK(sgforge::factorizations(gens, s) == oracle::factorizations(gens, s));
    }
}

TEST_CASE("factorization graph") {
    auto g = sgforge::FactorizationGraph::build({3, 4, 5}, 10);
    CHECK(g.element == 10);
    CHECK(g.vertices.size() == 2);
    // (0,0,2) and (2,1,0) share no support: two components
    CHECK(g.component_count == 2);
    CHECK(g.edges.empty());

    // degree 11: (1,2,0) and (2,0,1) both use variable 0, hence connected
    auto g11 = sgforge::FactorizationGraph::build({3, 4, 5}, 11);
    CHECK(g11.vertices.size() == 2);
    CHECK(g11.component_count == 1);
    CHECK(g11.edges.size() == 1);
}

TEST_CASE("toric ideal of <2,3> both ways") {
    for (ToricStrategy st : {ToricStrategy::Saturation, ToricStrategy::Elimination}) {
        auto set = sgforge::toric_ideal_generators({2, 3}, st);
        REQUIRE(set.size() == 1);
        CHECK(contains_binomial(set, mono({3, 0}), mono({0, 2})));
    }
}

TEST_CASE("toric ideal of <3,4,5> both ways") {
    // the three minimal generators; either strategy may return a larger
    // generating set, but it must cut out the same ideal
    std::vector<long long> w = {3, 4, 5};
    sgforge::TermOrder ord = sgforge::TermOrder::weighted_lex(w);
    std::vector<Binomial> minimal;
    minimal.push_back(*Binomial::make(mono({0, 2, 0}), mono({1, 0, 1}), ord));
    minimal.push_back(*Binomial::make(mono({3, 0, 0}), mono({0, 1, 1}), ord));
    minimal.push_back(*Binomial::make(mono({0, 0, 2}), mono({2, 1, 0}), ord));
    for (ToricStrategy st : {ToricStrategy::Saturation, ToricStrategy::Elimination}) {
        auto set = sgforge::toric_ideal_generators({3, 4, 5}, st);
        CHECK(set.size() >= 3);
        CHECK(sgforge::same_ideal({3, 4, 5}, set, minimal));
        for (const Binomial& b : set) CHECK(b.homogeneous(w));
    }
}

TEST_CASE("strategies produce the same ideal on random semigroups") {
    std::mt19937 rng(2023);
    std::uniform_int_distribution<long long> gd(3, 30);
    int done = 0;
    while (done < 25) {
        std::set<long long> gset = {gd(rng), gd(rng), gd(rng)};
        std::vector<long long> gens(gset.begin(), gset.end());
        long long g = 0;
        for (long long x : gens) g = std::gcd(g, x);
        if (g != 1 || gens.size() < 2) continue;
        // keep only minimal systems so both strategies see the same input
        sgforge::NumericalSemigroup sg(gens);
        if (sg.generators() != gens) continue;
        ++done;
        auto a = sgforge::toric_ideal_generators(gens, ToricStrategy::Saturation);
        auto b = sgforge::toric_ideal_generators(gens, ToricStrategy::Elimination);
        CHECK(sgforge::same_ideal(gens, a, b));
    }
}

TEST_CASE("mu and betti degrees of <2,3>") {
    auto set = sgforge::toric_ideal_generators({2, 3}, ToricStrategy::Saturation);
    auto rep = sgforge::mu_and_betti_degrees({2, 3}, set);
    CHECK(rep.mu == 1);
    std::map<long long, std::size_t> expect = {{6, 1}};
    CHECK(rep.betti_degrees == expect);
}

TEST_CASE("mu and betti degrees of <3,4,5>") {
    auto set = sgforge::toric_ideal_generators({3, 4, 5}, ToricStrategy::Saturation);
    auto rep = sgforge::mu_and_betti_degrees({3, 4, 5}, set);
    CHECK(rep.mu == 3);
    std::map<long long, std::size_t> expect = {{8, 1}, {9, 1}, {10, 1}};
    CHECK(rep.betti_degrees == expect);
    CHECK(sgforge::minimality_check({3, 4, 5}, set));
    CHECK(rep.betti_degrees == oracle::betti_degrees({3, 4, 5}, 12));
}

TEST_CASE("mu of the n = 5 concatenation member") {
    std::vector<long long> gens = {35, 36, 41, 42};
    auto set = sgforge::toric_ideal_generators(gens, ToricStrategy::Saturation);
    auto rep = sgforge::mu_and_betti_degrees(gens, set);
    CHECK(rep.mu == 12);
    std::size_t total = 0;
    for (const auto& [deg, cnt] : rep.betti_degrees) total += cnt;
    CHECK(total == 12);
}

TEST_CASE("betti degrees match brute force on random 3-generator semigroups") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<long long> gd(3, 18);
    int done = 0;
    while (done < 30) {
        std::set<long long> gset = {gd(rng), gd(rng), gd(rng)};
        std::vector<long long> gens(gset.begin(), gset.end());
        long long g = 0;
        for (long long x : gens) g = std::gcd(g, x);
        if (g != 1 || gens.size() != 3) continue;
        sgforge::NumericalSemigroup sg(gens);
        if (sg.generators() != gens) continue;
        ++done;
        auto set = sgforge::toric_ideal_generators(gens, ToricStrategy::Saturation);
        auto rep = sgforge::mu_and_betti_degrees(gens, set);
        long long bound = 0;
        for (const auto& [deg, cnt] : rep.betti_degrees) bound = std::max(bound, deg);
        CHECK(rep.betti_degrees == oracle::betti_degrees(gens, bound + 1));
    }
}

TEST_CASE("uncertified generating sets are rejected") {
    // a strict subideal of the <3,4,5> ideal
    std::vector<long long> w = {3, 4, 5};
    auto f = Binomial::make(mono({0, 2, 0}), mono({1, 0, 1}),
                            sgforge::TermOrder::weighted_lex(w));
    REQUIRE(f);
    std::vector<Binomial> sub = {*f};
    CHECK_THROWS_AS(sgforge::mu_and_betti_degrees({3, 4, 5}, sub),
                    sgforge::NotCertified);
    CHECK_THROWS_AS(sgforge::minimality_check({3, 4, 5}, sub),
                    sgforge::NotCertified);
}

TEST_CASE("non-minimal certified sets fail the minimality check") {
    auto set = sgforge::toric_ideal_generators({3, 4, 5}, ToricStrategy::Saturation);
    // pad with a redundant element of degree 16: x1 * (x2^2 - x0^2 x1)
    auto pad = Binomial::make(mono({0, 1, 2}), mono({2, 2, 0}),
                              sgforge::TermOrder::weighted_lex({3, 4, 5}));
    REQUIRE(pad);
    auto padded = set;
    padded.push_back(*pad);
    CHECK(sgforge::minimality_check({3, 4, 5}, set));
    CHECK_FALSE(sgforge::minimality_check({3, 4, 5}, padded));
}

TEST_CASE("input validation for toric routines") {
    CHECK_THROWS_AS(sgforge::toric_ideal_generators({}, ToricStrategy::Saturation),
                    sgforge::EmptyGenerators);
    CHECK_THROWS_AS(sgforge::toric_ideal_generators({4, 6}, ToricStrategy::Saturation),
                    sgforge::NotCoprime);
    CHECK_THROWS_AS(sgforge::factorizations({3, 4, 5}, -2),
                    sgforge::InvalidParams);
}

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sgforge/budget.hpp"
#include "sgforge/buchberger.hpp"
#include "sgforge/poly.hpp"

namespace sgforge {

/// Basis of the integer kernel of the 1 x e matrix (gens), i.e. e-1
/// independent vectors v with sum(v[j] * gens[j]) = 0.
std::vector<std::vector<long long>> lattice_kernel_basis(std::span<const long long> gens);

enum class ToricStrategy { Saturation, Elimination };

/// Homogeneous binomial generating set (a Groebner basis, not necessarily
/// minimal) of the defining ideal of the monomial curve with exponents
/// `gens`. Saturation: saturate the lattice-basis ideal by each variable in
/// turn, computing with that variable order-minimal and dividing it out.
/// Elimination: adjoin a parameter u, start from {x_j - u^gens[j]}, eliminate
/// u via lex with u greatest.
std::vector<Binomial> toric_ideal_generators(std::span<const long long> gens,
                                             ToricStrategy strategy,
                                             const Budget& budget = {});

/// All exponent vectors v >= 0 with sum(v[j] * gens[j]) = s, sorted.
std::vector<std::vector<int>> factorizations(std::span<const long long> gens,
                                             long long s, const Budget& budget = {});

/// Factorizations of one semigroup element with edges between factorizations
/// sharing a support coordinate. The number of minimal generators of the
/// defining ideal in degree s is component_count - 1.
struct FactorizationGraph {
    long long element = 0;
    std::vector<std::vector<int>> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t component_count = 0;

    static FactorizationGraph build(std::span<const long long> gens, long long s,
                                    const Budget& budget = {});
    static FactorizationGraph build(std::initializer_list<long long> gens,
                                    long long s, const Budget& budget = {}) {
        return build(std::span<const long long>(gens.begin(), gens.size()), s, budget);
    }
};

struct PresentationReport {
    std::vector<Binomial> generating_set;
    std::map<long long, std::size_t> betti_degrees;  // degree -> minimal generator count
    std::size_t mu = 0;                              // total minimal generators
};

/// Minimal generator count of the defining ideal, degree by degree, from
/// factorization graphs at the degrees of `generating_set`. The set is first
/// certified to generate (throws NotCertified when it does not).
PresentationReport mu_and_betti_degrees(std::span<const long long> gens,
                                        std::vector<Binomial> generating_set,
                                        const Budget& budget = {});

/// True iff the certified candidate is a minimal generating set: in each of
/// its degrees it supplies exactly component_count - 1 elements.
bool minimality_check(std::span<const long long> gens,
                      std::span<const Binomial> candidate,
                      const Budget& budget = {});

/// Mutual normal-form reduction: both sets generate the same ideal.
bool same_ideal(std::span<const long long> gens, std::span<const Binomial> a,
                std::span<const Binomial> b, const Budget& budget = {});

// Brace-literal conveniences: {2, 3} does not convert to a span on its own.

inline std::vector<std::vector<long long>> lattice_kernel_basis(
    std::initializer_list<long long> gens) {
    return lattice_kernel_basis(std::span<const long long>(gens.begin(), gens.size()));
}

inline std::vector<Binomial> toric_ideal_generators(
    std::initializer_list<long long> gens, ToricStrategy strategy,
    const Budget& budget = {}) {
    return toric_ideal_generators(std::span<const long long>(gens.begin(), gens.size()),
                                  strategy, budget);
}

inline std::vector<std::vector<int>> factorizations(
    std::initializer_list<long long> gens, long long s, const Budget& budget = {}) {
    return factorizations(std::span<const long long>(gens.begin(), gens.size()), s,
                          budget);
}

inline PresentationReport mu_and_betti_degrees(std::initializer_list<long long> gens,
                                               std::vector<Binomial> generating_set,
                                               const Budget& budget = {}) {
    return mu_and_betti_degrees(std::span<const long long>(gens.begin(), gens.size()),
                                std::move(generating_set), budget);
}

inline bool minimality_check(std::initializer_list<long long> gens,
                             std::span<const Binomial> candidate,
                             const Budget& budget = {}) {
    return minimality_check(std::span<const long long>(gens.begin(), gens.size()),
                            candidate, budget);
}

inline bool same_ideal(std::initializer_list<long long> gens,
                       std::span<const Binomial> a, std::span<const Binomial> b,
                       const Budget& budget = {}) {
    return same_ideal(std::span<const long long>(gens.begin(), gens.size()), a, b,
                      budget);
}

}  // namespace sgforge

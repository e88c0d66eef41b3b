#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgforge/budget.hpp"
#include "sgforge/poly.hpp"

namespace sgforge {

/// Binomial arithmetic is closed under S-polynomials and reduction, so every
/// basis below consists of monomials and differences of monomials only.

/// S-polynomial of two binomials; empty optional when it cancels to zero.
std::optional<Binomial> s_polynomial(const Binomial& f, const Binomial& g,
                                     const TermOrder& ord);

/// Reducer selection rule for normal forms. Against a Groebner basis the
/// result is rule-independent; the rule only fixes a deterministic walk.
enum class ReducerRule { FirstByLead, LastByLead };

/// Remainder of f on division by basis: no monomial of the result is
/// divisible by any basis lead. Empty optional means f reduced to zero.
std::optional<Binomial> normal_form(const Binomial& f, std::span<const Binomial> basis,
                                    const TermOrder& ord,
                                    ReducerRule rule = ReducerRule::FirstByLead);

struct GroebnerBasis {
    std::vector<Binomial> elements;  // sorted by lead, ascending
    bool reduced = false;

    std::vector<Monomial> leading_monomials() const;
};

/// Buchberger completion with the coprime-lead skip and a normal pair queue
/// ordered by lcm schedule degree. The result is auto-reduced, so it is the
/// reduced Groebner basis (signs discarded). Throws ResourceLimit when the
/// S-pair budget is exhausted.
GroebnerBasis buchberger(std::vector<Binomial> gens, const TermOrder& ord,
                         const Budget& budget = {});

/// Number of monomials outside the monomial ideal generated by leads; empty
/// optional when the count is infinite, i.e. some variable has no pure power
/// among the leads. leads must be nonempty.
std::optional<std::uint64_t> quotient_dimension(std::span<const Monomial> leads);

/// Image of f under sending the listed variables to zero: terms involving any
/// of them vanish. Empty optional when both monomials die.
std::optional<Binomial> project_to_zero(const Binomial& f,
                                        std::span<const std::size_t> vars);

struct GastingerResult {
    bool certified = false;
    std::optional<std::uint64_t> dimension;  // empty = infinite
    std::vector<Monomial> leading_ideal;     // minimal generators, lex basis
};

/// Generation certificate for a subideal J of the defining toric ideal of
/// numerical semigroup generators `weights`: J equals the whole ideal iff the
/// quotient by J + (x_zero_var) has vector-space dimension weights[zero_var].
/// Every element of j_gens must be homogeneous under `weights`.
GastingerResult gastinger_check(std::span<const Binomial> j_gens,
                                std::span<const long long> weights,
                                std::size_t zero_var, const Budget& budget = {});

inline GastingerResult gastinger_check(std::span<const Binomial> j_gens,
                                       std::initializer_list<long long> weights,
                                       std::size_t zero_var,
                                       const Budget& budget = {}) {
    return gastinger_check(
        j_gens, std::span<const long long>(weights.begin(), weights.size()), zero_var,
        budget);
}

inline GastingerResult gastinger_check(std::initializer_list<Binomial> j_gens,
                                       std::span<const long long> weights,
                                       std::size_t zero_var,
                                       const Budget& budget = {}) {
    return gastinger_check(
        std::span<const Binomial>(j_gens.begin(), j_gens.size()), weights, zero_var,
        budget);
}

}  // namespace sgforge

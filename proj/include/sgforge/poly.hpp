#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgforge/errors.hpp"

namespace sgforge {

/// Monomial in a fixed ring, stored as its exponent vector.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(std::size_t nvars, std::size_t v, int power = 1);

    std::size_t nvars() const { return exps_.size(); }
    int exp(std::size_t v) const { return exps_[v]; }
    const std::vector<int>& exps() const { return exps_; }

    bool is_one() const;
    long long total_degree() const;
    long long weighted_degree(std::span<const long long> weights) const;

    bool divides(const Monomial& m) const;
    bool shares_support(const Monomial& m) const;
    bool involves(std::span<const std::size_t> vars) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    Monomial divided_by(const Monomial& m) const;  // requires m.divides(*this)

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial&) const = default;

    std::string str() const;  // e.g. "x0^2*x3", "1"

private:
    std::vector<int> exps_;
};

/// Exponent-vector comparison for container keys; not a term order.
struct MonomialKeyLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exps() < b.exps();
    }
};

/// Total, multiplicative well-order on monomials of one ring.
///
/// Kinds: plain lexicographic with a variable priority; weighted degree with
/// lexicographic ties; weighted degree with reverse-lexicographic ties (used
/// to place one variable order-minimal when saturating by it).
class TermOrder {
public:
    enum class Kind { Lex, WeightedLex, WeightedGrevlex };

    static TermOrder lex(std::size_t nvars);
    static TermOrder lex(std::vector<std::size_t> priority);
    static TermOrder weighted_lex(std::vector<long long> weights);
    static TermOrder weighted_lex(std::vector<long long> weights,
                                  std::vector<std::size_t> priority);
    static TermOrder weighted_grevlex(std::vector<long long> weights,
                                      std::vector<std::size_t> priority);

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    /// Degree used to schedule S-pairs: weighted when weights are present,
    /// total degree otherwise.
    long long schedule_degree(const Monomial& m) const;

    std::size_t nvars() const { return priority_.size(); }
    Kind kind() const { return kind_; }
    const std::vector<long long>& weights() const { return weights_; }

private:
    TermOrder(Kind kind, std::vector<long long> weights, std::vector<std::size_t> priority);

    Kind kind_;
    std::vector<long long> weights_;       // empty for Kind::Lex
    std::vector<std::size_t> priority_;    // variables, most significant first
};

/// Difference of two distinct monomials up to global sign, or a single
/// monomial (absent tail). The zero polynomial is not representable; functions
/// that can produce it return an empty optional instead.
class Binomial {
public:
    /// Normalizes so that lead is the larger monomial under ord; returns
    /// nullopt when u == v (the zero polynomial).
    static std::optional<Binomial> make(Monomial u, Monomial v, const TermOrder& ord);
    static Binomial monomial(Monomial u) { return Binomial(std::move(u), std::nullopt); }

    const Monomial& lead() const { return lead_; }
    const std::optional<Monomial>& tail() const { return tail_; }
    bool is_monomial() const { return !tail_.has_value(); }
    std::size_t nvars() const { return lead_.nvars(); }

    /// Re-arranges lead/tail under a different order.
    Binomial normalized(const TermOrder& ord) const;

    bool homogeneous(std::span<const long long> weights) const;
    long long weighted_degree(std::span<const long long> weights) const {
        return lead_.weighted_degree(weights);
    }

    bool operator==(const Binomial&) const = default;

    std::string str() const;  // e.g. "x1*x3 - x0*x4"

private:
    Binomial(Monomial lead, std::optional<Monomial> tail)
        : lead_(std::move(lead)), tail_(std::move(tail)) {}

    Monomial lead_;
    std::optional<Monomial> tail_;
};

}  // namespace sgforge

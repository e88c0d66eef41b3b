#include "sgforge/poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace sgforge {

Monomial Monomial::var(std::size_t nvars, std::size_t v, int power) {
    std::vector<int> e(nvars, 0);
    e[v] = power;
    return Monomial(std::move(e));
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

long long Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0LL);
}

long long Monomial::weighted_degree(std::span<const long long> weights) const {
    if (weights.size() != exps_.size()) throw DimensionMismatch();
    long long deg = 0;
    for (std::size_t v = 0; v < exps_.size(); ++v) deg += exps_[v] * weights[v];
    return deg;
}

bool Monomial::divides(const Monomial& m) const {
    if (m.nvars() != nvars()) throw DimensionMismatch();
    for (std::size_t v = 0; v < exps_.size(); ++v)
        if (exps_[v] > m.exps_[v]) return false;
    return true;
}

bool Monomial::shares_support(const Monomial& m) const {
    if (m.nvars() != nvars()) throw DimensionMismatch();
    for (std::size_t v = 0; v < exps_.size(); ++v)
        if (exps_[v] > 0 && m.exps_[v] > 0) return true;
    return false;
}

bool Monomial::involves(std::span<const std::size_t> vars) const {
    for (std::size_t v : vars)
        if (exps_[v] > 0) return true;
    return false;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch();
    std::vector<int> e(a.exps_);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += b.exps_[v];
    return Monomial(std::move(e));
}

Monomial Monomial::divided_by(const Monomial& m) const {
    assert(m.divides(*this));
    std::vector<int> e(exps_);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] -= m.exps_[v];
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch();
    std::vector<int> e(a.exps_);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::max(e[v], b.exps_[v]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch();
    std::vector<int> e(a.exps_);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::min(e[v], b.exps_[v]);
    return Monomial(std::move(e));
}

std::string Monomial::str() const {
    std::string s;
    for (std::size_t v = 0; v < exps_.size(); ++v) {
        if (exps_[v] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(v);
        if (exps_[v] > 1) s += '^' + std::to_string(exps_[v]);
    }
    return s.empty() ? "1" : s;
}

TermOrder::TermOrder(Kind kind, std::vector<long long> weights,
                     std::vector<std::size_t> priority)
    : kind_(kind), weights_(std::move(weights)), priority_(std::move(priority)) {
    if (!weights_.empty() && weights_.size() != priority_.size())
        throw DimensionMismatch();
}

namespace {
std::vector<std::size_t> identity_priority(std::size_t nvars) {
    std::vector<std::size_t> p(nvars);
    for (std::size_t v = 0; v < nvars; ++v) p[v] = v;
    return p;
}
}  // namespace

TermOrder TermOrder::lex(std::size_t nvars) {
    return TermOrder(Kind::Lex, {}, identity_priority(nvars));
}

TermOrder TermOrder::lex(std::vector<std::size_t> priority) {
    return TermOrder(Kind::Lex, {}, std::move(priority));
}

TermOrder TermOrder::weighted_lex(std::vector<long long> weights) {
    auto p = identity_priority(weights.size());
    return TermOrder(Kind::WeightedLex, std::move(weights), std::move(p));
}

TermOrder TermOrder::weighted_lex(std::vector<long long> weights,
                                  std::vector<std::size_t> priority) {
    return TermOrder(Kind::WeightedLex, std::move(weights), std::move(priority));
}

TermOrder TermOrder::weighted_grevlex(std::vector<long long> weights,
                                      std::vector<std::size_t> priority) {
    return TermOrder(Kind::WeightedGrevlex, std::move(weights), std::move(priority));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != priority_.size() || b.nvars() != priority_.size())
        throw DimensionMismatch();

    if (kind_ != Kind::Lex) {
        long long da = a.weighted_degree(weights_);
        long long db = b.weighted_degree(weights_);
        if (da != db) return da <=> db;
    }
    if (kind_ == Kind::WeightedGrevlex) {
        // Ties go to the monomial with the smaller exponent in the least
        // significant differing variable.
        for (std::size_t k = priority_.size(); k-- > 0;) {
            std::size_t v = priority_[k];
            if (a.exp(v) != b.exp(v))
                return a.exp(v) < b.exp(v) ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t v : priority_) {
        if (a.exp(v) != b.exp(v)) return a.exp(v) <=> b.exp(v);
    }
    return std::strong_ordering::equal;
}

long long TermOrder::schedule_degree(const Monomial& m) const {
    return weights_.empty() ? m.total_degree() : m.weighted_degree(weights_);
}

std::optional<Binomial> Binomial::make(Monomial u, Monomial v, const TermOrder& ord) {
    auto c = ord.compare(u, v);
    if (c == std::strong_ordering::equal) return std::nullopt;
    if (c == std::strong_ordering::less) std::swap(u, v);
    return Binomial(std::move(u), std::move(v));
}

Binomial Binomial::normalized(const TermOrder& ord) const {
    if (!tail_ || ord.greater(lead_, *tail_)) return *this;
    return Binomial(*tail_, lead_);
}

bool Binomial::homogeneous(std::span<const long long> weights) const {
    if (!tail_) return true;
    return lead_.weighted_degree(weights) == tail_->weighted_degree(weights);
}

std::string Binomial::str() const {
    if (!tail_) return lead_.str();
    return lead_.str() + " - " + tail_->str();
}

}  // namespace sgforge

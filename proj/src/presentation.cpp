#include "sgforge/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace sgforge {

std::vector<std::vector<long long>> lattice_kernel_basis(std::span<const long long> gens) {
    const std::size_t e = gens.size();
    if (e == 0) throw EmptyGenerators();
    for (long long g : gens)
        if (g <= 0) throw InvalidParams("generators must be positive");

    // Column-reduce the row (gens) with unimodular operations until a single
    // nonzero entry remains; the other columns of the transform span the kernel.
    std::vector<long long> r(gens.begin(), gens.end());
    std::vector<std::vector<long long>> cols(e, std::vector<long long>(e, 0));
    for (std::size_t j = 0; j < e; ++j) cols[j][j] = 1;

    for (;;) {
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < e; ++j)
            if (r[j] != 0) ++nonzero;
        if (nonzero <= 1) break;

        std::size_t lo = e, hi = e;
        for (std::size_t j = 0; j < e; ++j) {
            if (r[j] == 0) continue;
            if (lo == e || std::llabs(r[j]) < std::llabs(r[lo])) lo = j;
        }
        for (std::size_t j = 0; j < e; ++j) {
            if (r[j] == 0 || j == lo) continue;
            if (hi == e || std::llabs(r[j]) > std::llabs(r[hi])) hi = j;
        }
        long long q = r[hi] / r[lo];
        r[hi] -= q * r[lo];
        for (std::size_t k = 0; k < e; ++k) cols[hi][k] -= q * cols[lo][k];
    }

    std::vector<std::vector<long long>> basis;
    for (std::size_t j = 0; j < e; ++j)
        if (r[j] == 0) basis.push_back(cols[j]);
    assert(basis.size() == e - 1);

    // The reduction above can leave long vectors, which would seed the
    // saturation with binomials of huge degree. Shorten them pairwise:
    // subtracting the rounded projection of one vector onto another is
    // unimodular, so the kernel lattice is preserved exactly.
    auto dot = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        long long s = 0;
        for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
        return s;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                long long den = dot(basis[j], basis[j]);
                long long q = std::llround(static_cast<double>(dot(basis[i], basis[j])) /
                                           static_cast<double>(den));
                if (q == 0) continue;
                std::vector<long long> cand(e);
                for (std::size_t k = 0; k < e; ++k)
                    cand[k] = basis[i][k] - q * basis[j][k];
                if (dot(cand, cand) < dot(basis[i], basis[i])) {
                    basis[i] = std::move(cand);
                    changed = true;
                }
            }
    }
    for (auto& v : basis) {
        std::size_t k = 0;
        while (k < e && v[k] == 0) ++k;
        if (k < e && v[k] < 0)
            for (auto& x : v) x = -x;
    }
    std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
        long long na = dot(a, a), nb = dot(b, b);
        if (na != nb) return na < nb;
        return a < b;
    });
    return basis;
}

namespace {

std::vector<long long> to_weights(std::span<const long long> gens) {
    return std::vector<long long>(gens.begin(), gens.end());
}

Binomial from_kernel_vector(const std::vector<long long>& v, const TermOrder& ord) {
    const std::size_t e = v.size();
    std::vector<int> pos(e, 0), neg(e, 0);
    for (std::size_t j = 0; j < e; ++j) {
        if (v[j] > 0) pos[j] = static_cast<int>(v[j]);
        if (v[j] < 0) neg[j] = static_cast<int>(-v[j]);
    }
    auto b = Binomial::make(Monomial(std::move(pos)), Monomial(std::move(neg)), ord);
    assert(b);  // a kernel basis vector is nonzero
    return *b;
}

// Both monomials divided by the largest power of the variable dividing the
// whole binomial.
Binomial strip_variable(const Binomial& f, std::size_t v) {
    int c = f.lead().exp(v);
    if (f.tail()) c = std::min(c, f.tail()->exp(v));
    if (c == 0) return f;
    Monomial d = Monomial::var(f.nvars(), v, c);
    if (!f.tail()) return Binomial::monomial(f.lead().divided_by(d));
    // Dividing both monomials by the same factor keeps the arrangement valid.
    auto lead = f.lead().divided_by(d);
    auto tail = f.tail()->divided_by(d);
    auto b = Binomial::make(std::move(lead), std::move(tail),
                            TermOrder::lex(f.nvars()));
    assert(b);
    return *b;
}

std::vector<std::size_t> priority_with_last(std::size_t nvars, std::size_t last) {
    std::vector<std::size_t> p;
    p.reserve(nvars);
    for (std::size_t v = 0; v < nvars; ++v)
        if (v != last) p.push_back(v);
    p.push_back(last);
    return p;
}

void sort_unique(std::vector<Binomial>& set, const TermOrder& ord) {
    for (Binomial& b : set) b = b.normalized(ord);
    std::sort(set.begin(), set.end(), [&](const Binomial& a, const Binomial& b) {
        if (a.lead() != b.lead())
            return ord.compare(a.lead(), b.lead()) == std::strong_ordering::less;
        if (!a.tail() || !b.tail()) return !a.tail() && b.tail();
        return ord.compare(*a.tail(), *b.tail()) == std::strong_ordering::less;
    });
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

// Saturation of the lattice-basis ideal by every variable: for each variable
// in turn, compute a Groebner basis under a weighted order with
// reverse-lexicographic ties that places the variable order-minimal. Under
// such an order a homogeneous binomial whose lead the variable divides is
// divisible by it entirely, so stripping the common power saturates.
std::vector<Binomial> toric_by_saturation(std::span<const long long> gens,
                                          const Budget& budget) {
    auto weights = to_weights(gens);
    const std::size_t e = weights.size();
    TermOrder seed_ord = TermOrder::weighted_lex(weights);

    std::vector<Binomial> basis;
    for (const auto& v : lattice_kernel_basis(gens))
        basis.push_back(from_kernel_vector(v, seed_ord));

    for (std::size_t v = 0; v < e; ++v) {
        TermOrder ord = TermOrder::weighted_grevlex(weights, priority_with_last(e, v));
        GroebnerBasis gb = buchberger(std::move(basis), ord, budget);
        basis.clear();
        for (const Binomial& f : gb.elements) basis.push_back(strip_variable(f, v));
        sort_unique(basis, ord);
    }

    TermOrder canonical = TermOrder::weighted_lex(weights);
    sort_unique(basis, canonical);
    return basis;
}

// Kernel of x_j -> u^gens[j]: eliminate the parameter u (variable 0 of the
// extended ring); the u-free elements remain. The input is homogeneous under
// (1, gens...), so weighted lex with the u tiebreak first acts as an
// elimination order while letting Buchberger process pairs in ascending
// weighted degree, which is far cheaper than plain lex scheduling.
std::vector<Binomial> toric_by_elimination(std::span<const long long> gens,
                                           const Budget& budget) {
    const std::size_t e = gens.size();
    const std::size_t nvars = e + 1;
    std::vector<long long> ext_weights(nvars, 1);
    for (std::size_t j = 0; j < e; ++j) ext_weights[j + 1] = gens[j];
    TermOrder ord = TermOrder::weighted_lex(ext_weights);

    std::vector<Binomial> input;
    for (std::size_t j = 0; j < e; ++j) {
        if (gens[j] <= 0) throw InvalidParams("generators must be positive");
        auto b = Binomial::make(Monomial::var(nvars, 0, static_cast<int>(gens[j])),
                                Monomial::var(nvars, j + 1), ord);
        assert(b);
        input.push_back(std::move(*b));
    }

    GroebnerBasis gb = buchberger(std::move(input), ord, budget);

    auto weights = to_weights(gens);
    TermOrder canonical = TermOrder::weighted_lex(weights);
    std::vector<Binomial> out;
    for (const Binomial& f : gb.elements) {
        if (f.lead().exp(0) != 0) continue;  // under lex-u-first the tail follows
        std::vector<int> lead(f.lead().exps().begin() + 1, f.lead().exps().end());
        if (!f.tail()) {
            out.push_back(Binomial::monomial(Monomial(std::move(lead))));
            continue;
        }
        assert(f.tail()->exp(0) == 0);
        std::vector<int> tail(f.tail()->exps().begin() + 1, f.tail()->exps().end());
        auto b = Binomial::make(Monomial(std::move(lead)), Monomial(std::move(tail)),
                                canonical);
        assert(b);
        out.push_back(std::move(*b));
    }
    sort_unique(out, canonical);
    return out;
}

}  // namespace

std::vector<Binomial> toric_ideal_generators(std::span<const long long> gens,
                                             ToricStrategy strategy,
                                             const Budget& budget) {
    if (gens.empty()) throw EmptyGenerators();
    long long d = 0;
    for (long long g : gens) d = std::gcd(d, g);
    if (d != 1) throw NotCoprime(d);
    return strategy == ToricStrategy::Saturation ? toric_by_saturation(gens, budget)
                                                 : toric_by_elimination(gens, budget);
}

std::vector<std::vector<int>> factorizations(std::span<const long long> gens,
                                             long long s, const Budget& budget) {
    if (gens.empty()) throw EmptyGenerators();
    if (s < 0) throw InvalidParams("element must be nonnegative");
    const std::size_t e = gens.size();

    std::vector<std::vector<int>> out;
    std::vector<int> cur(e, 0);
    std::uint64_t nodes = 0;

    // Descend through the generators largest-first; position j carries the
    // still-unassigned value.
    auto descend = [&](auto&& self, std::size_t j, long long rem) -> void {
        if (++nodes > budget.max_factorization_nodes)
            throw ResourceLimit("factorization enumeration budget exhausted (" +
                                std::to_string(budget.max_factorization_nodes) + ")");
        if (j == 0) {
            if (rem % gens[0] == 0) {
                cur[0] = static_cast<int>(rem / gens[0]);
                out.push_back(cur);
                cur[0] = 0;
            }
            return;
        }
        long long max_c = rem / gens[j];
        for (long long c = 0; c <= max_c; ++c) {
            cur[j] = static_cast<int>(c);
            self(self, j - 1, rem - c * gens[j]);
        }
        cur[j] = 0;
    };
    descend(descend, e - 1, s);

    std::sort(out.begin(), out.end());
    return out;
}

FactorizationGraph FactorizationGraph::build(std::span<const long long> gens,
                                             long long s, const Budget& budget) {
    FactorizationGraph g;
    g.element = s;
    g.vertices = factorizations(gens, s, budget);

    const std::size_t n = g.vertices.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    auto shares_support = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t v = 0; v < a.size(); ++v)
            if (a[v] > 0 && b[v] > 0) return true;
        return false;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (shares_support(g.vertices[i], g.vertices[j])) {
                g.edges.emplace_back(i, j);
                std::size_t a = find(i), b = find(j);
                if (a != b) parent[a] = b;
            }

    std::size_t components = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (find(i) == i) ++components;
    g.component_count = components;
    return g;
}

namespace {

void certify_or_throw(std::span<const long long> gens,
                      std::span<const Binomial> set, const Budget& budget) {
    auto res = gastinger_check(set, gens, 0, budget);
    if (!res.certified) {
        std::string dim = res.dimension ? std::to_string(*res.dimension) : "infinite";
        throw NotCertified("candidate set does not generate the defining ideal "
                           "(quotient dimension " + dim + ", expected " +
                           std::to_string(gens[0]) + ")");
    }
}

}  // namespace

PresentationReport mu_and_betti_degrees(std::span<const long long> gens,
                                        std::vector<Binomial> generating_set,
                                        const Budget& budget) {
    certify_or_throw(gens, generating_set, budget);
    auto weights = to_weights(gens);

    std::vector<long long> degrees;
    for (const Binomial& b : generating_set) degrees.push_back(b.weighted_degree(weights));
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    PresentationReport report;
    report.generating_set = std::move(generating_set);
    for (long long s : degrees) {
        auto graph = FactorizationGraph::build(gens, s, budget);
        if (graph.component_count > 1)
            report.betti_degrees[s] = graph.component_count - 1;
    }
    for (const auto& [s, c] : report.betti_degrees) report.mu += c;
    return report;
}

bool minimality_check(std::span<const long long> gens,
                      std::span<const Binomial> candidate, const Budget& budget) {
    certify_or_throw(gens, candidate, budget);
    auto weights = to_weights(gens);

    std::map<long long, std::size_t> per_degree;
    for (const Binomial& b : candidate) ++per_degree[b.weighted_degree(weights)];

    for (const auto& [s, count] : per_degree) {
        auto graph = FactorizationGraph::build(gens, s, budget);
        if (graph.component_count < 1 || count != graph.component_count - 1) return false;
    }
    return true;
}

bool same_ideal(std::span<const long long> gens, std::span<const Binomial> a,
                std::span<const Binomial> b, const Budget& budget) {
    auto weights = to_weights(gens);
    TermOrder ord = TermOrder::weighted_lex(weights);

    auto reduces = [&](std::span<const Binomial> set, std::span<const Binomial> against) {
        GroebnerBasis gb = buchberger({against.begin(), against.end()}, ord, budget);
        for (const Binomial& f : set)
            if (normal_form(f, gb.elements, ord)) return false;
        return true;
    };
    return reduces(a, b) && reduces(b, a);
}

}  // namespace sgforge

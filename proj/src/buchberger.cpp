#include "sgforge/buchberger.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <set>

namespace sgforge {

std::optional<Binomial> s_polynomial(const Binomial& f, const Binomial& g,
                                     const TermOrder& ord) {
    Binomial nf = f.normalized(ord);
    Binomial ng = g.normalized(ord);
    Monomial l = lcm(nf.lead(), ng.lead());
    // S = (l / lt f) f - (l / lt g) g; the lead terms cancel, leaving the
    // scaled tails (global sign discarded).
    std::optional<Monomial> from_f, from_g;
    if (nf.tail()) from_f = l.divided_by(nf.lead()) * *nf.tail();
    if (ng.tail()) from_g = l.divided_by(ng.lead()) * *ng.tail();
    if (!from_f && !from_g) return std::nullopt;
    if (from_f && from_g) return Binomial::make(std::move(*from_g), std::move(*from_f), ord);
    return Binomial::monomial(from_f ? std::move(*from_f) : std::move(*from_g));
}

namespace {

// Indices of basis elements in the reducer scan order.
std::vector<std::size_t> reducer_order(std::span<const Binomial> basis,
                                       const TermOrder& ord, ReducerRule rule) {
    std::vector<std::size_t> idx(basis.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        auto c = ord.compare(basis[a].lead(), basis[b].lead());
        if (c != std::strong_ordering::equal)
            return rule == ReducerRule::FirstByLead ? c == std::strong_ordering::less
                                                    : c == std::strong_ordering::greater;
        return false;
    });
    return idx;
}

const Binomial* find_reducer(const Monomial& m, std::span<const Binomial> basis,
                             std::span<const std::size_t> scan,
                             const Binomial* skip) {
    for (std::size_t i : scan) {
        const Binomial& b = basis[i];
        if (&b == skip) continue;
        if (b.lead().divides(m)) return &b;
    }
    return nullptr;
}

std::optional<Binomial> normal_form_impl(const Binomial& f0,
                                         std::span<const Binomial> basis,
                                         const TermOrder& ord,
                                         std::span<const std::size_t> scan,
                                         const Binomial* skip) {
    Binomial cur = f0.normalized(ord);
    std::optional<Monomial> lead = cur.lead();
    std::optional<Monomial> tail = cur.tail();

    // Reduce the lead until no basis lead divides it. Each step strictly
    // lowers the larger monomial, so this terminates.
    for (;;) {
        const Binomial* b = find_reducer(*lead, basis, scan, skip);
        if (!b) break;
        Monomial q = lead->divided_by(b->lead());
        std::optional<Monomial> repl;  // the lead's replacement q * tail(b)
        if (b->tail()) repl = q * *b->tail();

        if (!repl && !tail) return std::nullopt;  // monomial killed by monomial
        if (!repl) {
            lead = std::move(tail);
            tail.reset();
            continue;
        }
        if (!tail) {
            lead = std::move(repl);
            continue;
        }
        if (*repl == *tail) return std::nullopt;  // the two terms cancel
        if (ord.greater(*repl, *tail)) {
            lead = std::move(repl);
        } else {
            lead = std::move(tail);
            tail = std::move(repl);
        }
    }

    // Lead is irreducible; bring the tail to normal form as well.
    while (tail) {
        const Binomial* b = find_reducer(*tail, basis, scan, skip);
        if (!b) break;
        if (!b->tail()) {
            tail.reset();
            break;
        }
        Monomial next = tail->divided_by(b->lead()) * *b->tail();
        assert(ord.greater(*lead, next));
        tail = std::move(next);
    }

    if (!tail) return Binomial::monomial(std::move(*lead));
    return Binomial::make(std::move(*lead), std::move(*tail), ord);
}

}  // namespace

std::optional<Binomial> normal_form(const Binomial& f, std::span<const Binomial> basis,
                                    const TermOrder& ord, ReducerRule rule) {
    auto scan = reducer_order(basis, ord, rule);
    return normal_form_impl(f, basis, ord, scan, nullptr);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const Binomial& b : elements) out.push_back(b.lead());
    return out;
}

namespace {

struct SPair {
    long long degree;  // schedule degree of the lcm
    Monomial lcm_mon;
    std::size_t i, j;
};

struct SPairGreater {
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.degree != b.degree) return a.degree > b.degree;
        if (a.lcm_mon.exps() != b.lcm_mon.exps()) return b.lcm_mon.exps() < a.lcm_mon.exps();
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    }
};

}  // namespace

GroebnerBasis buchberger(std::vector<Binomial> gens, const TermOrder& ord,
                         const Budget& budget) {
    std::vector<Binomial> basis;
    basis.reserve(gens.size());
    for (const Binomial& g : gens) {
        Binomial n = g.normalized(ord);
        if (std::find(basis.begin(), basis.end(), n) == basis.end())
            basis.push_back(std::move(n));
    }

    std::priority_queue<SPair, std::vector<SPair>, SPairGreater> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            // Coprime leads: the S-polynomial always reduces to zero.
            if (gcd(basis[i].lead(), basis[j].lead()).is_one()) continue;
            Monomial l = lcm(basis[i].lead(), basis[j].lead());
            pairs.push(SPair{ord.schedule_degree(l), std::move(l), i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    std::uint64_t processed = 0;
    while (!pairs.empty()) {
        SPair p = pairs.top();
        pairs.pop();
        if (++processed > budget.max_spairs)
            throw ResourceLimit("S-pair budget exhausted (" +
                                std::to_string(budget.max_spairs) + ")");
        auto s = s_polynomial(basis[p.i], basis[p.j], ord);
        if (!s) continue;
        auto r = normal_form(*s, basis, ord);
        if (!r) continue;
        basis.push_back(std::move(*r));
        push_pairs(basis.size() - 1);
    }

    // Minimalize: drop elements whose lead another kept lead divides.
    std::vector<std::size_t> by_lead(basis.size());
    std::iota(by_lead.begin(), by_lead.end(), std::size_t{0});
    std::stable_sort(by_lead.begin(), by_lead.end(), [&](std::size_t a, std::size_t b) {
        return ord.compare(basis[a].lead(), basis[b].lead()) == std::strong_ordering::less;
    });
    std::vector<Binomial> kept;
    for (std::size_t i : by_lead) {
        bool covered = false;
        for (const Binomial& k : kept)
            if (k.lead().divides(basis[i].lead())) {
                covered = true;
                break;
            }
        if (!covered) kept.push_back(basis[i]);
    }

    // Interreduce tails until stable; leads are untouched by construction.
    auto scan = reducer_order(kept, ord, ReducerRule::FirstByLead);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            auto r = normal_form_impl(kept[i], kept, ord, scan, &kept[i]);
            assert(r && r->lead() == kept[i].lead());
            if (*r != kept[i]) {
                kept[i] = std::move(*r);
                changed = true;
            }
        }
    }

    return GroebnerBasis{std::move(kept), true};
}

std::optional<std::uint64_t> quotient_dimension(std::span<const Monomial> leads) {
    assert(!leads.empty());
    const std::size_t nvars = leads[0].nvars();
    for (const Monomial& m : leads)
        if (m.is_one()) return 0;

    // Finite dimension needs a pure power of every variable among the leads.
    for (std::size_t v = 0; v < nvars; ++v) {
        bool bounded = false;
        for (const Monomial& m : leads) {
            if (m.exp(v) == 0) continue;
            bool pure = true;
            for (std::size_t w = 0; w < nvars; ++w)
                if (w != v && m.exp(w) > 0) pure = false;
            if (pure) {
                bounded = true;
                break;
            }
        }
        if (!bounded) return std::nullopt;
    }

    auto standard = [&](const Monomial& m) {
        for (const Monomial& l : leads)
            if (l.divides(m)) return false;
        return true;
    };

    std::set<Monomial, MonomialKeyLess> seen;
    std::queue<Monomial> frontier;
    Monomial one = Monomial::one(nvars);
    assert(standard(one));
    seen.insert(one);
    frontier.push(one);
    std::uint64_t count = 0;
    while (!frontier.empty()) {
        Monomial m = std::move(frontier.front());
        frontier.pop();
        ++count;
        for (std::size_t v = 0; v < nvars; ++v) {
            Monomial next = m * Monomial::var(nvars, v);
            if (!standard(next)) continue;
            if (seen.insert(next).second) frontier.push(next);
        }
    }
    return count;
}

std::optional<Binomial> project_to_zero(const Binomial& f,
                                        std::span<const std::size_t> vars) {
    bool lead_dies = f.lead().involves(vars);
    bool tail_dies = f.tail() && f.tail()->involves(vars);
    if (f.is_monomial()) return lead_dies ? std::nullopt : std::optional<Binomial>(f);
    if (lead_dies && tail_dies) return std::nullopt;
    if (lead_dies) return Binomial::monomial(*f.tail());
    if (tail_dies) return Binomial::monomial(f.lead());
    return f;
}

GastingerResult gastinger_check(std::span<const Binomial> j_gens,
                                std::span<const long long> weights,
                                std::size_t zero_var, const Budget& budget) {
    const std::size_t nvars = weights.size();
    if (zero_var >= nvars) throw InvalidParams("zero_var out of range");
    long long d = 0;
    for (long long w : weights) {
        if (w <= 0) throw InvalidParams("weights must be positive");
        d = std::gcd(d, w);
    }
    if (d != 1) throw NotCoprime(d);

    for (const Binomial& f : j_gens)
        if (!f.homogeneous(weights)) throw NotHomogeneous(f.str());

    TermOrder ord = TermOrder::lex(nvars);
    const std::size_t kill[] = {zero_var};
    std::vector<Binomial> sub;
    for (const Binomial& f : j_gens) {
        auto p = project_to_zero(f, kill);
        if (p) sub.push_back(p->normalized(ord));
    }
    sub.push_back(Binomial::monomial(Monomial::var(nvars, zero_var)));

    GroebnerBasis gb = buchberger(std::move(sub), ord, budget);
    GastingerResult out;
    out.leading_ideal = gb.leading_monomials();
    out.dimension = quotient_dimension(out.leading_ideal);
    out.certified = out.dimension &&
                    *out.dimension == static_cast<std::uint64_t>(weights[zero_var]);
    return out;
}

}  // namespace sgforge

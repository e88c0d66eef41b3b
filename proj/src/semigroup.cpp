#include "sgforge/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

namespace sgforge {

namespace {

// Bounded knapsack reachability; only used while minimalizing generator lists.
bool representable(const std::vector<long long>& gens, long long x) {
    if (x < 0) return false;
    if (x == 0) return true;
    std::vector<char> can(static_cast<std::size_t>(x) + 1, 0);
    can[0] = 1;
    for (long long g : gens) {
        if (g > x) continue;
        for (long long v = g; v <= x; ++v)
            if (can[static_cast<std::size_t>(v - g)]) can[static_cast<std::size_t>(v)] = 1;
    }
    return can[static_cast<std::size_t>(x)] != 0;
}

std::vector<long long> minimal_system(std::vector<long long> gens) {
    if (gens.empty()) throw EmptyGenerators();
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.front() <= 0) throw InvalidParams("generators must be positive");

    std::vector<long long> kept;
    for (long long g : gens) {
        // A sum of two or more earlier generators is at least twice the least
        // one, so small candidates are kept without the reachability test.
        if (kept.empty() || g < 2 * kept.front()) {
            kept.push_back(g);
            continue;
        }
        if (!representable(kept, g)) kept.push_back(g);
    }

    long long d = 0;
    for (long long g : kept) d = std::gcd(d, g);
    if (d != 1) throw NotCoprime(d);
    return kept;
}

// Least semigroup element in each residue class mod a: single-source shortest
// paths on the graph with vertices 0..a-1 and an edge r -> (r+g) mod a of
// weight g per generator g.
AperyTable dijkstra_apery(const std::vector<long long>& gens, long long a) {
    const auto size = static_cast<std::size_t>(a);
    constexpr long long inf = std::numeric_limits<long long>::max();
    std::vector<long long> dist(size, inf);
    dist[0] = 0;

    using Node = std::pair<long long, long long>;  // (distance, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (long long g : gens) {
            if (g % a == 0) continue;
            long long nr = (r + g) % a;
            long long nd = d + g;
            if (nd < dist[static_cast<std::size_t>(nr)]) {
                dist[static_cast<std::size_t>(nr)] = nd;
                queue.emplace(nd, nr);
            }
        }
    }
    // gcd(gens) = 1 makes every residue reachable.
    assert(std::find(dist.begin(), dist.end(), inf) == dist.end());
    return AperyTable{a, std::move(dist)};
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<long long> generators)
    : generators_(minimal_system(std::move(generators))) {}

const AperyTable& NumericalSemigroup::apery_multiplicity() const {
    std::call_once(cache_->once, [this] {
        cache_->table = dijkstra_apery(generators_, multiplicity());
    });
    return cache_->table;
}

bool NumericalSemigroup::contains(long long x) const {
    if (x < 0) return false;
    return apery_multiplicity().contains(x);
}

AperyTable NumericalSemigroup::apery(long long a) const {
    if (a <= 0 || !contains(a)) throw NotInSemigroup(a);
    if (a == multiplicity()) return apery_multiplicity();
    return dijkstra_apery(generators_, a);
}

SemigroupInvariants NumericalSemigroup::invariants() const {
    const AperyTable& ap = apery_multiplicity();
    const long long m = ap.modulus;

    SemigroupInvariants out;
    long long max_entry = 0;
    unsigned __int128 sum = 0;
    for (long long w : ap.entries) {
        max_entry = std::max(max_entry, w);
        sum += static_cast<unsigned long long>(w);

        // w is maximal in the Apery set under the divisibility order iff
        // adding any generator leaves the set.
        bool maximal = true;
        for (long long g : generators_) {
            long long v = w + g;
            if (ap.entries[static_cast<std::size_t>(v % m)] == v) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.pseudo_frobenius.push_back(w - m);
    }
    std::sort(out.pseudo_frobenius.begin(), out.pseudo_frobenius.end());
    out.type = out.pseudo_frobenius.size();
    out.frobenius = max_entry - m;
    // Apery-sum identity: genus = (sum of entries)/m - (m-1)/2.
    auto num = static_cast<__int128>(2) * static_cast<__int128>(sum) -
               static_cast<__int128>(m) * (m - 1);
    out.genus = static_cast<long long>(num / (2 * static_cast<__int128>(m)));
    return out;
}

ConcatResult concat_semigroup(long long a, long long d, long long len1,
                              long long b, long long len2) {
    if (a <= 0 || d <= 0 || b <= 0 || len1 <= 0 || len2 <= 0)
        throw InvalidParams("concat parameters must be positive");
    if (std::gcd(a, d) != 1) throw NotCoprime(std::gcd(a, d));

    std::vector<long long> seq;
    seq.reserve(static_cast<std::size_t>(len1 + len2));
    for (long long k = 0; k < len1; ++k) seq.push_back(a + k * d);
    for (long long k = 0; k < len2; ++k) seq.push_back(b + k * d);

    NumericalSemigroup sg(seq);

    std::vector<long long> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    bool duplicates = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    bool minimal = !duplicates && sorted == sg.generators();
    return ConcatResult{std::move(sg), minimal};
}

}  // namespace sgforge

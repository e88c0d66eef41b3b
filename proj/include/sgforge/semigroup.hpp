#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <vector>

#include "sgforge/errors.hpp"

namespace sgforge {

/// Apery table of a numerical semigroup with respect to one of its nonzero
/// elements a: entries[r] is the least semigroup element congruent to r mod a.
/// The entries are pairwise distinct and there are exactly a of them.
struct AperyTable {
    long long modulus = 0;
    std::vector<long long> entries;

    /// Membership through the table: x belongs to the semigroup iff it is at
    /// least the table entry of its residue class.
    bool contains(long long x) const {
        return x >= 0 && x >= entries[static_cast<std::size_t>(x % modulus)];
    }
};

struct SemigroupInvariants {
    long long frobenius = 0;  // largest integer outside the semigroup (-1 for N)
    long long genus = 0;      // number of gaps
    std::vector<long long> pseudo_frobenius;  // sorted ascending
    std::size_t type = 0;     // |pseudo_frobenius|
};

/// A numerical semigroup given by its (unique) minimal generating system.
/// Immutable after construction; safe to share across threads.
class NumericalSemigroup {
public:
    /// Validates positivity and gcd 1, removes redundant generators.
    /// Throws EmptyGenerators, InvalidParams, NotCoprime.
    explicit NumericalSemigroup(std::vector<long long> generators);

    const std::vector<long long>& generators() const { return generators_; }
    long long multiplicity() const { return generators_.front(); }
    std::size_t embedding_dimension() const { return generators_.size(); }

    bool contains(long long x) const;

    /// Apery table with respect to a; requires a > 0 and a in the semigroup.
    /// Computed by shortest-path relaxation on the residue graph mod a.
    AperyTable apery(long long a) const;

    /// Divisibility order: a <= b iff b - a is in the semigroup.
    bool leq(long long a, long long b) const { return contains(b - a); }

    /// Frobenius number, genus (via the Apery-sum identity), pseudo-Frobenius
    /// elements and type, all derived from the multiplicity Apery table.
    SemigroupInvariants invariants() const;

    /// Cached Apery table with respect to the multiplicity.
    const AperyTable& apery_multiplicity() const;

private:
    std::vector<long long> generators_;

    struct Cache {
        std::once_flag once;
        AperyTable table;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct ConcatResult {
    NumericalSemigroup semigroup;
    bool minimal = false;  // the supplied sequence was already a minimal system
};

/// Semigroup generated by two arithmetic runs sharing a common difference:
/// {a, a+d, ..., a+(len1-1)d} followed by {b, b+d, ..., b+(len2-1)d}.
/// Requires gcd(a, d) = 1; the combined list must have gcd 1.
ConcatResult concat_semigroup(long long a, long long d, long long len1,
                              long long b, long long len2);

}  // namespace sgforge

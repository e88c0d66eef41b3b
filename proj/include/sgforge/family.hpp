#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgforge/budget.hpp"
#include "sgforge/poly.hpp"
#include "sgforge/semigroup.hpp"

namespace sgforge {

/// Parameters of one member of the built-in concatenation family: embedding
/// dimension e >= 4 and index >= 2 determine n = index*(e-3) + (e-1) and the
/// e generators
///   n^2 + (e-2)n + (e-4+j)          for j = 0..e-3,
///   n^2 + (e-1)n + (2e-7),
///   n^2 + (e-1)n + (2e-6).
struct FamilyParams {
    int e = 0;
    long long index = 0;
    int q = 0;  // concatenation shift; this family uses q = 0
    long long n = 0;
    std::vector<long long> generators;
};

/// Builds the parameter block and checks the generator list is minimal.
/// Throws InvalidParams for e < 4 or index < 2.
FamilyParams family(int e, long long index);

/// Closed-form Apery set of the e = 4 member with respect to its
/// multiplicity; sorted, distinctness and cardinality n^2 + 2n verified.
std::vector<long long> closed_apery_e4(const FamilyParams& p);

/// Closed-form pseudo-Frobenius set of the e = 4 member; cardinality 2n.
std::vector<long long> closed_pf_e4(const FamilyParams& p);

/// Closed-form Apery set of the e = 5 member; cardinality n^2 + 3n + 1.
std::vector<long long> closed_apery_e5(const FamilyParams& p);

/// Closed-form pseudo-Frobenius set of the e = 5 member; cardinality 3n/2 + 3.
std::vector<long long> closed_pf_e5(const FamilyParams& p);

/// Closed-form generating set (n + index + 9 homogeneous binomials) of the
/// defining ideal of the e = 5 member, in variables x0..x4.
std::vector<Binomial> closed_ideal_generators_e5(const FamilyParams& p);

struct VerificationReport {
    FamilyParams params;

    bool apery_match = false;
    std::vector<long long> apery_only_closed;   // closed form \ generic
    std::vector<long long> apery_only_generic;  // generic \ closed form

    bool pf_match = false;
    std::vector<long long> pf_only_closed;
    std::vector<long long> pf_only_generic;

    long long type_computed = 0;
    long long type_expected = 0;  // 2n for e = 4, 3n/2 + 3 for e = 5

    std::optional<std::size_t> mu_computed;  // absent when the ideal step was skipped
    std::size_t mu_expected = 0;             // 2(n+1) for e = 4, n + index + 9 for e = 5
    std::optional<bool> gastinger_certified;
    std::optional<bool> minimality_certified;  // e = 5 candidate only
    std::optional<bool> mu_ge_n_plus_2;

    bool all_match() const;
};

struct VerifyOptions {
    Budget budget;
    long long max_apery_n = 10'000;  // refuse larger members outright
    long long max_ideal_n_e4 = 7;    // skip the from-scratch ideal step beyond this
    long long max_ideal_n_e5 = 10;   // skip the candidate certification beyond this
};

/// Verifies the closed forms of one family member against the generic
/// algorithms: Apery set, pseudo-Frobenius set and type, and the minimal
/// generator count of the defining ideal (closed-form candidate set for
/// e = 5, elimination-derived generators for e = 4). The ideal step runs
/// only up to the per-e cutoffs above; mismatches are recorded, never
/// patched. Throws UnsupportedE for e outside {4, 5}.
VerificationReport verify_family(int e, long long index, const VerifyOptions& opts = {});

}  // namespace sgforge

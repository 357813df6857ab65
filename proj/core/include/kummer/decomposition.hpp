#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kummer/hodge_diamond.hpp"
#include "kummer/motive.hpp"
#include "kummer/partition.hpp"

namespace kummer {

/**
 * One stratum family of the Hilbert-Chow fibration over the summation-zero
 * locus, indexed by a partition lambda of n. The gcd(lambda)^4 torsion points
 * label isomorphic copies; only their count is tracked.
 */
struct Stratum {
    Partition partition;
    std::int64_t torsion_multiplicity;  // gcd(lambda)^4 copies
    int dim_base_stratum;               // 2*length - 2
    int dim_total_stratum;              // n + length - 2
    int dim_fiber;                      // n - length
    int tate_shift;                     // n - length

    /// (2n-2) - dim_base_stratum == 2*dim_fiber: the fibration drops
    /// dimension exactly twice as fast as the fibers grow.
    bool semi_small_equality() const;
};

struct StrataReport {
    int n = 0;
    std::vector<Stratum> strata;             // partition enumeration order
    std::int64_t total_strata_count = 0;     // sum of torsion multiplicities
    std::int64_t total_motive_summands = 0;  // distinct summand shapes, one per partition
    bool semi_small_verified = false;
};

/// One stratum per partition of n, all dimension fields populated and the
/// semi-small equality checked. Throws std::invalid_argument for n < 1.
StrataReport strata_catalog(int n);

/// The decomposition of the product of the surface with the n-th Kummer
/// variety: one term per partition, multiplicity gcd^4, twist n - length.
MotiveExpr product_motive(int n);

/**
 * Hodge diamond of the normalized closed stratum attached to lambda,
 * computed as realize(Sym^{a_1} h(A) (x) ... ) / h(A). The quotient is exact
 * because the product of the surface with the stratum is a torsion quotient
 * of the sym-power product; torsion translations realize trivially, so the
 * result does not depend on which torsion point labels the copy.
 */
HodgeDiamond stratum_motive(const Partition& lambda, int n);
HodgeDiamond stratum_motive(const Partition& lambda, int n, RealizationCache& cache);

/// Route one: sum over strata of gcd^4 twisted copies of the per-stratum
/// diamonds, each obtained from its own exact division.
HodgeDiamond kummer_diamond_via_theorem(int n);
HodgeDiamond kummer_diamond_via_theorem(int n, RealizationCache& cache);

/// Route two: realize the full product motive, then strip the surface factor
/// with a single global exact division.
HodgeDiamond kummer_diamond_via_corollary(int n);
HodgeDiamond kummer_diamond_via_corollary(int n, RealizationCache& cache);

struct VerificationCheck {
    std::string name;
    int n = 0;
    bool passed = false;
    std::string detail;  // populated on failure
};

struct VerificationReport {
    int n_max = 0;
    std::vector<VerificationCheck> checks;
    bool all_passed() const;
};

/**
 * Runs the full invariant battery for every 2 <= n <= n_max: route equality,
 * exact divisibility of every sym-power product by h(A), Poincare duality,
 * Hodge symmetry, b0 = 1, b1 = 0, top Betti number 1 in degree 4(n-1),
 * h^{2,0} = 1, and the semi-small equality on every stratum. Failures are
 * reported, never thrown. Throws std::invalid_argument for n_max < 2.
 */
VerificationReport verify_suite(int n_max);

}  // namespace kummer

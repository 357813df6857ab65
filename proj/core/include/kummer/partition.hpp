#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace kummer {

/**
 * An integer partition of n, stored as a nonincreasing sequence of positive
 * parts together with the derived data the strata bookkeeping needs: the
 * length, the multiplicity of each part value, and the gcd of the parts.
 *
 * Immutable value type; construction normalizes the part order.
 */
class Partition {
public:
    /// Throws std::invalid_argument on an empty list or a nonpositive part.
    explicit Partition(std::vector<int> parts);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    /// Part value i -> number of times i appears.
    const std::map<int, int>& multiplicities() const { return multiplicities_; }

    int gcd_of_parts() const { return gcd_; }

    /// Compact display form, e.g. "2+1+1".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
    int gcd_ = 0;
    std::map<int, int> multiplicities_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/**
 * All partitions of n in reverse lexicographic order, e.g. for n = 4:
 * (4), (3,1), (2,2), (2,1,1), (1,1,1,1). The order is part of the output
 * contract; catalogs and serialized reports follow it.
 *
 * Throws std::invalid_argument for n < 1.
 */
std::vector<Partition> enumerate_partitions(int n);

/**
 * Number of torsion points indexing the components attached to lambda on an
 * abelian surface: gcd(lambda)^4.
 */
std::int64_t torsion_component_count(const Partition& lambda);

/**
 * Refinement partial order: true iff the parts of `fine` can be grouped into
 * blocks whose sums are exactly the parts of `coarse` (fine >= coarse).
 * Exhaustive backtracking over block assignments; intended for desk-scale n.
 *
 * Throws std::invalid_argument when the two partitions sum differently.
 */
bool refines(const Partition& fine, const Partition& coarse);

}  // namespace kummer

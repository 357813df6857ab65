#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kummer {

/// Exact arbitrary-precision integer used for every cohomological dimension.
using Integer = boost::multiprecision::cpp_int;

struct Bidegree {
    int p = 0;
    int q = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Raised when a quotient that is mathematically forced to be exact is not.
/// Seeing this means a formula was implemented wrong, not that the input is bad.
class InexactDivisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A Hodge diamond: finitely supported map (p,q) -> h^{p,q} with h^{p,q} > 0
 * for every stored bidegree. Zero entries are never stored, so structural
 * equality is semantic equality. Parity of a class is (p+q) mod 2 and drives
 * the sign rules of the symmetric-power operations.
 */
class HodgeDiamond {
public:
    HodgeDiamond() = default;

    const std::map<Bidegree, Integer>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// h^{p,q}, zero when absent.
    Integer entry(int p, int q) const;

    /// Adds v >= 0 to h^{p,q}. Throws std::invalid_argument on negative v
    /// or negative bidegree.
    void add(int p, int q, const Integer& v);

    /// Largest p + q over the support; -1 for the empty diamond.
    int top_degree() const;
    int max_p() const;
    int max_q() const;

    /// Sum of all entries.
    Integer total_dimension() const;

    friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

private:
    std::map<Bidegree, Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const HodgeDiamond& d);

/// {(0,0): 1}, the tensor unit.
HodgeDiamond unit_diamond();

/// h^{p,q} = C(2,p)*C(2,q): the exterior algebra on a four-dimensional H^1.
HodgeDiamond diamond_of_abelian_surface();

/// Entrywise a + mult*b. mult must be nonnegative.
HodgeDiamond direct_sum(const HodgeDiamond& a, const HodgeDiamond& b, std::int64_t mult);

/// Convolution product (Kuenneth): result^{p,q} = sum a^{p1,q1} b^{p-p1,q-q1}.
HodgeDiamond tensor(const HodgeDiamond& a, const HodgeDiamond& b);

/// Shifts every entry (p,q) -> (p+m, q+m). m must be nonnegative.
HodgeDiamond tate_twist(const HodgeDiamond& a, int m);

/**
 * k-th symmetric power in the sign-graded sense: even-parity classes behave
 * symmetrically, odd-parity classes antisymmetrically. Computed by truncating
 * the product generating function
 *
 *   prod_{p,q} (1 - (-1)^{p+q} z x^p y^q)^{-(-1)^{p+q} h^{p,q}}
 *
 * at z^k and taking the top coefficient.
 */
HodgeDiamond sym_power(const HodgeDiamond& a, int k);

/// [Sym^0 a, ..., Sym^max_k a] from one truncated product expansion.
std::vector<HodgeDiamond> symmetric_product_series(const HodgeDiamond& a, int max_k);

/**
 * Same value as sym_power, reached through the Newton/Adams recurrence
 *   k Sym^k = sum_{i=1..k} psi^i (x) Sym^{k-i}
 * on signed diamonds. Kept as an independent cross-check of the series path.
 */
HodgeDiamond sym_power_by_recurrence(const HodgeDiamond& a, int k);

/**
 * Exact quotient q with tensor(q, den) == num and q >= 0 entrywise, computed
 * by synthetic division bidegree by bidegree (total degree, then p). den must
 * have an entry at (0,0). Any negative or fractional intermediate, or a
 * nonzero remainder, raises InexactDivisionError.
 */
HodgeDiamond exact_divide(const HodgeDiamond& num, const HodgeDiamond& den);

struct NumericalInvariants {
    std::vector<Integer> betti;    // betti[k] = sum_{p+q=k} h^{p,q}
    Integer euler = 0;             // alternating sum of betti
    bool hodge_symmetric = true;   // h^{p,q} == h^{q,p} everywhere
    std::int64_t duality_defect = 0;  // bidegrees with h^{p,q} != h^{top-p,top-q}
};

/// Betti vector, Euler characteristic, Hodge symmetry, and the duality defect
/// measured against the caller-supplied top degree.
NumericalInvariants numerical_invariants(const HodgeDiamond& a, int top_degree);

/// Exact binomial coefficient; zero when k < 0 or n < k for integral n >= 0.
Integer binomial(const Integer& n, int k);

}  // namespace kummer

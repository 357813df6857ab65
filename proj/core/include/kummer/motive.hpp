#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "kummer/hodge_diamond.hpp"
#include "kummer/partition.hpp"

namespace kummer {

/**
 * One formal summand: a product of symmetric powers of h(A) twisted by a
 * power of the Lefschetz class, with an integer multiplicity.
 *
 * sym_factors is the multiplicities map of the source partition: part value
 * i -> a_i, realizing as the tensor product over i of Sym^{a_i} h(A).
 */
struct MotiveTerm {
    std::map<int, int> sym_factors;
    int tate_shift = 0;
    std::int64_t multiplicity = 1;
    friend bool operator==(const MotiveTerm&, const MotiveTerm&) = default;
};

/// A formal direct sum of MotiveTerms plus a free-text provenance label.
struct MotiveExpr {
    std::vector<MotiveTerm> terms;
    std::string label;
    friend bool operator==(const MotiveExpr&, const MotiveExpr&) = default;
};

/// The single term Sym^{a_1} h(A) (x) ... (x) Sym^{a_r} h(A) for lambda,
/// with no twist and multiplicity one.
MotiveExpr motive_of_sym_quotient(const Partition& lambda);

/// Sums multiplicities of terms sharing (sym_factors, tate_shift). Keeps the
/// first-seen order of the distinct keys.
MotiveExpr merge_terms(const MotiveExpr& e);

/**
 * Memo for the realization pipeline. Every partition of n reuses the same
 * small pool of symmetric powers of h(A), so both the per-k powers and the
 * per-term products are cached. Safe for concurrent use.
 */
class RealizationCache {
public:
    /// sym_power(diamond_of_abelian_surface(), k), memoized.
    HodgeDiamond surface_sym_power(int k);

    /// Tensor product of surface sym powers for a multiset of exponents.
    HodgeDiamond sym_product(std::vector<int> exponents);

private:
    std::mutex mu_;
    std::map<int, HodgeDiamond> powers_;
    std::map<std::vector<int>, HodgeDiamond> products_;
};

/// Hodge realization: sum over terms of
/// multiplicity * L^{tate_shift} (x) prod_i Sym^{a_i} h(A).
HodgeDiamond realize(const MotiveExpr& e);
HodgeDiamond realize(const MotiveExpr& e, RealizationCache& cache);

/// Stable JSON shape used by the CLI:
/// {"label": ..., "terms": [{"multiplicity", "parts_multiplicities", "tate_shift"}]}.
std::string motive_expr_to_json(const MotiveExpr& e);
MotiveExpr motive_expr_from_json(const std::string& text);

}  // namespace kummer

#include "kummer/hodge_diamond.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace kummer {

namespace {

// Signed scratch space; only the public results are constrained to be >= 0.
using SignedDiamond = std::map<Bidegree, Integer>;

void signed_add(SignedDiamond& m, Bidegree d, const Integer& v) {
    auto it = m.find(d);
    if (it == m.end()) {
        if (v != 0) m.emplace(d, v);
        return;
    }
    it->second += v;
    if (it->second == 0) m.erase(it);
}

}  // namespace

Integer HodgeDiamond::entry(int p, int q) const {
    auto it = entries_.find({p, q});
    return it == entries_.end() ? Integer(0) : it->second;
}

void HodgeDiamond::add(int p, int q, const Integer& v) {
    if (p < 0 || q < 0)
        throw std::invalid_argument("bidegrees are nonnegative");
    if (v < 0)
        throw std::invalid_argument("diamond entries are nonnegative");
    if (v == 0) return;
    entries_[{p, q}] += v;
}

int HodgeDiamond::top_degree() const {
    int top = -1;
    for (const auto& [d, v] : entries_) top = std::max(top, d.p + d.q);
    return top;
}

int HodgeDiamond::max_p() const {
    int m = -1;
    for (const auto& [d, v] : entries_) m = std::max(m, d.p);
    return m;
}

int HodgeDiamond::max_q() const {
    int m = -1;
    for (const auto& [d, v] : entries_) m = std::max(m, d.q);
    return m;
}

Integer HodgeDiamond::total_dimension() const {
    Integer total = 0;
    for (const auto& [d, v] : entries_) total += v;
    return total;
}

std::ostream& operator<<(std::ostream& os, const HodgeDiamond& d) {
    os << '{';
    bool first = true;
    for (const auto& [deg, v] : d.entries()) {
        if (!first) os << ", ";
        first = false;
        os << '(' << deg.p << ',' << deg.q << "):" << v;
    }
    return os << '}';
}

HodgeDiamond unit_diamond() {
    HodgeDiamond d;
    d.add(0, 0, 1);
    return d;
}

HodgeDiamond diamond_of_abelian_surface() {
    HodgeDiamond d;
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            d.add(p, q, binomial(2, p) * binomial(2, q));
    return d;
}

HodgeDiamond direct_sum(const HodgeDiamond& a, const HodgeDiamond& b, std::int64_t mult) {
    if (mult < 0)
        throw std::invalid_argument("direct_sum multiplicity is nonnegative");
    HodgeDiamond out = a;
    if (mult == 0) return out;
    for (const auto& [d, v] : b.entries()) out.add(d.p, d.q, v * mult);
    return out;
}

HodgeDiamond tensor(const HodgeDiamond& a, const HodgeDiamond& b) {
    HodgeDiamond out;
    for (const auto& [da, va] : a.entries())
        for (const auto& [db, vb] : b.entries())
            out.add(da.p + db.p, da.q + db.q, va * vb);
    return out;
}

HodgeDiamond tate_twist(const HodgeDiamond& a, int m) {
    if (m < 0)
        throw std::invalid_argument("tate_twist shift is nonnegative");
    HodgeDiamond out;
    for (const auto& [d, v] : a.entries()) out.add(d.p + m, d.q + m, v);
    return out;
}

Integer binomial(const Integer& n, int k) {
    if (k < 0) return 0;
    Integer c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - i + 1;
        c /= i;  // exact: product of i consecutive integers
    }
    return c < 0 ? Integer(0) : c;
}

std::vector<HodgeDiamond> symmetric_product_series(const HodgeDiamond& a, int max_k) {
    if (max_k < 0)
        throw std::invalid_argument("symmetric_product_series needs max_k >= 0");
    std::vector<HodgeDiamond> series(static_cast<std::size_t>(max_k) + 1);
    series[0] = unit_diamond();
    for (const auto& [deg, h] : a.entries()) {
        const bool odd = (deg.p + deg.q) % 2 != 0;
        // z-coefficients of the factor attached to this bidegree:
        // even classes contribute 1/(1-t)^h, odd classes (1+t)^h.
        std::vector<Integer> coeff(static_cast<std::size_t>(max_k) + 1);
        coeff[0] = 1;
        for (int m = 1; m <= max_k; ++m)
            coeff[m] = odd ? binomial(h, m) : binomial(h + m - 1, m);

        std::vector<HodgeDiamond> next(static_cast<std::size_t>(max_k) + 1);
        for (int k = 0; k <= max_k; ++k) {
            for (int m = 0; m <= k; ++m) {
                if (coeff[m] == 0) continue;
                for (const auto& [d, v] : series[k - m].entries())
                    next[k].add(d.p + m * deg.p, d.q + m * deg.q, coeff[m] * v);
            }
        }
        series = std::move(next);
    }
    return series;
}

HodgeDiamond sym_power(const HodgeDiamond& a, int k) {
    if (k < 0)
        throw std::invalid_argument("sym_power needs k >= 0");
    return symmetric_product_series(a, k)[static_cast<std::size_t>(k)];
}

HodgeDiamond sym_power_by_recurrence(const HodgeDiamond& a, int k) {
    if (k < 0)
        throw std::invalid_argument("sym_power_by_recurrence needs k >= 0");
    // psi[i] has entry (-1)^{(p+q)(i+1)} h^{p,q} at (ip, iq).
    std::vector<SignedDiamond> psi(static_cast<std::size_t>(k) + 1);
    for (int i = 1; i <= k; ++i) {
        for (const auto& [d, v] : a.entries()) {
            bool flip = (d.p + d.q) % 2 != 0 && i % 2 == 0;
            signed_add(psi[i], {i * d.p, i * d.q}, flip ? -v : v);
        }
    }
    std::vector<SignedDiamond> sym(static_cast<std::size_t>(k) + 1);
    sym[0] = {{{0, 0}, 1}};
    for (int m = 1; m <= k; ++m) {
        SignedDiamond acc;
        for (int i = 1; i <= m; ++i)
            for (const auto& [d1, v1] : psi[i])
                for (const auto& [d2, v2] : sym[m - i])
                    signed_add(acc, {d1.p + d2.p, d1.q + d2.q}, v1 * v2);
        for (auto& [d, v] : acc) {
            if (v % m != 0)
                throw std::logic_error("Newton recurrence produced a fractional coefficient");
            v /= m;
        }
        std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        sym[m] = std::move(acc);
    }
    HodgeDiamond out;
    for (const auto& [d, v] : sym[k]) {
        if (v < 0)
            throw std::logic_error("Newton recurrence produced a negative coefficient");
        out.add(d.p, d.q, v);
    }
    return out;
}

HodgeDiamond exact_divide(const HodgeDiamond& num, const HodgeDiamond& den) {
    auto lead = den.entries().find({0, 0});
    if (lead == den.entries().end() || lead->second < 1)
        throw std::invalid_argument("exact_divide needs a divisor with an entry at (0,0)");
    HodgeDiamond quotient;
    if (num.empty()) return quotient;
    const Integer& c00 = lead->second;

    SignedDiamond rem(num.entries().begin(), num.entries().end());
    const int max_p = num.max_p();
    const int max_q = num.max_q();
    std::vector<Bidegree> order;
    order.reserve(static_cast<std::size_t>(max_p + 1) * (max_q + 1));
    for (int p = 0; p <= max_p; ++p)
        for (int q = 0; q <= max_q; ++q) order.push_back({p, q});
    std::sort(order.begin(), order.end(), [](Bidegree a, Bidegree b) {
        return std::pair(a.p + a.q, a.p) < std::pair(b.p + b.q, b.p);
    });

    auto describe = [](Bidegree d) {
        std::ostringstream os;
        os << '(' << d.p << ',' << d.q << ')';
        return os.str();
    };
    for (Bidegree d : order) {
        auto it = rem.find(d);
        if (it == rem.end() || it->second == 0) continue;
        if (it->second < 0)
            throw InexactDivisionError("negative quotient coefficient at " + describe(d));
        if (it->second % c00 != 0)
            throw InexactDivisionError("coefficient not divisible at " + describe(d));
        Integer qc = it->second / c00;
        quotient.add(d.p, d.q, qc);
        for (const auto& [e, v] : den.entries())
            signed_add(rem, {d.p + e.p, d.q + e.q}, -qc * v);
    }
    if (!rem.empty())
        throw InexactDivisionError("nonzero remainder at " + describe(rem.begin()->first));
    return quotient;
}

NumericalInvariants numerical_invariants(const HodgeDiamond& a, int top_degree) {
    NumericalInvariants inv;
    const int rows = std::max(a.top_degree(), top_degree) + 1;
    inv.betti.assign(static_cast<std::size_t>(std::max(rows, 0)), 0);
    for (const auto& [d, v] : a.entries()) {
        inv.betti[static_cast<std::size_t>(d.p + d.q)] += v;
        if (a.entry(d.q, d.p) != v) inv.hodge_symmetric = false;
        if (a.entry(top_degree - d.p, top_degree - d.q) != v) ++inv.duality_defect;
        // A class whose dual slot is empty is only seen from this side.
        if (top_degree - d.p >= 0 && top_degree - d.q >= 0 &&
            a.entries().count({top_degree - d.p, top_degree - d.q}) == 0)
            ++inv.duality_defect;
    }
    for (std::size_t k = 0; k < inv.betti.size(); ++k)
        inv.euler += (k % 2 == 0) ? inv.betti[k] : -inv.betti[k];
    return inv;
}

}  // namespace kummer

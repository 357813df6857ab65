#include "kummer/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kummer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("partition needs at least one part");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int part : parts_) {
        if (part <= 0)
            throw std::invalid_argument("partition parts must be positive");
        n_ += part;
        gcd_ = std::gcd(gcd_, part);
        ++multiplicities_[part];
    }
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out << '+';
        out << parts_[i];
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1)
        throw std::invalid_argument("enumerate_partitions requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur{n};
    for (;;) {
        out.emplace_back(cur);
        // Rightmost part that can still be decreased.
        int i = static_cast<int>(cur.size()) - 1;
        while (i >= 0 && cur[i] == 1) --i;
        if (i < 0) break;
        int total = cur[i] + static_cast<int>(cur.size()) - 1 - i;
        int value = cur[i] - 1;
        cur.resize(i);
        while (total > 0) {
            cur.push_back(std::min(value, total));
            total -= std::min(value, total);
        }
    }
    return out;
}

std::int64_t torsion_component_count(const Partition& lambda) {
    auto e = static_cast<std::int64_t>(lambda.gcd_of_parts());
    return e * e * e * e;
}

namespace {

// Places fine parts (largest first) into the remaining block capacities.
// Capacities of equal value lead to identical states, so each value is
// tried once per level.
bool place_parts(const std::vector<int>& fine, std::size_t i, std::vector<int>& caps) {
    if (i == fine.size()) return true;
    int part = fine[i];
    std::set<int> tried;
    for (auto& cap : caps) {
        if (cap < part || !tried.insert(cap).second) continue;
        cap -= part;
        bool ok = place_parts(fine, i + 1, caps);
        cap += part;
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.n() != coarse.n())
        throw std::invalid_argument("refines requires partitions of the same integer");
    if (fine.length() < coarse.length()) return false;
    std::vector<int> caps = coarse.parts();
    return place_parts(fine.parts(), 0, caps);
}

}  // namespace kummer

#include "kummer/motive.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace kummer {

namespace {

void check_term(const MotiveTerm& term) {
    if (term.multiplicity < 1)
        throw std::invalid_argument("motive term multiplicity must be >= 1");
    if (term.tate_shift < 0)
        throw std::invalid_argument("motive term twist must be >= 0");
    for (const auto& [part, count] : term.sym_factors)
        if (part < 1 || count < 1)
            throw std::invalid_argument("sym_factors must map positive parts to positive counts");
}

}  // namespace

MotiveExpr motive_of_sym_quotient(const Partition& lambda) {
    MotiveTerm term;
    term.sym_factors = lambda.multiplicities();
    MotiveExpr expr;
    expr.terms.push_back(std::move(term));
    expr.label = "sym quotient of " + lambda.to_string();
    return expr;
}

MotiveExpr merge_terms(const MotiveExpr& e) {
    MotiveExpr out;
    out.label = e.label;
    for (const auto& term : e.terms) {
        auto same = std::find_if(out.terms.begin(), out.terms.end(), [&](const MotiveTerm& t) {
            return t.sym_factors == term.sym_factors && t.tate_shift == term.tate_shift;
        });
        if (same == out.terms.end())
            out.terms.push_back(term);
        else
            same->multiplicity += term.multiplicity;
    }
    return out;
}

HodgeDiamond RealizationCache::surface_sym_power(int k) {
    std::scoped_lock lock(mu_);
    auto it = powers_.find(k);
    if (it != powers_.end()) return it->second;
    // The series gives every lower power for free; keep them all.
    auto series = symmetric_product_series(diamond_of_abelian_surface(), k);
    for (int i = 0; i <= k; ++i)
        powers_.try_emplace(i, std::move(series[static_cast<std::size_t>(i)]));
    return powers_.at(k);
}

HodgeDiamond RealizationCache::sym_product(std::vector<int> exponents) {
    std::sort(exponents.begin(), exponents.end());
    {
        std::scoped_lock lock(mu_);
        auto it = products_.find(exponents);
        if (it != products_.end()) return it->second;
    }
    HodgeDiamond result = unit_diamond();
    for (int k : exponents) result = tensor(result, surface_sym_power(k));
    std::scoped_lock lock(mu_);
    return products_.try_emplace(std::move(exponents), std::move(result)).first->second;
}

HodgeDiamond realize(const MotiveExpr& e) {
    RealizationCache cache;
    return realize(e, cache);
}

HodgeDiamond realize(const MotiveExpr& e, RealizationCache& cache) {
    HodgeDiamond total;
    for (const auto& term : e.terms) {
        check_term(term);
        std::vector<int> exponents;
        exponents.reserve(term.sym_factors.size());
        for (const auto& [part, count] : term.sym_factors) exponents.push_back(count);
        HodgeDiamond d = cache.sym_product(std::move(exponents));
        total = direct_sum(total, tate_twist(d, term.tate_shift), term.multiplicity);
    }
    return total;
}

std::string motive_expr_to_json(const MotiveExpr& e) {
    nlohmann::json doc;
    doc["label"] = e.label;
    doc["terms"] = nlohmann::json::array();
    for (const auto& term : e.terms) {
        nlohmann::json t;
        t["multiplicity"] = term.multiplicity;
        t["tate_shift"] = term.tate_shift;
        t["parts_multiplicities"] = nlohmann::json::object();
        for (const auto& [part, count] : term.sym_factors)
            t["parts_multiplicities"][std::to_string(part)] = count;
        doc["terms"].push_back(std::move(t));
    }
    return doc.dump(2);
}

MotiveExpr motive_expr_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    MotiveExpr expr;
    expr.label = doc.at("label").get<std::string>();
    for (const auto& t : doc.at("terms")) {
        MotiveTerm term;
        term.multiplicity = t.at("multiplicity").get<std::int64_t>();
        term.tate_shift = t.at("tate_shift").get<int>();
        for (const auto& [key, value] : t.at("parts_multiplicities").items())
            term.sym_factors[std::stoi(key)] = value.get<int>();
        check_term(term);
        expr.terms.push_back(std::move(term));
    }
    return expr;
}

}  // namespace kummer

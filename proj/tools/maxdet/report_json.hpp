#pragma once

#include <json.hpp>

#include "maxdet/bounds.hpp"
#include "maxdet/feasibility.hpp"
#include "maxdet/search.hpp"
#include "maxdet/verification.hpp"
#include "table.hpp"

namespace maxdet::cli {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Exact integers are always emitted as decimal strings.
json rational_json(const Rational& q);
json feasibility_json(const FeasibilityReport& r);
json gram_class_json(const GramClass& c);
json report_json(const VerificationReport& r, double runtime_ms);
json bound_json(const BoundValue& b, unsigned digits, double runtime_ms);
json det_json(std::size_t order, const Integer& det, double runtime_ms);
json maxdet_search_json(int n, const SearchResult& r, double runtime_ms);
json pair_search_json(const PairSearchResult& r, double runtime_ms);
json table_json(const std::vector<TableRow>& rows, double runtime_ms);

}  // namespace maxdet::cli

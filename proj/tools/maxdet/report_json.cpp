#include "report_json.hpp"

#include <string>

#include "maxdet/matrix_file.hpp"

namespace maxdet::cli {

namespace {

template <class T>
json string_array(const std::vector<T>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(std::to_string(v));
  return out;
}

json envelope(const char* kind, double runtime_ms) {
  return json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"runtime_ms", runtime_ms}};
}

std::string row_text(std::span<const std::int8_t> row) {
  std::string s;
  for (std::int8_t v : row) s.push_back(v > 0 ? '+' : '-');
  return s;
}

json matrix_rows(const SignMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(row_text(m.row(i)));
  return rows;
}

}  // namespace

json rational_json(const Rational& q) {
  return json{{"numerator", q.get_num().get_str()}, {"denominator", q.get_den().get_str()}};
}

json feasibility_json(const FeasibilityReport& r) {
  json tests = json::array();
  for (const auto& t : r.obstructions) tests.push_back({{"name", t.name}, {"pass", t.pass}, {"witness", t.witness}});
  return json{{"n", std::to_string(r.n)},
              {"residue_class", std::to_string(r.residue_class)},
              {"applicable_bound", std::string(bound_kind_name(r.applicable_bound))},
              {"not_obstructed", r.not_obstructed()},
              {"obstructions", tests}};
}

json gram_class_json(const GramClass& c) {
  json out{{"tag", std::string(gram_tag_name(c.tag))}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  if (c.violating_triple) out["violating_triple"] = string_array(std::vector<std::size_t>(c.violating_triple->begin(), c.violating_triple->end()));
  return out;
}

json report_json(const VerificationReport& r, double runtime_ms) {
  json out = envelope("verify", runtime_ms);
  out["order"] = std::to_string(r.order);
  out["family"] = r.family ? json(std::string(family_name(*r.family))) : json(nullptr);
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = std::to_string(v);
  out["parameters"] = params;
  out["det"] = r.det.get_str();
  out["det_sq"] = r.det_sq.get_str();
  out["bound_kind"] = std::string(bound_kind_name(r.bound.kind));
  out["bound_sq"] = rational_json(r.bound.gram_bound);
  out["ratio"] = r.ratio;
  out["gram_class"] = gram_class_json(r.gram_class);
  if (r.gram_class.partition) out["partition"] = string_array(r.gram_class.partition->parts());
  out["row_sums"] = string_array(r.row_sums);
  out["excess"] = r.excess.get_str();
  out["feasibility"] = feasibility_json(r.feasibility);
  return out;
}

json bound_json(const BoundValue& b, unsigned digits, double runtime_ms) {
  json out = envelope("bound", runtime_ms);
  out["n"] = std::to_string(b.n);
  out["bound_kind"] = std::string(bound_kind_name(b.kind));
  out["bound_sq"] = rational_json(b.gram_bound);
  out["bound_sq_text"] = bound_sq_text(b);
  out["bound_text"] = bound_root_text(b);
  out["bound_decimal"] = sqrt_decimal(b.gram_bound, digits);
  out["note"] = b.attainable_note;
  if (b.partition) out["partition"] = string_array(b.partition->parts());
  if (b.barba_gram_bound) out["barba_sq"] = rational_json(*b.barba_gram_bound);
  if (b.ehlich_gram_bound) out["ehlich_sq"] = rational_json(*b.ehlich_gram_bound);
  return out;
}

json det_json(std::size_t order, const Integer& det, double runtime_ms) {
  json out = envelope("det", runtime_ms);
  out["order"] = std::to_string(order);
  out["det"] = det.get_str();
  out["det_sq"] = Integer(det * det).get_str();
  return out;
}

json maxdet_search_json(int n, const SearchResult& r, double runtime_ms) {
  json out = envelope("search-maxdet", runtime_ms);
  out["n"] = std::to_string(n);
  out["max_det"] = r.max_det.get_str();
  out["nodes_visited"] = std::to_string(r.nodes_visited);
  json w = json::array();
  for (const auto& m : r.witnesses) w.push_back(matrix_rows(m));
  out["witnesses"] = w;
  return out;
}

json pair_search_json(const PairSearchResult& r, double runtime_ms) {
  json out = envelope("search-pairs", runtime_ms);
  out["k"] = std::to_string(r.k);
  json classes = json::array();
  for (const auto& [a, b] : r.classes) classes.push_back({{"r", std::to_string(a)}, {"s", std::to_string(b)}});
  out["classes"] = classes;
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"r", std::to_string(p.r())},
                     {"s", std::to_string(p.s())},
                     {"first_row_r", row_text(p.first_row_r())},
                     {"first_row_s", row_text(p.first_row_s())}});
  }
  out["pairs"] = pairs;
  out["candidates"] = std::to_string(r.candidates);
  return out;
}

json table_json(const std::vector<TableRow>& rows, double runtime_ms) {
  json out = envelope("table", runtime_ms);
  json arr = json::array();
  for (const auto& row : rows) {
    json j{{"n", std::to_string(row.n)},
           {"bound_kind", std::string(bound_kind_name(row.bound.kind))},
           {"bound_text", row.bound_text},
           {"bound_sq", rational_json(row.bound.gram_bound)}};
    j["osds"] = row.osds ? json(*row.osds) : json(nullptr);
    if (row.border) {
      const auto& b = row.border->best;
      j["border"] = b.ratio;
      j["border_class"] = {{"r", std::to_string(b.r)}, {"s", std::to_string(b.s)}, {"lead", std::string(lead_name(b.lead))}};
      j["border_det"] = row.border->det.get_str();
    } else {
      j["border"] = nullptr;
    }
    if (row.osds_det) j["osds_det"] = row.osds_det->get_str();
    arr.push_back(j);
  }
  out["rows"] = arr;
  return out;
}

}  // namespace maxdet::cli

#include "glc/report.hpp"

#include <algorithm>
#include <sstream>

namespace glc {

template <CoefficientField F>
Json to_json(const std::vector<PrimeIdeal<F>>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(p.to_string());
  return out;
}

template <CoefficientField F>
Json to_json(const VanishingVerdict<F>& v) {
  return Json{{"verdict", to_string(v.value)},
              {"witnesses", to_json(v.witnesses)},
              {"candidates", to_json(v.candidates)},
              {"complete", v.complete}};
}

template <CoefficientField F>
Json to_json(const AttachedPrimes<F>& a) {
  Json out{{"primes", to_json(a.primes)}, {"ass_supp", to_json(a.ass_supp)}, {"hom_ass", to_json(a.hom_ass)},
           {"complete", a.complete}};
  out["identity_holds"] = a.identity_holds ? Json(*a.identity_holds) : Json(nullptr);
  return out;
}

Json to_json(const BoundsReport& b) {
  Json out{{"pdM", b.pdM}, {"dimTensor", b.dimTensor}};
  out["gradeT"] = b.gradeT ? Json(*b.gradeT) : Json(nullptr);
  out["araUpper"] = b.araUpper;
  out["depthN"] = b.depthN;
  out["d"] = b.d;
  out["vanishing_bound"] = b.vanishing_bound();
  return out;
}

Json to_json(const OracleTrace& t, const OracleOptions& options) {
  Json stable = Json::object();
  for (int j = t.degree_lo; j <= t.degree_hi; ++j)
    if (auto v = t.stable(j)) stable[std::to_string(j)] = *v;
  return Json{{"index", t.index},         {"verdict", to_string(t.verdict)},
              {"nmax", t.nmax},           {"window", t.window},
              {"degree_slack", options.degree_slack},
              {"degree_lo", t.degree_lo}, {"degree_hi", t.degree_hi},
              {"stable_dims", stable},    {"monotone", t.monotone()}};
}

template <CoefficientField F>
Json to_json(const VanishingReport<F>& r, const OracleOptions& options) {
  Json out{{"id", r.id}, {"status", "ok"}};
  out["predictor"] = to_json(r.predictor);
  out["oracle"] = to_json(r.oracle, options);
  out["bounds"] = r.bounds ? to_json(*r.bounds) : Json(nullptr);
  out["attached"] = to_json(r.attached);
  out["agreement"] = to_string(r.agreement);
  out["hard_failure"] = r.hard_failure();
  return out;
}

Json failure_record(const std::string& id, const std::string& kind, const std::string& message) {
  return Json{{"id", id}, {"status", "error"}, {"error", {{"kind", kind}, {"message", message}}}};
}

namespace {

std::string cell(const Json& record, std::initializer_list<const char*> path) {
  const Json* node = &record;
  for (const char* key : path) {
    if (!node->is_object() || !node->contains(key)) return "-";
    node = &(*node)[key];
  }
  if (node->is_null()) return "inf";
  if (node->is_string()) return node->get<std::string>();
  if (node->is_boolean()) return node->get<bool>() ? "yes" : "no";
  if (node->is_array()) {
    std::string s;
    for (const auto& item : *node) s += (s.empty() ? "" : " ") + (item.is_string() ? item.get<std::string>() : item.dump());
    return s.empty() ? "{}" : s;
  }
  return node->dump();
}

}  // namespace

std::string render_table(const std::vector<Json>& records) {
  const std::vector<std::string> header{"id",   "predictor", "witnesses", "oracle", "agreement", "pdM",
                                        "dimMN", "grade",    "ara",       "depthN", "d",         "time_ms"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : records) {
    if (r.value("status", "") == "error") {
      rows.push_back({cell(r, {"id"}), "error: " + cell(r, {"error", "message"})});
      continue;
    }
    rows.push_back({cell(r, {"id"}), cell(r, {"predictor", "verdict"}), cell(r, {"predictor", "witnesses"}),
                    cell(r, {"oracle", "verdict"}), cell(r, {"agreement"}), cell(r, {"bounds", "pdM"}),
                    cell(r, {"bounds", "dimTensor"}), cell(r, {"bounds", "gradeT"}), cell(r, {"bounds", "araUpper"}),
                    cell(r, {"bounds", "depthN"}), cell(r, {"bounds", "d"}), cell(r, {"timing", "duration_ms"})});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && (c == 0 || row.size() == header.size()); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

#define GLC_INSTANTIATE(F)                                                         \
  template Json to_json<F>(const std::vector<PrimeIdeal<F>>&);                     \
  template Json to_json<F>(const VanishingVerdict<F>&);                            \
  template Json to_json<F>(const AttachedPrimes<F>&);                              \
  template Json to_json<F>(const VanishingReport<F>&, const OracleOptions&);

GLC_INSTANTIATE(PrimeField)
GLC_INSTANTIATE(RationalField)

}  // namespace glc

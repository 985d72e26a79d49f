#pragma once

// Structured report records (one JSON object per instance) and the aligned
// table rendered from them.

#include <string>
#include <vector>

#include "glc/glc.hpp"
#include "json.hpp"

namespace glc {

using Json = nlohmann::ordered_json;

template <CoefficientField F>
Json to_json(const std::vector<PrimeIdeal<F>>& primes);
template <CoefficientField F>
Json to_json(const VanishingVerdict<F>& v);
template <CoefficientField F>
Json to_json(const AttachedPrimes<F>& a);
Json to_json(const BoundsReport& b);
Json to_json(const OracleTrace& t, const OracleOptions& options);
template <CoefficientField F>
Json to_json(const VanishingReport<F>& r, const OracleOptions& options);

/// Record for an instance that could not be evaluated.
Json failure_record(const std::string& id, const std::string& kind, const std::string& message);

/// Aligned table with one row per record, in the given order.
std::string render_table(const std::vector<Json>& records);

}  // namespace glc

#pragma once

#include <string>

#include <json.hpp>

#include "thicket/classifier/catalogue.hpp"
#include "thicket/classifier/suites.hpp"

namespace thicket {

using Json = nlohmann::json;

/// Sorted keys, no insignificant whitespace.
std::string canonical(const Json& j);

Json ring_json(const GradedRing& ring);
Json prime_json(const PrimePoint& p);
/// {name, gens: [{name, degree}], d: [{from, to, coef}]}, entries column by column.
Json complex_json(const std::string& name, const PerfectComplex& x);
/// {window: [lo, hi], dimensions: [dim at lo, ..., dim at hi]}.
Json table_json(const GradedDimensionTable& t);
Json support_json(const SupportSet& s);
Json classification_json(const std::vector<SupportClass>& classes);

/// Wall time is included only on request so that reports stay byte-stable.
Json suite_json(const SuiteReport& r, bool timing = false);
/// Fixed-width table, one row per instance.
std::string suite_text(const SuiteReport& r, bool timing = false);
std::string table_text(const GradedDimensionTable& t);

}  // namespace thicket

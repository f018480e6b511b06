#pragma once

#include "ho/circle.hpp"
#include "ho/factor.hpp"
#include "ho/growth.hpp"
#include "ho/hankel.hpp"
#include "ho/hardy.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ho::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Parses inline JSON text, or reads the file it names when the text does not
/// start with '{' or '['. Throws ParseError on malformed input.
json load_json(std::string_view text_or_path);

// Parsers. `path` is the field path reported in ParseError messages
// (for example "phi.f1.p"). Invariant violations surface as ParseError.
GrowthFunction parse_growth(const json& j, const std::string& path = "phi");
BoundaryFunction parse_boundary(const json& j, int n, const std::string& path = "fn");
AnalyticFunction parse_analytic(const json& j, int n, const std::string& path = "fn");
ZeroList parse_zeros(const json& j, const std::string& path = "zeros");
AtomicMeasure parse_atoms(const json& j, const std::string& path = "atoms");

struct ExperimentSpec {
    GrowthFunction phi1 = GrowthFunction::power(2.0);
    GrowthFunction phi2 = GrowthFunction::power(2.0);
    std::vector<Symbol> family;
    Dictionary dictionary;
    std::optional<std::uint64_t> seed;
};
ExperimentSpec parse_experiment(const json& j, int n, const std::string& path = "experiment");

using Spec = std::variant<GrowthFunction, BoundaryFunction, AnalyticFunction, ExperimentSpec>;
/// Dispatches on the "kind" field (or on "phi1" for experiment bundles).
Spec parse_spec(const json& j, int n);

// Serialisation.
json to_json(const GrowthFunction& f);
json to_json(const AnalyticFunction& g);
json to_json(const BoundaryFunction& g);
json to_json(const NormReport& r);
json to_json(const RadialReport& r);
json to_json(const TypeEstimate& t);
json to_json(const IndexEstimate& t);
json to_json(const DoublingResult& d);
json to_json(const FactorizationReport& r);
json to_json(const HankelReport& r);
json to_json(const ExperimentResult& r);
json to_json(const HankelMatrix& m);

/// CSV with columns family_tag, symbol_norm, operator_estimate, ratio, schema_version.
std::string experiment_csv(const ExperimentResult& r);

}  // namespace ho::io

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hardy/certify.hpp"
#include "hardy/dual.hpp"
#include "hardy/probe.hpp"
#include "hardy/weights.hpp"

namespace hardy {

enum class OutputFormat { Text, Csv, Json };
OutputFormat format_from_string(const std::string& s);

using Json = nlohmann::ordered_json;

Json to_json(const Certificate& c);
Json to_json(const WeightConditionReport& r);
Json to_json(const ProbeResult& r);
Json to_json(const DualDescriptor& d);
Json to_json(const BetaSearchResult& b);
Json to_json(const TransposeNormResult& t);

std::string to_csv(const Certificate& c);
std::string to_csv(const WeightConditionReport& r);
std::string to_csv(const ProbeResult& r);

std::string to_text(const Certificate& c);
std::string to_text(const WeightConditionReport& r);
std::string to_text(const ProbeResult& r);
std::string to_text(const DualDescriptor& d);
std::string to_text(const BetaSearchResult& b);

// Renders in the requested format; tabular CSV falls back to JSON for shapes
// that have no row structure.
template <class T>
std::string render(const T& value, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return to_json(value).dump(2) + "\n";
    case OutputFormat::Csv:
      if constexpr (requires { to_csv(value); })
        return to_csv(value);
      else
        return to_json(value).dump(2) + "\n";
    case OutputFormat::Text:
    default: return to_text(value);
  }
}

// Writes to the path when given, stdout otherwise.
void emit(const std::string& payload, const std::optional<std::string>& path);

std::string format_double(double x);  // %.17g, round-trip safe

}  // namespace hardy

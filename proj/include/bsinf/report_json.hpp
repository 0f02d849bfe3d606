#pragma once

#include <string>
#include <string_view>

#include "bsinf/invariant.hpp"

namespace bsinf {

inline constexpr std::string_view kJsonSchema = "bsinf/1";

struct JsonReport {
  InfinityReport report;  // per-point epsilon is not serialized and reads back as 0
  std::string normal_form;
};

/// {"schema", "input", "bounded", "points", "k", "descriptor", "normal_form"}.
/// Zero-count sides are omitted from each point.
std::string report_to_json(const InfinityReport& r, const std::string& normal_form, int indent = 2);

/// Inverse of report_to_json. Throws Error on malformed input, a schema
/// mismatch, or a k that disagrees with the point counts.
JsonReport report_from_json(std::string_view text);

}  // namespace bsinf

#include "bsinf/report_json.hpp"

#include <json.hpp>

#include "bsinf/errors.hpp"

namespace bsinf {

namespace {

using nlohmann::json;

long checked_long(const Integer& v) {
  if (!v.fits_slong_p()) throw Error("integer " + v.get_str() + " does not fit the JSON schema");
  return v.get_si();
}

json pair_json(const Integer& a, const Integer& b) { return json::array({checked_long(a), checked_long(b)}); }

json side_json(const DirectionCount& d) {
  return json{{"dir", pair_json(d.direction.u(), d.direction.v())}, {"count", d.count}};
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("JSON report is missing \"") + key + "\"");
  return j.at(key);
}

std::pair<Integer, Integer> read_pair(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error("JSON report: expected an integer pair");
  return {Integer(j[0].get<long>()), Integer(j[1].get<long>())};
}

std::optional<DirectionCount> read_side(const json& point, const char* key) {
  if (!point.contains(key)) return std::nullopt;
  const json& s = point.at(key);
  auto [u, v] = read_pair(field(s, "dir"));
  const json& c = field(s, "count");
  if (!c.is_number_unsigned() || c.get<std::size_t>() == 0) throw Error("JSON report: counts must be positive");
  return DirectionCount{DirectionS1(u, v), c.get<std::size_t>()};
}

}  // namespace

std::string report_to_json(const InfinityReport& r, const std::string& normal_form, int indent) {
  json points = json::array();
  for (const PointRecord& p : r.points) {
    json jp{{"point", pair_json(p.point.alpha(), p.point.beta())}, {"certified", p.certified}};
    if (p.plus) jp["plus"] = side_json(*p.plus);
    if (p.minus) jp["minus"] = side_json(*p.minus);
    points.push_back(std::move(jp));
  }
  json descriptor = json::array();
  for (const DescriptorPair& d : r.descriptor.pairs) descriptor.push_back(json::array({d.r0, d.r1}));
  const json out{{"schema", kJsonSchema},    {"input", r.input}, {"bounded", r.bounded},
                 {"points", std::move(points)}, {"k", r.k.entries}, {"descriptor", std::move(descriptor)},
                 {"normal_form", normal_form}};
  return out.dump(indent);
}

JsonReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON report: ") + e.what());
  }
  if (field(j, "schema") != kJsonSchema) throw Error("unsupported JSON schema " + field(j, "schema").dump());

  JsonReport out;
  InfinityReport& r = out.report;
  try {
    r.input = field(j, "input").get<std::string>();
    r.bounded = field(j, "bounded").get<bool>();
    out.normal_form = field(j, "normal_form").get<std::string>();
    std::vector<std::size_t> counts;
    for (const json& jp : field(j, "points")) {
      auto [a, b] = read_pair(field(jp, "point"));
      PointRecord p{ProjPointAtInfinity(a, b), read_side(jp, "plus"), read_side(jp, "minus"),
                    field(jp, "certified").get<bool>(), Rational(0)};
      if (p.plus) counts.push_back(p.plus->count);
      if (p.minus) counts.push_back(p.minus->count);
      r.points.push_back(std::move(p));
    }
    r.k = KInvariant(field(j, "k").get<std::vector<std::size_t>>());
    if (KInvariant(counts) != r.k) throw Error("JSON report: k does not match the point counts");
    for (const json& d : field(j, "descriptor")) {
      if (!d.is_array() || d.size() != 2) throw Error("JSON report: descriptor entries are pairs");
      r.descriptor.pairs.push_back({d[0].get<std::size_t>(), d[1].get<std::size_t>()});
    }
  } catch (const json::exception& e) {
    throw Error(std::string("JSON report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("JSON report: ") + e.what());
  }
  if (r.bounded != r.k.empty()) throw Error("JSON report: bounded flag disagrees with k");
  return out;
}

}  // namespace bsinf

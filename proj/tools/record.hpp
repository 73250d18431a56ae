#pragma once

// Serialization of triple records for the command-line front end.
// Integers are decimal strings (no exponent notation, no 53-bit truncation);
// floating fields are strings with 17 significant digits.

#include "berggren/berggren.hpp"

#include <json.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace berggren::cli {

using json = nlohmann::ordered_json;

enum class format { json, csv };

inline std::optional<format> parse_format(std::string_view name) {
  if (name == "json") return format::json;
  if (name == "csv") return format::csv;
  return std::nullopt;
}

inline std::string float17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json triple_record(const ppt& t, const std::optional<tree_path>& path) {
  json j;
  j["x"] = t.x().str();
  j["y"] = t.y().str();
  j["z"] = t.z().str();
  j["path"] = path ? json(path->str()) : json(nullptr);
  j["r"] = inradius(t).str();
  j["R"] = to_string(circumradius(t));
  return j;
}

inline json surd_json(const surd& s) { return {{"coeff", to_string(s.coeff())}, {"radicand", s.radicand().str()}}; }

inline json geometry_block(const desc_triangle_metrics& m) {
  json points = json::array();
  for (const auto& p : m.points) points.push_back({p.a.str(), p.b.str(), p.c.str()});
  json g;
  g["points"] = points;
  const auto& pl = m.containing_plane;
  g["plane"] = {pl.alpha.str(), pl.beta.str(), pl.gamma.str(), pl.delta.str()};
  g["area"] = surd_json(m.area);
  g["D"] = m.D.str();
  g["sides"] = {{"u", m.side_u.str()}, {"v", surd_json(m.side_v)}, {"w", m.side_w.str()}};
  g["dot_products"] = {m.dot_products[0].str(), m.dot_products[1].str(), m.dot_products[2].str()};
  g["inradius_exact"] = {{"p", m.inradius_exact.p.str()}, {"D", m.inradius_exact.D.str()}, {"form", "(p - sqrt(D)) / sqrt(17)"}};
  g["circumradius_sq"] = to_string(m.circumradius_sq);
  g["r_float"] = float17(m.inradius_float);
  g["R_float"] = float17(m.circumradius_float);
  return g;
}

inline const char* csv_header() { return "x,y,z,path,r,R"; }

inline std::string csv_row(const ppt& t, const std::optional<tree_path>& path) {
  return t.x().str() + "," + t.y().str() + "," + t.z().str() + "," + (path ? path->str() : "") + "," +
         inradius(t).str() + "," + to_string(circumradius(t));
}

/// Re-validates a record's triple; throws berggren::error or json errors.
inline ppt triple_from_record(const json& j) {
  bigint x, y, z;
  const auto field = [&j](const char* key, bigint& out) {
    if (!parse_bigint(j.at(key).get<std::string>(), out))
      throw error(error_code::invariant_violation, std::string("malformed field ") + key);
  };
  field("x", x);
  field("y", y);
  field("z", z);
  return validate_triple(x, y, z).triple;
}

/// "x,y,z" with exactly three decimal integers.
inline std::optional<raw_triple> parse_triple(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3) return std::nullopt;
  raw_triple t;
  if (!parse_bigint(parts[0], t.x) || !parse_bigint(parts[1], t.y) || !parse_bigint(parts[2], t.z))
    return std::nullopt;
  return t;
}

}  // namespace berggren::cli

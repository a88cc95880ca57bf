#include "trop/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "trop/errors.hpp"

namespace trop {

namespace {

using nlohmann::json;

json poly_to_json(const UniPoly& f) {
  json arr = json::array();
  for (const Rat& c : f.coeffs()) arr.push_back(c.str());
  return arr;
}

UniPoly poly_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rational strings");
  std::vector<Rat> coeffs;
  coeffs.reserve(j.size());
  for (const json& c : j) {
    if (!c.is_string()) throw ParseError(std::string(what) + " must contain rational strings");
    coeffs.push_back(Rat::parse(c.get<std::string>()));
  }
  return UniPoly(std::move(coeffs));
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  for (const char* key : {"prime", "n", "fn", "tail"})
    if (!j.contains(key)) throw ParseError(std::string("instance misses field '") + key + "'");
  if (!j["prime"].is_number_unsigned()) throw ParseError("'prime' must be a nonnegative integer");
  if (!j["n"].is_number_integer()) throw ParseError("'n' must be an integer");
  const std::uint64_t p = j["prime"].get<std::uint64_t>();
  const int n = j["n"].get<int>();
  if (n < 1) throw ParseError("'n' must be at least 1");
  UniPoly fn = poly_from_json(j["fn"], "'fn'");
  if (!j["tail"].is_array()) throw ParseError("'tail' must be an array");
  if (static_cast<int>(j["tail"].size()) != n - 1)
    throw ParseError("'tail' must hold exactly n-1 polynomials");
  std::vector<UniPoly> tail;
  tail.reserve(j["tail"].size());
  for (const json& t : j["tail"]) tail.push_back(poly_from_json(t, "'tail' entry"));
  return Instance{ShapeBasis(n, std::move(fn), std::move(tail)), PrimeContext(p)};
}

std::string serialize_instance(const Instance& inst) {
  json j;
  j["prime"] = inst.prime.prime();
  j["n"] = inst.basis.vars();
  j["fn"] = poly_to_json(inst.basis.fn());
  json tail = json::array();
  for (const UniPoly& t : inst.basis.tail_polys()) tail.push_back(poly_to_json(t));
  j["tail"] = std::move(tail);
  return j.dump(2) + "\n";
}

Projection parse_result(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw ParseError("result must be an object with a 'points' array");
  Projection p;
  std::size_t width = 0;
  for (const json& e : j["points"]) {
    if (!e.is_object() || !e.contains("coords") || !e.contains("mult"))
      throw ParseError("result point needs 'coords' and 'mult'");
    if (!e["mult"].is_number_integer() || e["mult"].get<long>() < 1)
      throw ParseError("'mult' must be a positive integer");
    ProjPoint pt;
    pt.mult = e["mult"].get<int>();
    for (const json& c : e["coords"]) {
      if (!c.is_string()) throw ParseError("'coords' must contain rational strings");
      pt.w.push_back(Rat::parse(c.get<std::string>()));
    }
    if (width == 0) width = pt.w.size();
    if (pt.w.empty() || pt.w.size() != width)
      throw ParseError("'coords' must all have the same positive length");
    p.points.push_back(std::move(pt));
  }
  if (j.contains("coordinates")) {
    for (const json& c : j["coordinates"]) p.coords.push_back(c.get<int>());
  } else {
    for (std::size_t k = 1; k <= width; ++k) p.coords.push_back(static_cast<int>(k));
  }
  if (p.coords.size() != width && !p.points.empty())
    throw ParseError("'coordinates' length does not match the points");
  return p;
}

std::string serialize_result(const Projection& p, int nvars) {
  json j;
  const bool full = static_cast<int>(p.coords.size()) == nvars;
  if (!full) j["coordinates"] = p.coords;
  json pts = json::array();
  for (const ProjPoint& pt : p.points) {
    json coords = json::array();
    for (const Rat& c : pt.w) coords.push_back(c.str());
    pts.push_back(json{{"coords", std::move(coords)}, {"mult", pt.mult}});
  }
  j["points"] = std::move(pts);
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_text(const std::string& path, const std::string& text, std::ostream& stdout_stream) {
  if (path.empty() || path == "-") {
    stdout_stream << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

}  // namespace trop

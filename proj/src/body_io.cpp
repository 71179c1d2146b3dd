#include "tangent/body_io.hpp"

#include <fstream>
#include <set>
#include <string>

#include "tangent/error.hpp"

namespace tangent {

namespace {

using nlohmann::json;

struct Scalar {
  double value = 0.0;
  std::optional<Rational> exact;
};

Scalar parse_scalar(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      const Rational r = parse_rational(v.get<std::string>());
      return {to_double(r), r};
    } catch (const std::exception&) {
      throw ConfigError(where + ": cannot parse \"" + v.get<std::string>() + "\" as a rational");
    }
  }
  if (v.is_number_integer()) {
    const auto i = v.get<long long>();
    return {static_cast<double>(i), Rational(std::to_string(i))};
  }
  if (v.is_number()) return {v.get<double>(), std::nullopt};
  throw ConfigError(where + ": expected a number or a \"p/q\" string");
}

void check_keys(const json& doc, const std::set<std::string>& allowed, const std::string& where) {
  if (!doc.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : doc.items())
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key \"" + key + "\"");
}

const json& require(const json& doc, const std::string& key, const std::string& where) {
  if (!doc.contains(key)) throw ConfigError(where + ": missing \"" + key + "\"");
  return doc.at(key);
}

std::vector<Scalar> parse_list(const json& doc, const std::string& key, const std::string& where) {
  std::vector<Scalar> out;
  if (!doc.contains(key)) return out;
  const auto& list = doc.at(key);
  if (!list.is_array()) throw ConfigError(where + "." + key + ": expected an array");
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(parse_scalar(list[i], where + "." + key + "[" + std::to_string(i) + "]"));
  return out;
}

// {"cos": [a0, a1, ...], "sin": [b1, ...]} or a bare constant.
CircleFunction parse_trig(const json& doc, const std::string& where) {
  if (doc.is_number() || doc.is_string()) {
    const Scalar s = parse_scalar(doc, where);
    if (s.exact) return CircleFunction(TrigPoly<Rational>::constant(*s.exact));
    return CircleFunction(TrigPoly<double>::constant(s.value));
  }
  check_keys(doc, {"cos", "sin"}, where);
  const auto cos = parse_list(doc, "cos", where);
  const auto sin = parse_list(doc, "sin", where);
  bool exact = true;
  for (const auto* list : {&cos, &sin})
    for (const auto& s : *list) exact = exact && s.exact.has_value();
  if (exact) {
    std::vector<Rational> c, s;
    for (const auto& x : cos) c.push_back(*x.exact);
    for (const auto& x : sin) s.push_back(*x.exact);
    return CircleFunction(TrigPoly<Rational>(std::move(c), std::move(s)).trimmed());
  }
  std::vector<double> c, s;
  for (const auto& x : cos) c.push_back(x.value);
  for (const auto& x : sin) s.push_back(x.value);
  return CircleFunction(TrigPoly<double>(std::move(c), std::move(s)).trimmed());
}

SupportFunction parse_support_at(const json& doc, int grid, const std::string& where,
                                 const std::set<std::string>& extra_keys) {
  if (!doc.is_object()) throw ConfigError(where + ": expected an object");
  const auto& kind_value = require(doc, "kind", where);
  if (!kind_value.is_string()) throw ConfigError(where + ".kind: expected a string");
  const std::string kind = kind_value.get<std::string>();
  auto keys = [&](std::set<std::string> own) {
    own.insert("kind");
    own.insert(extra_keys.begin(), extra_keys.end());
    check_keys(doc, own, where);
  };

  if (kind == "ellipse") {
    keys({"a", "b", "tilt"});
    const Scalar a = parse_scalar(require(doc, "a", where), where + ".a");
    const Scalar b = parse_scalar(require(doc, "b", where), where + ".b");
    const Scalar tilt = doc.contains("tilt") ? parse_scalar(doc.at("tilt"), where + ".tilt") : Scalar{};
    if (a.exact && b.exact && tilt.value == 0.0) return make_ellipse(*a.exact, *b.exact, grid);
    return make_ellipse(a.value, b.value, tilt.value, grid);
  }
  if (kind == "trig") {
    keys({"rho2"});
    const CircleFunction rho2 = parse_trig(require(doc, "rho2", where), where + ".rho2");
    if (rho2.exact()) return SupportFunction::trig(*rho2.exact(), grid);
    return SupportFunction::trig(*rho2.trig(), grid);
  }
  if (kind == "perturbed") {
    keys({"base", "eps", "frequency"});
    const SupportFunction base = parse_support_at(require(doc, "base", where), grid, where + ".base", {});
    const Scalar eps = parse_scalar(require(doc, "eps", where), where + ".eps");
    const auto& freq = require(doc, "frequency", where);
    if (!freq.is_number_integer()) throw ConfigError(where + ".frequency: expected an integer");
    if (eps.exact && base.rho2_exact()) return perturb(base, *eps.exact, freq.get<int>());
    return perturb(base, eps.value, freq.get<int>());
  }
  throw ConfigError(where + ".kind: unknown body kind \"" + kind + "\"");
}

}  // namespace

SupportFunction parse_support(const json& doc, int grid) {
  return parse_support_at(doc, grid, "body", {});
}

BodyDocument parse_body(const json& doc, int grid, std::optional<int> m) {
  SupportFunction body = parse_support_at(doc, grid, "body", {"m", "densities"});
  std::optional<int> declared;
  if (doc.contains("m")) {
    if (!doc.at("m").is_number_integer()) throw ConfigError("body.m: expected an integer");
    declared = doc.at("m").get<int>();
  }
  std::vector<CircleFunction> densities;
  if (doc.contains("densities")) {
    const auto& list = doc.at("densities");
    if (!list.is_array()) throw ConfigError("body.densities: expected an array");
    for (std::size_t j = 0; j < list.size(); ++j)
      densities.push_back(parse_trig(list[j], "body.densities[" + std::to_string(j) + "]"));
  } else {
    densities.emplace_back(TrigPoly<Rational>::constant(Rational(1)));
  }
  const int count = static_cast<int>(densities.size());
  if (declared && *declared != count)
    throw ConfigError("body declares m = " + std::to_string(*declared) + " but lists " +
                      std::to_string(count) + " densities");
  if (m && *m != count)
    throw ConfigError("--m " + std::to_string(*m) + " does not match the " + std::to_string(count) +
                      " densities of the body");
  return BodyDocument{std::move(body), std::move(densities)};
}

BodyDocument load_body(const std::filesystem::path& path, int grid, std::optional<int> m) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open body file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("body file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_body(doc, grid, m);
}

}  // namespace tangent

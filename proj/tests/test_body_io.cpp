#include <doctest.h>

#include <filesystem>

#include "tangent/body_io.hpp"
#include "tangent/error.hpp"

using namespace tangent;
using nlohmann::json;

namespace {

const std::filesystem::path kData = TANGENT_TEST_DATA;

}  // namespace

TEST_CASE("ellipse body with default density") {
  const auto doc = parse_body(json::parse(R"({"kind": "ellipse", "a": 2, "b": 1})"), 32);
  REQUIRE(doc.densities.size() == 1);
  CHECK(doc.densities[0].exact());
  CHECK(doc.body.rho2(0.0) == doctest::Approx(4.0));
  CHECK(doc.body.exact_quadratic_form());
}

TEST_CASE("tilted ellipse is floating point") {
  const auto doc = load_body(kData / "ellipse.json", 64);
  CHECK_FALSE(doc.body.exact_quadratic_form());
  CHECK(doc.body.quadratic_form());
  CHECK(doc.data().m() == 1);
}

TEST_CASE("rational strings are exact") {
  const auto doc = load_body(kData / "ellipse_exact.json", 64);
  REQUIRE(doc.body.exact_quadratic_form());
  CHECK(doc.body.exact_quadratic_form()->yy == Rational(1, 4));
  REQUIRE(doc.densities[1].exact());
  CHECK(doc.densities[1].exact()->sin_coeff(2) == Rational(1, 5));
}

TEST_CASE("trig body") {
  const auto doc = load_body(kData / "trig_ellipse.json", 64, 3);
  REQUIRE(doc.body.rho2_exact());
  CHECK(doc.body.rho2_exact()->cos_coeff(2) == Rational(3, 2));
  CHECK(doc.body.rho2(0.0) == doctest::Approx(4.0));
}

TEST_CASE("perturbed body") {
  const auto doc = load_body(kData / "perturbed_disk.json", 64);
  CHECK(doc.body.rho2(0.0) == doctest::Approx(1.05));
  CHECK(doc.body.rho2(std::acos(-1.0) / 4) == doctest::Approx(0.95));
}

TEST_CASE("malformed documents are configuration errors") {
  CHECK_THROWS_AS(load_body(kData / "mismatch.json", 64), ConfigError);
  CHECK_THROWS_AS(load_body(kData / "missing.json", 64), ConfigError);
  CHECK_THROWS_AS(load_body(kData / "ellipse.json", 64, 2), ConfigError);
  CHECK_THROWS_AS(parse_body(json::parse(R"({"kind": "circle"})"), 32), ConfigError);
  CHECK_THROWS_AS(parse_body(json::parse(R"({"kind": "ellipse", "a": 1})"), 32), ConfigError);
  CHECK_THROWS_AS(parse_body(json::parse(R"({"kind": "ellipse", "a": 1, "b": 1, "c": 2})"), 32), ConfigError);
  CHECK_THROWS_AS(parse_body(json::parse(R"({"kind": "ellipse", "a": "x/2", "b": 1})"), 32), ConfigError);
  CHECK_THROWS_AS(parse_body(json::parse(R"({"kind": "perturbed", "base": {"kind": "ellipse", "a": 1, "b": 1},
                                              "eps": 0.1, "frequency": 4.5})"),
                             32),
                  ConfigError);
}

TEST_CASE("invalid bodies are rejected as parameters") {
  CHECK_THROWS_AS(parse_body(json::parse(R"({"kind": "ellipse", "a": -1, "b": 1})"), 32), InvalidParameter);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reflectinv/groupfile.hpp"
#include "reflectinv/molien.hpp"
#include "reflectinv/verify.hpp"

using namespace reflectinv;

namespace {

const std::string kData = REFLECTINV_TEST_DATA;

ErrorKind kind_of(const std::string& text) {
  try {
    parse_group_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document was accepted");
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("export and reload the catalog") {
  CatalogEntry st8 = catalog_get("st8");
  std::string text = export_group_json(st8);
  CHECK(text.find("\"1/2+1/2i\"") != std::string::npos);
  CatalogEntry back = parse_group_json(text);
  CHECK(back.name == "st8");
  CHECK(back.generators == st8.generators);
  REQUIRE(back.reps.size() == st8.reps.size());
  for (std::size_t k = 0; k < back.reps.size(); ++k) {
    CHECK(back.reps[k].name == st8.reps[k].name);
    CHECK(back.reps[k].images == st8.reps[k].images);
  }
  CHECK(rep_names(back) == rep_names(st8));
  REQUIRE(back.expected);
  CHECK(back.expected->theta == st8.expected->theta);
  CHECK(back.expected->modules.size() == st8.expected->modules.size());
  CHECK(back.expected->modules.back().generators == st8.expected->modules.back().generators);
  CHECK(export_group_json(back) == text);

  MatrixGroup g1 = close(st8.generators), g2 = close(back.generators);
  CHECK(g1.order() == g2.order());
  for (const auto& name : rep_names(st8)) {
    auto h1 = numerator_wrt(molien_equivariant(g1, rep_extend(resolve_rep(st8, name), g1), 40), {8, 12});
    auto h2 = numerator_wrt(molien_equivariant(g2, rep_extend(resolve_rep(back, name), g2), 40), {8, 12});
    CHECK(h1.numerator == h2.numerator);
  }
}

TEST_CASE("load a file with relations and expectations") {
  CatalogEntry e = load_group_file(kData + "/cyclic4.json");
  CHECK(e.n == 2);
  CHECK(close(e.generators).order() == 4);
  CHECK(rep_names(e) == std::vector<std::string>{"triv", "c1", "c2", "c3"});
  REQUIRE(e.expected);
  CHECK(e.expected->modules[3].generators[0][0] == Poly::parse("-2*y^3"));
  VerifyReport r = verify_paper(e);
  CAPTURE(r.str());
  CHECK(r.all_passed());
}

TEST_CASE("malformed documents") {
  CHECK(kind_of("{") == ErrorKind::ParseError);
  CHECK(kind_of("[]") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"n": 1, "representations": {}})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"n": 1, "generators": [[["x"]]], "representations": {}})") == ErrorKind::ParseError);
  CHECK(kind_of(R"({"n": 1, "generators": [[[0.5]]], "representations": {}})") == ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"n": 2, "generators": [[["1"]]], "representations": {}})") == ErrorKind::DimensionMismatch);
  CHECK(kind_of(R"({"n": 1, "generators": [[["i"]]], "representations": {"r": [[["1"]], [["1"]]]}})") ==
        ErrorKind::GeneratorCountMismatch);
  CHECK(kind_of(R"({"n": 1, "generators": [[["i"]]], "representations": {}, "relations": {"a": "b**c"}})") ==
        ErrorKind::InvalidInput);
  CHECK(kind_of(R"({"n": 1, "generators": [[["1/0"]]], "representations": {}})") == ErrorKind::ParseError);
  CHECK_THROWS_AS(load_group_file(kData + "/does-not-exist.json"), Error);
}

TEST_CASE("a singular generator loads but does not close") {
  CatalogEntry e = parse_group_json(R"({"n": 2, "generators": [[["1", "1"], ["1", "1"]]], "representations": {}})");
  try {
    close(e.generators);
    FAIL("expected SingularGenerator");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::SingularGenerator);
  }
}

TEST_CASE("corrupted theta fails only the primary invariant check") {
  CatalogEntry e = catalog_get("st8");
  e.expected->theta = Poly::parse("x^8 + 15*x^4*y^4 + y^8");
  VerifyOptions o;
  o.only = {1, 3, 4};
  VerifyReport r = verify_paper(e, o);
  CHECK_FALSE(r.all_passed());
  CHECK(r.failed() == std::vector<int>{3});
  CHECK(r.checks[1].detail.find("theta") != std::string::npos);
}

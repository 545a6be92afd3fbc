#include <doctest.h>

#include "gha/document.hpp"
#include "gha/errors.hpp"
#include "gha/fixtures.hpp"

using namespace gha;

TEST_CASE("documents round-trip") {
  for (const auto& f : standard_fixtures(3, 6)) {
    AlgebraDocument doc{f.algebra, {{"family", "gh"}, {"d", f.d}, {"name", f.name}}};
    const std::string text = serialize_document(doc);
    const AlgebraDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(serialize_document(back) == text);
  }
  AlgebraDocument bare{heisenberg(1), Json::object()};
  const std::string text = serialize_document(bare);
  CHECK(text.find("meta") == std::string::npos);
  CHECK(parse_document(text) == bare);
}

TEST_CASE("exact format") {
  BracketTable t;
  SparseVector v;
  v.push_back(2, Scalar(1, 2));
  v.push_back(3, -2);
  t[{0, 1}] = v;
  const AlgebraDocument doc{LieAlgebra(4, {"a", "b", "c", "d"}, t), Json::object()};
  CHECK(to_json(doc).dump() ==
        R"({"dim":4,"labels":["a","b","c","d"],"brackets":[{"i":0,"j":1,"v":{"2":"1/2","3":"-2"}}]})");
}

TEST_CASE("malformed documents are rejected") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"dim":2,"labels":["a"],"brackets":[]})",
      R"({"dim":2,"labels":["a","b"]})",
      R"({"dim":-1,"labels":[],"brackets":[]})",
      R"({"dim":2,"labels":["a","b"],"brackets":[],"extra":1})",
      R"({"dim":2,"labels":["a",1],"brackets":[]})",
      R"({"dim":3,"labels":["a","b","c"],"brackets":[{"i":1,"j":0,"v":{"2":"1"}}]})",
      R"({"dim":3,"labels":["a","b","c"],"brackets":[{"i":0,"j":3,"v":{"2":"1"}}]})",
      R"({"dim":3,"labels":["a","b","c"],"brackets":[{"i":0,"j":1,"v":{"3":"1"}}]})",
      R"({"dim":3,"labels":["a","b","c"],"brackets":[{"i":0,"j":1,"v":{"2":"2/4"}}]})",
      R"({"dim":3,"labels":["a","b","c"],"brackets":[{"i":0,"j":1,"v":{"2":1}}]})",
      R"({"dim":3,"labels":["a","b","c"],"brackets":[{"i":0,"j":1,"v":{"02":"1"}}]})",
      R"({"dim":3,"labels":["a","b","c"],"brackets":[{"i":0,"j":1,"v":{"2":"1"}},{"i":0,"j":1,"v":{}}]})",
      R"({"dim":3,"labels":["a","b","c"],"brackets":[{"i":0,"j":1}]})",
      R"({"dim":3,"labels":["a","b","c"],"brackets":[],"meta":[]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_document(text), ParseError);
  }
}

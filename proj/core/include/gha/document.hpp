#pragma once

// JSON exchange format for Lie algebras:
//
//   {"dim": 5, "labels": ["x1", ...],
//    "brackets": [{"i": 0, "j": 1, "v": {"3": "1", "4": "-1/2"}}, ...],
//    "meta": {...}}
//
// i < j, keys of v are basis indices, values exact rationals "p" or "p/q".
// Unlisted pairs bracket to zero; "meta" is optional and free-form.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gha/liealg.hpp"

namespace gha {

using Json = nlohmann::ordered_json;

struct AlgebraDocument {
  LieAlgebra algebra;
  Json meta = Json::object();

  friend bool operator==(const AlgebraDocument& a, const AlgebraDocument& b) {
    return a.algebra == b.algebra && a.algebra.labels() == b.algebra.labels() && a.meta == b.meta;
  }
};

Json to_json(const AlgebraDocument& doc);
// Throws ParseError on any deviation from the format (including duplicate
// pairs, non-canonical rationals and unknown keys).
AlgebraDocument document_from_json(const Json& j);

// Two-space indented, trailing newline.
std::string serialize_document(const AlgebraDocument& doc);
AlgebraDocument parse_document(std::string_view text);

// "-" reads standard input / writes standard output.
AlgebraDocument read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const AlgebraDocument& doc);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace gha

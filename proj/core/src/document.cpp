#include "gha/document.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "gha/errors.hpp"

namespace gha {

Json to_json(const AlgebraDocument& doc) {
  const LieAlgebra& a = doc.algebra;
  Json brackets = Json::array();
  for (const auto& [key, value] : a.table()) {
    Json v = Json::object();
    for (const auto& e : value.entries()) v[std::to_string(e.index)] = to_string(e.value);
    brackets.push_back({{"i", key.first}, {"j", key.second}, {"v", std::move(v)}});
  }
  Json j = {{"dim", a.dim()}, {"labels", a.labels()}, {"brackets", std::move(brackets)}};
  if (!doc.meta.empty()) j["meta"] = doc.meta;
  return j;
}

namespace {

std::size_t index_field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing \"") + key + "\"");
  if (!it->is_number_unsigned()) throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  return it->get<std::size_t>();
}

std::size_t parse_index(const std::string& s) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty() || (s.size() > 1 && s[0] == '0')) {
    throw ParseError("bad basis index \"" + s + "\"");
  }
  return value;
}

}  // namespace

AlgebraDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "dim" && key != "labels" && key != "brackets" && key != "meta") {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  const std::size_t dim = index_field(j, "dim");

  std::vector<std::string> labels;
  auto lab = j.find("labels");
  if (lab == j.end() || !lab->is_array()) throw ParseError("\"labels\" must be an array");
  if (lab->size() != dim) throw ParseError("\"labels\" length differs from \"dim\"");
  for (const auto& l : *lab) {
    if (!l.is_string()) throw ParseError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }

  auto br = j.find("brackets");
  if (br == j.end() || !br->is_array()) throw ParseError("\"brackets\" must be an array");
  BracketTable table;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : *br) {
    if (!b.is_object() || b.size() != 3 || !b.contains("v")) throw ParseError("bracket entries need exactly i, j, v");
    const std::size_t i = index_field(b, "i");
    const std::size_t jj = index_field(b, "j");
    if (!(i < jj && jj < dim)) throw ParseError("bracket indices must satisfy i < j < dim");
    if (!seen.insert({i, jj}).second) throw ParseError("duplicate bracket pair");
    const Json& v = b["v"];
    if (!v.is_object()) throw ParseError("\"v\" must be an object");
    std::vector<Entry> entries;
    for (const auto& [key, value] : v.items()) {
      const std::size_t k = parse_index(key);
      if (k >= dim) throw ParseError("coefficient index out of range");
      if (!value.is_string()) throw ParseError("coefficients must be rational strings");
      entries.push_back({k, parse_scalar(value.get<std::string>())});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.index < y.index; });
    SparseVector vec;
    for (std::size_t n = 0; n < entries.size(); ++n) {
      if (n > 0 && entries[n].index == entries[n - 1].index) throw ParseError("duplicate coefficient index");
      vec.push_back(entries[n].index, entries[n].value);
    }
    if (!vec.empty()) table[{i, jj}] = std::move(vec);
  }

  AlgebraDocument doc{LieAlgebra(dim, std::move(labels), table), Json::object()};
  if (auto m = j.find("meta"); m != j.end()) {
    if (!m->is_object()) throw ParseError("\"meta\" must be an object");
    doc.meta = *m;
  }
  return doc;
}

std::string serialize_document(const AlgebraDocument& doc) { return to_json(doc).dump(2) + "\n"; }

AlgebraDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return document_from_json(j);
}

AlgebraDocument read_document(const std::filesystem::path& path) {
  if (path == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return parse_document(text);
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

void write_document(const std::filesystem::path& path, const AlgebraDocument& doc) {
  write_text(path, serialize_document(doc));
}

}  // namespace gha

// Copyright 2026 The plcat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "plcat/model_file.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace plcat {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ModelFileError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t positive(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    fail(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(std::string(what) + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::unique_ptr<Model> pointed_sets(const json& doc) {
  if (doc.contains("max_size")) return PointedSets::up_to(positive(doc["max_size"], "max_size"));
  const json& objs = field(doc, "objects");
  if (!objs.is_array() || objs.empty()) fail("'objects' must be a non-empty array of sizes");
  std::vector<std::size_t> sizes;
  for (const auto& o : objs) sizes.push_back(positive(o, "object size"));
  return std::make_unique<PointedSets>(std::move(sizes));
}

std::unique_ptr<Model> commutative_monoids(const json& doc) {
  if (doc.contains("max_size")) {
    const auto n = positive(doc["max_size"], "max_size");
    if (n > 4) fail("max_size for commutative_monoids is at most 4");
    return CommutativeMonoids::up_to(n);
  }
  const json& objs = field(doc, "objects");
  if (!objs.is_array() || objs.empty()) fail("'objects' must be a non-empty array of monoids");
  std::vector<MonoidTable> tables;
  for (const auto& o : objs) {
    const json& name = field(o, "name");
    if (!name.is_string() || name.get<std::string>().empty())
      fail("monoid name must be a non-empty string");
    MonoidTable t;
    t.name = name.get<std::string>();
    t.mul  = int_array(field(o, "table"), "monoid table");
    t.size = static_cast<std::size_t>(std::llround(std::sqrt(double(t.mul.size()))));
    if (t.size == 0 || t.size * t.size != t.mul.size())
      fail("table of '" + t.name + "' is not square");
    tables.push_back(std::move(t));
  }
  return std::make_unique<CommutativeMonoids>(std::move(tables));
}

void apply_overrides(Model& m, const json& list) {
  if (!list.is_array()) fail("'overrides' must be an array");
  for (const auto& o : list) {
    const json& name = field(o, "map");
    if (!name.is_string()) fail("override map must be a string");
    const auto map = parse_structure_name(name.get<std::string>());
    if (!map) fail("unknown structure map '" + name.get<std::string>() + "'");
    const json& args = field(o, "args");
    if (!args.is_array()) fail("override args must be an array of object names");
    std::vector<ObjId> ids;
    for (const auto& a : args) {
      if (!a.is_string()) fail("override args must be object names");
      const auto id = m.find(a.get<std::string>());
      if (!id) fail("unknown object '" + a.get<std::string>() + "'");
      ids.push_back(*id);
    }
    m.set_override(*map, std::move(ids), int_array(field(o, "table"), "override table"));
  }
}

json mor_json(const Model& m, const Mor& f) {
  return {{"dom", m.name(f.dom)}, {"cod", m.name(f.cod)}, {"map", f.map}};
}

// object ::= name | "(" object ("+" | "*") object ")"
class ObjectParser {
 public:
  ObjectParser(const Model& m, std::string_view s) : m_(m), s_(s) {}

  std::optional<ObjId> parse() {
    auto x = object();
    if (!x || pos_ != s_.size()) return std::nullopt;
    return x;
  }

 private:
  std::optional<ObjId> object() {
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      auto a = object();
      if (!a || pos_ >= s_.size()) return std::nullopt;
      const char op = s_[pos_++];
      auto       b  = object();
      if (!b || pos_ >= s_.size() || s_[pos_] != ')') return std::nullopt;
      ++pos_;
      if (op == '+') return m_.sum(*a, *b);
      if (op == '*') return m_.prod(*a, *b);
      return std::nullopt;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_' || s_[pos_] == '-' || s_[pos_] == '.'))
      ++pos_;
    if (pos_ == start) return std::nullopt;
    return m_.find(s_.substr(start, pos_ - start));
  }

  const Model&     m_;
  std::string_view s_;
  std::size_t      pos_ = 0;
};

ObjId object_or_fail(const Model& m, const json& j) {
  if (!j.is_string()) fail("object must be given by name");
  const auto x = parse_object(m, j.get<std::string>());
  if (!x) fail("unknown object '" + j.get<std::string>() + "'");
  return *x;
}

}  // namespace

std::unique_ptr<Model> parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("model file must be a JSON object");
  const json& version = field(doc, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion)
    fail("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) fail("'kind' must be a string");
  try {
    std::unique_ptr<Model> m;
    if (kind == "pointed_sets")
      m = pointed_sets(doc);
    else if (kind == "commutative_monoids")
      m = commutative_monoids(doc);
    else
      fail("unknown kind '" + kind.get<std::string>() + "'");
    if (doc.contains("overrides")) apply_overrides(*m, doc["overrides"]);
    return m;
  } catch (const ModelError& e) {
    fail(e.what());
  }
}

std::unique_ptr<Model> load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model(buf.str());
  } catch (const ModelFileError& e) {
    fail(path.string() + ": " + e.what());
  }
}

std::optional<ObjId> parse_object(const Model& m, std::string_view text) {
  return ObjectParser(m, text).parse();
}

std::string counterexample_to_json(const Model& m, const Counterexample& c) {
  json j;
  j["law"]     = c.law;
  j["objects"] = json::array();
  for (ObjId x : c.instance.objects) j["objects"].push_back(m.name(x));
  j["morphisms"] = json::array();
  for (const Mor& f : c.instance.morphisms) j["morphisms"].push_back(mor_json(m, f));
  j["labels"] = c.instance.labels;
  j["detail"] = c.detail;
  return j.dump();
}

Counterexample counterexample_from_json(const Model& m, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  // Accept either the counterexample itself or a report that carries one.
  if (j.is_object() && j.contains("counterexample")) j = j["counterexample"];
  Counterexample c;
  const json& law = field(j, "law");
  if (!law.is_string()) fail("'law' must be a string");
  c.law = law.get<std::string>();
  if (j.contains("objects"))
    for (const auto& o : j["objects"]) c.instance.objects.push_back(object_or_fail(m, o));
  if (j.contains("morphisms"))
    for (const auto& f : j["morphisms"]) {
      Mor mor{object_or_fail(m, field(f, "dom")), object_or_fail(m, field(f, "cod")),
              int_array(field(f, "map"), "morphism map")};
      if (!m.is_morphism(mor.dom, mor.cod, mor.map))
        fail("morphism " + m.describe(mor) + " is not a morphism of the model");
      c.instance.morphisms.push_back(std::move(mor));
    }
  if (j.contains("labels"))
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) fail("labels must be strings");
      c.instance.labels.push_back(l.get<std::string>());
    }
  if (j.contains("detail") && j["detail"].is_string()) c.detail = j["detail"].get<std::string>();
  return c;
}

}  // namespace plcat

#include "quadwalk/catalog.hpp"

#include "quadwalk/errors.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace quadwalk {

namespace {

struct Row {
  int id;
  const char* steps;
  ModelKind kind;
};

constexpr Row kRows[] = {
    {1, "N,E,S,W", ModelKind::HighlySymmetric},
    {2, "NE,SE,SW,NW", ModelKind::HighlySymmetric},
    {3, "N,NE,SE,S,SW,NW", ModelKind::HighlySymmetric},
    {4, "N,NE,E,SE,S,SW,W,NW", ModelKind::HighlySymmetric},
    {5, "NE,S,W", ModelKind::Algebraic},
    {6, "N,E,SW", ModelKind::Algebraic},
    {7, "N,NE,E,S,SW,W", ModelKind::Algebraic},
    {8, "NE,E,SW,W", ModelKind::Algebraic},
    {9, "NE,S,NW", ModelKind::PositiveDrift},
    {10, "N,NE,S,NW", ModelKind::PositiveDrift},
    {11, "NE,E,S,W,NW", ModelKind::PositiveDrift},
    {12, "N,NE,SE,SW,NW", ModelKind::PositiveDrift},
    {13, "N,NE,E,S,W,NW", ModelKind::PositiveDrift},
    {14, "N,NE,E,SE,SW,W,NW", ModelKind::PositiveDrift},
    {15, "N,SE,W", ModelKind::Sporadic},
    {16, "N,E,SE,S,W,NW", ModelKind::Sporadic},
    {17, "N,SE,SW", ModelKind::NegativeDrift},
    {18, "N,SE,S,SW", ModelKind::NegativeDrift},
    {19, "N,E,SE,SW,W", ModelKind::NegativeDrift},
    {20, "NE,SE,S,SW,NW", ModelKind::NegativeDrift},
    {21, "N,E,SE,S,SW,W", ModelKind::NegativeDrift},
    {22, "NE,E,SE,S,SW,W,NW", ModelKind::NegativeDrift},
    {23, "E,SE,W,NW", ModelKind::Sporadic},
    {24, "N,SE,NW", ModelKind::InfiniteGroup},
    {25, "NE,SE,NW", ModelKind::InfiniteGroup},
    {26, "N,NE,E,SW", ModelKind::InfiniteGroup},
    {27, "N,NE,SE,SW", ModelKind::InfiniteGroup},
    {28, "N,NE,SE,W", ModelKind::InfiniteGroup},
    {29, "N,NE,SE,NW", ModelKind::InfiniteGroup},
    {30, "N,NE,S,W", ModelKind::InfiniteGroup},
    {31, "N,E,SE,SW", ModelKind::InfiniteGroup},
    {32, "N,E,SE,W", ModelKind::InfiniteGroup},
    {33, "N,E,SE,NW", ModelKind::InfiniteGroup},
    {34, "N,E,S,SW", ModelKind::InfiniteGroup},
    {35, "N,SE,S,W", ModelKind::InfiniteGroup},
    {36, "N,SE,SW,W", ModelKind::InfiniteGroup},
    {37, "N,SE,SW,NW", ModelKind::InfiniteGroup},
    {38, "N,SE,W,NW", ModelKind::InfiniteGroup},
    {39, "NE,SE,S,W", ModelKind::InfiniteGroup},
    {40, "NE,SE,S,NW", ModelKind::InfiniteGroup},
    {41, "NE,SE,SW,W", ModelKind::InfiniteGroup},
    {42, "NE,S,SW,W", ModelKind::InfiniteGroup},
    {43, "N,NE,E,SE,SW", ModelKind::InfiniteGroup},
    {44, "N,NE,E,SE,W", ModelKind::InfiniteGroup},
    {45, "N,NE,E,SE,NW", ModelKind::InfiniteGroup},
    {46, "N,NE,E,S,SW", ModelKind::InfiniteGroup},
    {47, "N,NE,E,S,W", ModelKind::InfiniteGroup},
    {48, "N,NE,SE,S,SW", ModelKind::InfiniteGroup},
    {49, "N,NE,SE,S,NW", ModelKind::InfiniteGroup},
    {50, "N,NE,SE,SW,W", ModelKind::InfiniteGroup},
    {51, "N,NE,SE,W,NW", ModelKind::InfiniteGroup},
    {52, "N,NE,S,SW,W", ModelKind::InfiniteGroup},
    {53, "N,NE,S,SW,NW", ModelKind::InfiniteGroup},
    {54, "N,NE,S,W,NW", ModelKind::InfiniteGroup},
    {55, "N,E,SE,S,SW", ModelKind::InfiniteGroup},
    {56, "N,E,SE,S,W", ModelKind::InfiniteGroup},
    {57, "N,E,SE,S,NW", ModelKind::InfiniteGroup},
    {58, "N,E,SE,SW,NW", ModelKind::InfiniteGroup},
    {59, "N,E,S,SW,W", ModelKind::InfiniteGroup},
    {60, "N,SE,S,SW,W", ModelKind::InfiniteGroup},
    {61, "N,SE,S,SW,NW", ModelKind::InfiniteGroup},
    {62, "N,SE,S,W,NW", ModelKind::InfiniteGroup},
    {63, "N,SE,SW,W,NW", ModelKind::InfiniteGroup},
    {64, "NE,SE,S,SW,W", ModelKind::InfiniteGroup},
    {65, "NE,SE,S,W,NW", ModelKind::InfiniteGroup},
    {66, "N,NE,E,SE,S,SW", ModelKind::InfiniteGroup},
    {67, "N,NE,E,SE,S,NW", ModelKind::InfiniteGroup},
    {68, "N,NE,E,SE,SW,W", ModelKind::InfiniteGroup},
    {69, "N,NE,E,SE,SW,NW", ModelKind::InfiniteGroup},
    {70, "N,NE,SE,S,SW,W", ModelKind::InfiniteGroup},
    {71, "N,NE,SE,S,W,NW", ModelKind::InfiniteGroup},
    {72, "N,NE,SE,SW,W,NW", ModelKind::InfiniteGroup},
    {73, "N,NE,S,SW,W,NW", ModelKind::InfiniteGroup},
    {74, "N,E,SE,S,SW,NW", ModelKind::InfiniteGroup},
    {75, "N,SE,S,SW,W,NW", ModelKind::InfiniteGroup},
    {76, "NE,SE,S,SW,W,NW", ModelKind::InfiniteGroup},
    {77, "N,NE,E,SE,S,SW,W", ModelKind::InfiniteGroup},
    {78, "N,NE,E,SE,S,W,NW", ModelKind::InfiniteGroup},
    {79, "N,E,SE,S,SW,W,NW", ModelKind::InfiniteGroup},
};

ModelKind kind_from_string(const std::string& s) {
  for (ModelKind k : {ModelKind::HalfplaneReducible, ModelKind::HighlySymmetric, ModelKind::PositiveDrift,
                      ModelKind::NegativeDrift, ModelKind::Sporadic, ModelKind::Algebraic,
                      ModelKind::InfiniteGroup}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError("unknown model class: " + s);
}

}  // namespace

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  std::set<int> ids;
  for (const auto& e : entries_) {
    if (!ids.insert(e.id).second) throw ParseError("duplicate catalog id " + std::to_string(e.id));
  }
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = [] {
    std::vector<CatalogEntry> entries;
    for (const Row& r : kRows) {
      CatalogEntry e;
      e.id = r.id;
      e.steps = parse_step_set(r.steps).steps.with_catalog_id(r.id);
      e.kind = r.kind;
      e.asymptotics_tag = r.id <= 23 ? "encoded:" + std::to_string(r.id) : "none";
      entries.push_back(std::move(e));
    }
    return Catalog(std::move(entries));
  }();
  return catalog;
}

Catalog Catalog::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("catalog: ") + ex.what());
  }
  if (!doc.is_array()) throw ParseError("catalog: expected a JSON list");
  std::vector<CatalogEntry> entries;
  for (const auto& item : doc) {
    CatalogEntry e;
    try {
      e.id = item.at("id").get<int>();
      e.steps = parse_step_set(item.at("steps").get<std::string>()).steps.with_catalog_id(e.id);
      e.kind = kind_from_string(item.at("class").get<std::string>());
      e.asymptotics_tag = item.value("asymptotics", std::string("none"));
      e.notes = item.value("notes", std::string());
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("catalog entry: ") + ex.what());
    }
    entries.push_back(std::move(e));
  }
  return Catalog(std::move(entries));
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string Catalog::to_json() const {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json item;
    item["id"] = e.id;
    item["steps"] = e.steps.to_string();
    item["class"] = to_string(e.kind);
    item["asymptotics"] = e.asymptotics_tag;
    if (!e.notes.empty()) item["notes"] = e.notes;
    doc.push_back(item);
  }
  return doc.dump(1);
}

const CatalogEntry* Catalog::find_id(int id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

CatalogMatch Catalog::match(const StepSet& s) const {
  for (const auto& e : entries_) {
    if (e.steps == s) return {&e, false};
  }
  StepSet sw = s.swapped();
  for (const auto& e : entries_) {
    if (e.steps == sw) return {&e, true};
  }
  return {};
}

}  // namespace quadwalk

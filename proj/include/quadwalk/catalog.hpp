#pragma once

#include "quadwalk/model.hpp"

#include <string>
#include <vector>

namespace quadwalk {

struct CatalogEntry {
  int id = 0;
  StepSet steps;
  ModelKind kind = ModelKind::InfiniteGroup;
  std::string asymptotics_tag;  // "encoded:<id>" or "none"
  std::string notes;
};

struct CatalogMatch {
  const CatalogEntry* entry = nullptr;
  bool swapped = false;  // the query equals the entry's steps after x<->y exchange
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> entries);

  // The 79 canonical non-trivial models; ids 1..23 are the finite-group models.
  static const Catalog& builtin();
  static Catalog from_json(const std::string& text);
  static Catalog load_file(const std::string& path);
  std::string to_json() const;

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find_id(int id) const;
  CatalogMatch match(const StepSet& s) const;

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace quadwalk

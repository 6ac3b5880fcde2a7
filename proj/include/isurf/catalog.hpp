#pragma once

#include "isurf/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace isurf {

// One golden identity. Running it yields report lines whose ids start with `id`.
struct CatalogEntry {
  std::string id;
  std::string citation;
  std::string summary;
  std::function<Report()> run;
};

const std::vector<CatalogEntry>& replication_catalog();

// `only` selects an exact id or every id of the form "<only>:...". Empty selects all.
std::vector<const CatalogEntry*> select_entries(const std::string& only);

Report run_catalog(const std::string& only = {});

}  // namespace isurf

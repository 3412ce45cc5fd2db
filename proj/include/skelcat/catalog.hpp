#pragma once

#include <string>
#include <vector>

#include "skelcat/ribbon.hpp"

namespace skelcat {

struct CatalogEntry {
    std::string name;
    CategorySpec spec;
    std::string provenance;
};

/// Names of the built-in entries, in catalog order.
const std::vector<std::string>& catalog_names();

/// Exact built-in category data. Throws LookupError for unknown names.
CategorySpec load_named(const std::string& name);

const CatalogEntry& catalog_entry(const std::string& name);

/// Deligne product: pairs of labels, componentwise fusion and duals,
/// multiplying twists and dimensions.
CategorySpec deligne_product(const CategorySpec& a, const CategorySpec& b);

}  // namespace skelcat

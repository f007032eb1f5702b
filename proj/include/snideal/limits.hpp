#pragma once

#include <cstddef>

namespace snideal {

/// Size caps. Defaults may be replaced wholesale by the SNIDEAL_MAX_ORDER
/// environment variable, read once on first use.
struct Limits {
  std::size_t table_order_cap = 65'536;      // derived (table-backed) rings
  std::size_t formula_order_cap = 1'000'000; // Z_n and products of Z_n
  std::size_t enumeration_cap = 4'096;       // ideal enumeration, pair scans
  std::size_t dense_table_max = 2'048;       // tabulate arithmetic up to here
  std::size_t exhaustive_axiom_max = 64;     // construction-time axiom check
};

/// Process-wide limits (mutable for tests and the CLI).
Limits& limits();

}  // namespace snideal

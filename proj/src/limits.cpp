#include "snideal/limits.hpp"

#include <cstdlib>

namespace snideal {

Limits& limits() {
  static Limits l = [] {
    Limits d;
    if (const char* env = std::getenv("SNIDEAL_MAX_ORDER")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v >= 2) {
        d.table_order_cap = v;
        d.formula_order_cap = v;
        d.enumeration_cap = v;
      }
    }
    return d;
  }();
  return l;
}

}  // namespace snideal

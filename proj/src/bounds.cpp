#include "contsum/bounds.hpp"

#include <cstdlib>

namespace contsum {

long long hard_bound(long long fallback) {
  if (const char* s = std::getenv("CONTSUM_MAX_BOUND")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

}  // namespace contsum

#include "pct/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pct {

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("PCT_THREADS")) {
    try {
      long cap = std::stol(env);
      if (cap > 0 && static_cast<unsigned long>(cap) < hw) hw = static_cast<unsigned>(cap);
    } catch (const std::exception&) {
      // Ignore malformed values.
    }
  }
  return hw;
}

}  // namespace pct

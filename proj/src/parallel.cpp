#include "motifgraphs/parallel.hpp"

#include <cstdlib>
#include <string>

namespace motifgraphs {

unsigned worker_count() {
  if (const char* env = std::getenv("MOTIFGRAPH_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace motifgraphs

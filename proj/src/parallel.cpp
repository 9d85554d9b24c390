#include "bdcluster/parallel.hpp"

#include <cstdlib>
#include <string>

namespace bdc {

int worker_count() {
  if (const char* env = std::getenv("BD_CLUSTER_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace bdc

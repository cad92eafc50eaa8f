#include "support.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace univoque::test {

namespace {
std::uint64_t g_seed = 0x5eed2024;
bool g_seed_from_args = false;
}  // namespace

std::uint64_t seed() {
  if (!g_seed_from_args) {
    if (const char* env = std::getenv("UNIVOQUE_SEED"); env && *env) return std::stoull(env);
  }
  return g_seed;
}

void set_seed_from_args(int& argc, char** argv) {
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) {
      g_seed = std::stoull(argv[i] + 7);
      g_seed_from_args = true;
    } else {
      argv[out++] = argv[i];
    }
  }
  argc = out;
}

}  // namespace univoque::test

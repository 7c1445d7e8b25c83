#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <string>

static unsigned g_test_seed = 12345;

unsigned test_seed() { return g_test_seed; }

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0) {
      g_test_seed = static_cast<unsigned>(std::stoul(arg.substr(7)));
    }
  }
  doctest::Context context;
  context.applyCommandLine(argc, argv);
  return context.run();
}

#include <string>
#include <vector>

#include "rankcop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rankcop::cli::run(args);
}

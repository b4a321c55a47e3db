#include <vector>

#include "mostow/experiments.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mostow::cli_main(args);
}

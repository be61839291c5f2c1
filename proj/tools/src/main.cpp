#include <chrono>
#include <iostream>
#include <vector>

#include "wmpcli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto start = std::chrono::steady_clock::now();
  const int code = wmpcli::run_cli(args, std::cout, std::cerr);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cerr << "wall_ms=" << ms << "\n";
  return code;
}

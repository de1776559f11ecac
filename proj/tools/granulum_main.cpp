#include <iostream>
#include <string>
#include <vector>

#include "granulum/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return granulum::cli::dispatch(std::move(args), std::cout, std::cerr,
                                 std::cin);
}

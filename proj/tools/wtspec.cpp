#include <iostream>
#include <string>
#include <vector>

#include "wtspec/cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wtspec::cli::dispatch(args, std::cout, std::cerr);
}

#include <iostream>

#include "run_spec.hpp"

int main(int argc, char** argv) {
  int code = 0;
  const auto spec = steer::cli::parse_args(argc, argv, std::cout, std::cerr, code);
  if (!spec) return code;
  return steer::cli::run(*spec, std::cout, std::cerr);
}

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto parsed = mgsize::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return mgsize::cli::run(*parsed.config, std::cout, std::cerr);
}

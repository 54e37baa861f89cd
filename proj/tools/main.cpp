#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "facering/parallel.hpp"

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("FACERING_THREADS")) {
    try {
      facering::set_thread_count(static_cast<std::size_t>(std::stoul(threads)));
    } catch (const std::exception&) {
      std::cerr << "{\"error\":\"InputError\",\"message\":\"FACERING_THREADS must be a number\"}\n";
      return 3;
    }
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  return facering::cli::run(args, std::cout, std::cerr);
}

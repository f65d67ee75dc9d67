#include <iostream>
#include <string>
#include <vector>

#include "qanyon/run.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    bool help = false;
    const qanyon::RunConfig config = qanyon::parse_arguments(args, std::cout, &help);
    if (help) return 0;
    return qanyon::run(config, std::cout, std::cerr);
  } catch (const qanyon::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }
}

#include <iostream>

#include "morsenov_cli/cli.hpp"

int main(int argc, char** argv) {
  const auto result = morsenov::cli::run(std::vector<std::string>(argv, argv + argc));
  std::ostream& out = result.exit_code == morsenov::cli::kOk || !result.help.empty() ? std::cout : std::cerr;
  out << morsenov::cli::render(result) << '\n';
  return result.exit_code;
}

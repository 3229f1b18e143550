#include <iostream>

#include "liesalg/cli_dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  liesalg::CliResult res = liesalg::run_cli(args);
  std::cout << res.output;
  return res.exit_code;
}

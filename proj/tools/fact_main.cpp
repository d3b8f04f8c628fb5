#include <iostream>
#include <vector>

int fact_cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fact_cli_run(args, std::cout, std::cerr);
}

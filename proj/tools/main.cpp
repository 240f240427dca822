#include <iostream>

#include "bei/cli.hpp"

int main(int argc, char** argv) {
  return bei::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

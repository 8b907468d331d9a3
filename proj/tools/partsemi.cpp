#include "partsemi/cli.hpp"

int main(int argc, char** argv) {
  return partsemi::cli::run(argc, argv);
}

#include "vfrac/cli.hpp"

int main(int argc, char** argv) { return vfrac::cli::run(argc, argv); }

#include "nsenum/cli.hpp"

int main(int argc, char** argv) { return nsenum::cli::main(argc, argv); }

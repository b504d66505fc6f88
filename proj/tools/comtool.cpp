#include "coms/cli.hpp"

int main(int argc, char** argv) { return coms::cli::run(argc, argv); }

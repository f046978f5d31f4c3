#include "nilorb/cli.hpp"

int main(int argc, char** argv) { return nilorb::cli::main(argc, argv); }

#include "iwn/cli.hpp"

int main(int argc, char** argv) { return iwn::cli::main(argc, argv); }

#include "cli/cli.hpp"

int main(int argc, char** argv) { return cyclia::cli::main_entry(argc, argv); }

#include "lienard/cli.hpp"

int main(int argc, char** argv) { return lienard::cli::run_command(argc, argv); }

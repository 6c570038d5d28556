#include "fockflow/cli.hpp"

int main(int argc, char** argv) { return fockflow::cli::run_cli(argc, argv); }

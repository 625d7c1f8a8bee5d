#include "hermite_cli.hpp"

int main(int argc, char** argv) { return hermite_cli::run(argc, argv); }

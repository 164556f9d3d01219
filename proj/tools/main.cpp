#include "cogol/cli.hpp"

int main(int argc, char** argv) { return cogol::run_cli(argc, argv); }

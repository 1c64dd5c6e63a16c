#include "dinv/cli.hpp"

int main(int argc, char** argv) { return dinv::run_cli(argc, argv); }

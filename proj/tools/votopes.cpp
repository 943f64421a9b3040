#include "votopes/cli_io.hpp"

int main(int argc, char** argv) { return votopes::run_cli(argc, argv); }

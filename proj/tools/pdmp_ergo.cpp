#include "pdmp/cli.hpp"

int main(int argc, char** argv) { return pdmp::cli_main(argc, argv); }

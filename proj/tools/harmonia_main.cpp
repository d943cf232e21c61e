#include "harmonia/cli.hpp"

int main(int argc, char** argv) { return harmonia::cli_main(argc, argv); }

#include "spiderweb/cli.hpp"

int main(int argc, char** argv) { return spiderweb::run_cli(argc, argv); }

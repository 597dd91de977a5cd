#include "tropgeo/cli.hpp"

int main(int argc, char** argv) { return tropgeo::run_cli(argc, argv); }

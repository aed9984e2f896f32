#include "degstab/cli.hpp"

int main(int argc, char** argv) { return degstab::run_cli(argc, argv); }

#include "spirs/cli.hpp"

int main(int argc, char** argv) { return spirs::cli::run(argc, argv); }

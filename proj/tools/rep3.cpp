#include "cli.hpp"

int main(int argc, char** argv) { return rep3::cli::run(argc, argv); }

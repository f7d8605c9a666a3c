#include "aeris/cli.hpp"

int main(int argc, char** argv) { return aeris::cli::run(argc, argv); }

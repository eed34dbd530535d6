#include "revkit/cli.hpp"

int main(int argc, char** argv) { return revkit::cli::run(argc, argv); }

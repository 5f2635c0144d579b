#include "cli.hpp"

int main(int argc, char** argv) { return quatlat::cli::run(argc, argv); }

#include "cli.hpp"

int main(int argc, char** argv) { return subshift::cli::run(argc, argv); }

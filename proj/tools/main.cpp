#include "cli.hpp"

int main(int argc, char** argv) { return rbp::cli::run(argc, argv, std::cout, std::cerr); }

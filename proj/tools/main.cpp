#include "cli.hpp"

int main(int argc, char** argv) { return slw::cli::run(argc, argv); }

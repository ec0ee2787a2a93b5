// main.cpp — secretary command-line entry point.
#include "cli.hpp"

int main(int argc, char** argv) { return secretary::cli::main_entry(argc, argv); }

#include "megkit/io.hpp"

int main(int argc, char** argv) { return megkit::run_cli(argc, argv); }

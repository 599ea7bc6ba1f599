#include "eulerchar/cli.hpp"

int main(int argc, char** argv) { return eulerchar::cli::run({argv + 1, argv + argc}); }

#include "rootzeta/cli.hpp"

int main(int argc, char** argv) { return rootzeta::cli::run(argc, argv); }

#include "fcx/cli.hpp"

int main(int argc, char** argv) { return fcx::cli::run(argc, argv); }

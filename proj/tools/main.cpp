#include "kahler/cli/app.hpp"

int main(int argc, char** argv) { return kahler::cli::run(argc, argv); }

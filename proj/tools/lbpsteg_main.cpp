#include "lbpsteg/cli.hpp"

int main(int argc, char** argv) { return lbpsteg::cli::run(argc, argv); }

#include "kpsumm/cli.hpp"

int main(int argc, char** argv) { return kpsumm::cli::run(argc, argv); }

#include "ellip/cli.hpp"

int main(int argc, char** argv) { return ellip::run_cli(argc, argv); }

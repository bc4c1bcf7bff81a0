#include "ptcalc_cli.hpp"

int main(int argc, char** argv) { return ptc::cli::run(argc, argv); }

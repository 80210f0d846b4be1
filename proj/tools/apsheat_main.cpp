#include "apsheat/cli.hpp"

int main(int argc, char** argv) { return apsheat::run_cli(argc, argv); }

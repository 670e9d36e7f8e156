#include "gss/cli.hpp"

int main(int argc, char** argv) { return gss::run_cli(argc, argv); }

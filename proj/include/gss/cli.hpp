#pragma once

namespace gss {

// Entry point for the command-line front end; returns the process exit code
// (0 success, 1 check failure, 2 usage or input error).
int run_cli(int argc, char** argv);

} // namespace gss

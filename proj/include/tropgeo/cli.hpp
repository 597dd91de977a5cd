#pragma once

namespace tropgeo {

// Subcommand front end; returns the process exit code. Parse failures exit
// with 1, precondition violations with 2, internal invariant breaches with 3.
int run_cli(int argc, char** argv);

}  // namespace tropgeo

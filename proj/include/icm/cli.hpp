#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace icm {

// Everything a parsed invocation carries.  Which fields matter depends on the
// subcommand; defaults are the documented ones.
struct CliConfig {
    std::string subcommand;
    std::vector<long long> generators;
    long long genus = 8;
    std::string kind;            // poset: preceq|subset; irreducibles: plus|join|meet|union|intersection
    std::string format = "text"; // text|json|dot
    std::string out_path;        // empty: write to the stream given to run_cli
    std::string ideal;           // ideals --ideal payload, a Kunz vector
    std::string claim;           // verify claim id
    long long gen = 0;           // verify --gen
    long long mult = 4;          // verify --mult
};

// Parses and runs one invocation.  Exit codes: 0 success or verified claim,
// 1 refuted claim, 2 usage or input error, 3 violated precondition.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace icm

#pragma once
#include <string>

#include "sharpmax/search.hpp"

namespace sharpmax {

struct RunSpec {
    std::string command;       // norm | var | star-formula | complete-structured | constants |
                               // asymptotics | atlas | zline-check | conjecture-scan | sweep
    std::string graph_source;  // "family:size" or a path to an edge list (.txt or .json)
    int n = 0;                 // for the closed-form commands
    double p = 2.0;
    double p_from = 1.0, p_to = 0.0, p_step = 0.0;  // sweep range
    std::string method;                             // norm/var: formula|structured|oracle|ascent|delta
    std::string zline_op;  // var-norm | lipschitz-half | lipschitz-centered | variation | maximal
    std::string lattice_f = "delta";  // delta | indicator:LEN | tent:K | path to json
    std::string quantity;             // sweep: formula-p | star-lower | st-lower | st-upper | norm-star-p
    double tol = 1e-9;
    SearchConfig cfg;
    int jobs = 0;
    std::string output_path;   // empty writes to stdout
    std::string summary_path;  // atlas summary csv
    std::string format = "json";
};

RunSpec run_spec_from_json_file(const std::string& path);

// Exit codes: 0 success, 2 validation error, 3 budget exceeded,
// 4 violated internal invariant.
int run(const RunSpec& spec);

}  // namespace sharpmax

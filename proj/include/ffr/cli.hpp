#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ffr {

// Parsed command-line state shared by the subcommand handlers. Flags are
// validated per subcommand before any computation runs.
struct CliConfig {
    std::string subcommand;
    std::string p_arg;
    std::string q_arg;
    std::string alpha_text = "1";
    std::string x_text;
    std::string theta_text = "1";
    std::string root_max_text;
    std::string claim;
    std::string sweep_op;
    std::string report_path;
    std::string out_path;
    std::string format = "json";
    int d = 1;
    int k = 0;
    int n = 0;
    int d_lo = 1;
    int d_hi = 0;
    int d_max = 0;
    int n_max = -1;
    int trials = 0;
    int steps = 0;
    std::uint64_t seed = 0;
    double alpha_lo = -1.0;
    double alpha_hi = -1.0;
    double margin = -1.0;
    double tol = 1e-13;
    bool want_maxroot = false;
};

// Dispatches argv (program name excluded) to one of convolve, theta, phi,
// gegenbauer, pinch, verify, sweep. Returns 0 on success, 1 when a
// verification claim reports failures, 2 on usage or input errors.
int run(const std::vector<std::string>& args);

}  // namespace ffr

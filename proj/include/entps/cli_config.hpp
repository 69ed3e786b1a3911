#ifndef ENTPS_CLI_CONFIG_HPP
#define ENTPS_CLI_CONFIG_HPP

#include <cstdint>
#include <string>

#include "entps/params.hpp"
#include "entps/verify.hpp"

namespace entps {

/// File-based run configuration for the CLI. Unknown keys are rejected so
/// a typo never silently falls back to a default.
struct RunConfig {
    RepParams params = RepParams::validate(0.5, 1.0, 0.5, -1.0);
    complexd sigma{};
    complexd tau{};
    int cutoff = 24;
    verify::Tier tier = verify::Tier::quick;
    std::uint64_t seed = 20110515;
    int order2d = 32;
    int order4d = 20;
    std::string output_path;            // empty: standard output
    std::string output_format = "json"; // "json" or "csv"
};

/// Parse a JSON config document. Accepted keys: params {alpha,beta,gamma,
/// delta} or kappa, sigma, tau (each [re, im]), cutoff, tier, seed,
/// quadrature {order2d, order4d}, output {path, format}.
/// Throws DomainError naming the offending key on anything else.
RunConfig parse_config(const std::string& json_text);

/// Read and parse a config file.
RunConfig load_config(const std::string& path);

/// Parse a "re,im" (or bare "re") command-line complex literal.
complexd parse_complex(const std::string& text);

}  // namespace entps

#endif

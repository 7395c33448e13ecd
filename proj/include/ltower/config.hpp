#ifndef LTOWER_CONFIG_HPP
#define LTOWER_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>

#include "ltower/tower.hpp"

namespace ltower {

// A parsed tower description: the seed spec plus any run parameters the
// config chose to pin.  Command-line flags override these.
struct ParsedConfig {
    SeedSpec spec;
    std::optional<unsigned> max_level;
    std::optional<unsigned> terms;
    std::optional<unsigned> precision;
    std::optional<std::uint64_t> vertex_cap;
};

// Line-oriented "key = value" grammar:
//
//   # comment
//   prime = 2
//   seeds = [ "1/3", "3/5" ]
//   levels = 5          # optional, as are terms / precision / cap
//
// Syntax problems throw ParseError with a 1-based line and column; semantic
// problems (composite prime, denominator divisible by the prime, invalid
// square-root branch, no unit seed) throw SemanticError.
ParsedConfig parse_config_text(std::string_view text);
ParsedConfig parse_config_file(const std::string& path);

// Shared semantic validation for a spec assembled from any source: checks
// the prime, resolves every seed mod l, and requires a unit seed.
void validate_spec(const SeedSpec& spec);

} // namespace ltower

#endif

#ifndef LTOWER_TOWER_HPP
#define LTOWER_TOWER_HPP

#include <string>

#include "ltower/invariants.hpp"
#include "ltower/treecount.hpp"

namespace ltower {

struct RunParams {
    unsigned terms = 12;
    unsigned precision = 24;
    unsigned max_level = 5;
    std::uint64_t vertex_cap = 1024;
    unsigned jobs = 1;
    unsigned display_digits = 8;
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

// Everything a tower run establishes: the series preview, the invariants,
// the measured valuations, the fitted constant, and whether the growth law
// ord(kappa_n) = mu*l^n + lambda*n + nu holds from the onset level on.
struct TowerReport {
    unsigned long prime = 2;
    std::vector<std::string> seed_text;
    RunParams params;

    std::vector<std::string> series_digits;
    std::vector<Valuation> series_valuations;

    unsigned mu = 0;
    unsigned lambda = 1;
    unsigned k0 = 1;
    bool provisional = false;
    unsigned n0_bound = 0;

    std::vector<LevelCount> levels;

    long long nu = 0;
    unsigned onset = 0;
    bool difference_check = false;

    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> diagnostics;
};

struct GrowthFit {
    long long nu;
    unsigned onset;
};

// Fit nu from the deepest level's residual ord - mu*l^n - lambda*n and find
// the onset: the first level from which that residual stays constant.
// Levels must cover 0..n0_bound+1 (InsufficientLevels otherwise).  An onset
// beyond n0_bound means the claimed invariants cannot be right; the caller
// turns that into a failed verdict.
GrowthFit fit_growth(const std::vector<LevelCount>& levels, unsigned mu, unsigned lambda,
                     unsigned long prime, unsigned n0_bound);

// Recheck the growth law from the report's own fields: pass needs the law
// to hold at every measured level >= onset, at least two such levels, and
// onset <= n0_bound.  Deliberately corrupted invariants fail here.
Verdict validate_growth(const TowerReport& report);

// First differences of ord from the onset must equal mu*phi(l^n) + lambda.
bool check_consecutive_differences(const TowerReport& report);

// Full pipeline: series, invariants, per-level tree counts, fit, verdict.
TowerReport run_tower(const SeedSpec& spec, const RunParams& params);

std::string render_table(const TowerReport& report);
std::string render_machine(const TowerReport& report);

} // namespace ltower

#endif

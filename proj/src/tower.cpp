#include "ltower/tower.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ltower {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass:
        return "pass";
    case Verdict::Fail:
        return "fail";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

GrowthFit fit_growth(const std::vector<LevelCount>& levels, unsigned mu, unsigned lambda,
                     unsigned long prime, unsigned n0_bound) {
    if (levels.empty() || levels.back().level < n0_bound + 1)
        throw InsufficientLevels("growth fit needs measured levels 0.." +
                                 std::to_string(n0_bound + 1));

    auto residual = [&](const LevelCount& rec) {
        return static_cast<long long>(rec.ell_ord) -
               predicted_ord(rec.level, mu, lambda, 0, prime);
    };

    GrowthFit fit;
    fit.nu = residual(levels.back());
    fit.onset = levels.back().level;
    for (auto it = levels.rbegin() + 1; it != levels.rend(); ++it) {
        if (residual(*it) != fit.nu)
            break;
        fit.onset = it->level;
    }
    return fit;
}

Verdict validate_growth(const TowerReport& report) {
    unsigned matched = 0;
    for (const LevelCount& rec : report.levels) {
        if (rec.level < report.onset)
            continue;
        long long want =
            predicted_ord(rec.level, report.mu, report.lambda, report.nu, report.prime);
        if (static_cast<long long>(rec.ell_ord) != want)
            return Verdict::Fail;
        ++matched;
    }
    if (report.onset > report.n0_bound)
        return Verdict::Fail;
    if (matched < 2)
        return Verdict::Inconclusive;
    return Verdict::Pass;
}

bool check_consecutive_differences(const TowerReport& report) {
    bool any = false;
    for (std::size_t i = 1; i < report.levels.size(); ++i) {
        const LevelCount& prev = report.levels[i - 1];
        const LevelCount& cur = report.levels[i];
        if (prev.level < report.onset || cur.level != prev.level + 1)
            continue;
        long long want = static_cast<long long>(report.mu) *
                             totient_prime_power(report.prime, cur.level) +
                         report.lambda;
        if (static_cast<long long>(cur.ell_ord) - static_cast<long long>(prev.ell_ord) != want)
            return false;
        any = true;
    }
    return any;
}

TowerReport run_tower(const SeedSpec& spec, const RunParams& params) {
    require_unit_seed(spec);

    TowerReport report;
    report.prime = spec.prime;
    for (const Seed& s : spec.seeds)
        report.seed_text.push_back(to_string(s));
    report.params = params;

    PadicSeries series = tower_series(spec, params.terms, params.precision);
    for (unsigned k = 1; k <= series.terms(); ++k) {
        const PadicInt& c = series.c(k);
        report.series_digits.push_back(c.digits(std::min(params.display_digits, c.precision())));
        report.series_valuations.push_back(c.valuation());
    }

    InvariantResult inv = extract_invariants(series);
    if (auto fast = fast_path_invariants(spec))
        if (fast->mu != inv.mu || fast->lambda != inv.lambda)
            throw InternalError("fast-path invariants disagree with series extraction");
    report.mu = inv.mu;
    report.lambda = inv.lambda;
    report.k0 = inv.k0;
    report.provisional = inv.provisional;
    report.n0_bound = inv.n0_bound;

    report.levels = ord_profile(spec, params.max_level, params.vertex_cap, params.jobs);

    try {
        GrowthFit fit = fit_growth(report.levels, inv.mu, inv.lambda, spec.prime, inv.n0_bound);
        report.nu = fit.nu;
        report.onset = fit.onset;
    } catch (const InsufficientLevels&) {
        report.verdict = Verdict::Inconclusive;
        report.diagnostics.push_back(
            "need levels 0.." + std::to_string(inv.n0_bound + 1) +
            " to pin the growth constant; raise --levels (and --cap if needed)");
        return report;
    }

    report.verdict = validate_growth(report);
    report.difference_check = check_consecutive_differences(report);

    if (report.verdict == Verdict::Fail) {
        report.diagnostics.push_back(
            report.provisional
                ? "measured growth disagrees with provisional invariants; raise --terms "
                  "or --precision and rerun"
                : "measured valuations disagree with the fitted growth law");
    } else if (report.verdict == Verdict::Pass && report.provisional) {
        report.diagnostics.push_back("invariants are provisional (witnessed within " +
                                     std::to_string(params.terms) +
                                     " series terms); measured levels are consistent");
    }
    return report;
}

namespace {

std::string law_string(const TowerReport& r) {
    std::ostringstream law;
    law << "ord = ";
    if (r.mu > 0) {
        if (r.mu > 1)
            law << r.mu << "*";
        law << r.prime << "^n + ";
    }
    if (r.lambda == 1)
        law << "n";
    else
        law << r.lambda << "n";
    if (r.nu > 0)
        law << " + " << r.nu;
    else if (r.nu < 0)
        law << " - " << -r.nu;
    law << " for n >= " << r.onset;
    return law.str();
}

std::string kappa_display(const BigInt& kappa) {
    std::string s = kappa.get_str();
    if (s.size() <= 30)
        return s;
    return "(" + std::to_string(s.size()) + "-digit integer)";
}

std::string valuation_display(const Valuation& v) {
    return v.exact() ? "ord = " + std::to_string(v.value)
                     : "ord >= " + std::to_string(v.value);
}

} // namespace

std::string render_table(const TowerReport& r) {
    std::ostringstream out;
    out << "abelian " << r.prime << "-tower of the " << r.seed_text.size()
        << "-loop bouquet\n";
    out << "seeds:";
    for (const auto& s : r.seed_text)
        out << " " << s;
    out << "\nparameters: terms=" << r.params.terms << " precision=" << r.params.precision
        << " levels=0.." << r.params.max_level << " cap=" << r.params.vertex_cap << "\n\n";

    out << "series coefficients:\n";
    for (std::size_t i = 0; i < r.series_digits.size(); ++i)
        out << "  c" << std::left << std::setw(3) << (i + 1) << std::right << " = "
            << std::left << std::setw(std::max<std::size_t>(12, r.params.display_digits + 1))
            << r.series_digits[i] << std::right << "  ("
            << valuation_display(r.series_valuations[i]) << ")\n";

    out << "\ninvariants: mu = " << r.mu << ", lambda = " << r.lambda << " (k0 = " << r.k0
        << ", " << (r.provisional ? "provisional" : "certain") << ")\n";
    out << "stabilization bound: n0 <= " << r.n0_bound << "\n\n";

    out << std::setw(7) << "level" << std::setw(10) << "vertices" << std::setw(6) << "ord"
        << std::setw(6) << "law" << "  kappa\n";
    for (const LevelCount& rec : r.levels) {
        std::string mark = ".";
        if (rec.level >= r.onset) {
            long long want = predicted_ord(rec.level, r.mu, r.lambda, r.nu, r.prime);
            mark = (static_cast<long long>(rec.ell_ord) == want) ? "ok" : "BAD";
        }
        out << std::setw(7) << rec.level << std::setw(10)
            << prime_power(r.prime, rec.level).get_str() << std::setw(6) << rec.ell_ord
            << std::setw(6) << mark << "  " << kappa_display(rec.kappa) << "\n";
    }

    out << "\nfitted nu = " << r.nu << ", onset level = " << r.onset << "\n";
    out << "consecutive differences match mu*phi(l^n) + lambda: "
        << (r.difference_check ? "yes" : "NO") << "\n";
    for (const auto& d : r.diagnostics)
        out << "note: " << d << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    if (r.verdict == Verdict::Pass)
        out << law_string(r) << "\n";
    return out.str();
}

std::string render_machine(const TowerReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["generator"] = "ltower";
    j["prime"] = r.prime;
    j["seeds"] = r.seed_text;
    j["terms"] = r.params.terms;
    j["precision"] = r.params.precision;
    j["max_level"] = r.params.max_level;
    j["vertex_cap"] = r.params.vertex_cap;

    nlohmann::ordered_json series = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.series_digits.size(); ++i) {
        nlohmann::ordered_json c;
        c["power"] = i + 1;
        c["digits"] = r.series_digits[i];
        c["valuation"] = r.series_valuations[i].value;
        c["valuation_exact"] = r.series_valuations[i].exact();
        series.push_back(std::move(c));
    }
    j["series"] = std::move(series);

    j["mu"] = r.mu;
    j["lambda"] = r.lambda;
    j["k0"] = r.k0;
    j["provisional"] = r.provisional;
    j["n0_bound"] = r.n0_bound;

    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (const LevelCount& rec : r.levels) {
        nlohmann::ordered_json L;
        L["level"] = rec.level;
        L["vertices"] = prime_power(r.prime, rec.level).get_str();
        L["ord"] = rec.ell_ord;
        L["kappa"] = rec.kappa.get_str();
        levels.push_back(std::move(L));
    }
    j["levels"] = std::move(levels);

    j["nu"] = r.nu;
    j["onset"] = r.onset;
    j["difference_check"] = r.difference_check;
    j["verdict"] = to_string(r.verdict);
    j["diagnostics"] = r.diagnostics;
    return j.dump(2) + "\n";
}

} // namespace ltower

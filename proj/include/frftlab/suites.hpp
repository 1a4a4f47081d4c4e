#ifndef FRFTLAB_SUITES_HPP
#define FRFTLAB_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frftlab/signal.hpp"

namespace frftlab {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    // where the chirp formula adjudication report lands; empty = don't write
    std::string report_dir;
};

// Seeded mixtures of shifted/modulated unit-width Gaussian atoms; the
// band-limited corpus behind the randomized suites. Declared bandwidth 4.
std::vector<Signal> gaussian_corpus(std::uint64_t seed, std::size_t count,
                                    const UniformGrid& grid, double center_span = 2.0,
                                    double mod_span = 2.0);

// Corpus whose transform stays away from the origin (|modulation| in
// [1.7, 2.3], small shifts): the habitat of the dyadic decomposition, where
// no energy hides in arbitrarily narrow blocks.
std::vector<Signal> annular_corpus(std::uint64_t seed, std::size_t count,
                                   const UniformGrid& grid);

SuiteResult suite_staircase_mass(const SuiteConfig& cfg);
SuiteResult suite_unitarity(const SuiteConfig& cfg);
SuiteResult suite_group_law(const SuiteConfig& cfg);
SuiteResult suite_fast_vs_direct(const SuiteConfig& cfg);
SuiteResult suite_multiplication(const SuiteConfig& cfg);
SuiteResult suite_exp_chirp(const SuiteConfig& cfg);
SuiteResult suite_mean_two_path(const SuiteConfig& cfg);
SuiteResult suite_recovery_monotone(const SuiteConfig& cfg);
SuiteResult suite_hilbert_two_path(const SuiteConfig& cfg);
SuiteResult suite_partial_sum(const SuiteConfig& cfg);
SuiteResult suite_hausdorff_young(const SuiteConfig& cfg);
SuiteResult suite_littlewood_paley(const SuiteConfig& cfg);
SuiteResult suite_special_functions(const SuiteConfig& cfg);

/// All suites in acceptance order (criterion 1..13).
std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg, bool concurrent = false);

std::vector<std::string> suite_names();
std::optional<SuiteResult> run_suite_by_name(const std::string& name, const SuiteConfig& cfg);

}  // namespace frftlab

#endif

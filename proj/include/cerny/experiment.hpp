#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cerny/automaton.hpp"
#include "cerny/bounds.hpp"
#include "cerny/group.hpp"

namespace cerny {

inline constexpr int kCsvVersion = 1;

struct ExperimentConfig {
    Family family = Family::cyclic;
    FamilyParams params;
    std::size_t extra_letters = 1;
    ExtraKind extra_kind = ExtraKind::pair_merge;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    /// Run the chain analysis over every subset 2 <= |S| < n.
    bool chain = false;
    /// Worker threads; output does not depend on this.
    unsigned threads = 1;
    SolverCaps solver_caps;
    GroupCaps group_caps;
};

/// Throws std::invalid_argument for zero trials, zero extra letters or bad
/// family parameters.
void validate_config(const ExperimentConfig& cfg);

struct ResultRow {
    std::size_t trial = 0;
    std::uint64_t trial_seed = 0;
    std::size_t n = 0;
    std::size_t diam = 0;
    BigInt m_lower;
    BigInt cerny;
    BigInt rystsov;
    BigInt main;
    std::size_t reset_length = 0;
    Word reset_word;
    std::size_t expansion_length = 0;
    /// Chain analysis: maxima over subsets, and the number of subsets whose
    /// shortest expanding word is longer than the gap bound.
    std::optional<std::size_t> max_expanding;
    std::optional<std::size_t> max_gap_bound;
    std::size_t gap_violations = 0;
    std::size_t subsets = 0;
    bool cerny_ok = false;
    bool main_ok = false;
    bool order_ok = false;
};

/// One trial: sample a Cayley extension from the trial seed and measure it.
ResultRow run_trial(const ExperimentConfig& cfg, const GeneratedGroup& gg, std::size_t diam, std::size_t trial);
/// Rows in trial order; identical for every thread count.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

/// Max over subsets 2 <= |S| < n of the shortest expanding word and the
/// gap bound, with the violation count.
struct SubsetScan {
    std::size_t max_expanding = 0;
    std::size_t max_gap_bound = 0;
    std::size_t violations = 0;
    std::size_t subsets = 0;
};
SubsetScan scan_subsets(const Automaton& a, const SolverCaps& caps = {});

void write_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<ResultRow>& rows);
nlohmann::json rows_to_json(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<CheckResult> verify_characters();
std::vector<CheckResult> verify_chain_lemmas(std::uint64_t seed = 1, std::size_t instances = 100);
std::vector<CheckResult> verify_families();

}  // namespace cerny

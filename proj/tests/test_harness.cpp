#include <doctest.h>

#include <sstream>

#include "cerny/experiment.hpp"
#include "cerny/rng.hpp"

using namespace cerny;

namespace {

ExperimentConfig cyclic_config(unsigned n, std::size_t trials, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.family = Family::cyclic;
    cfg.params.n = n;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

std::string csv_of(const ExperimentConfig& cfg) {
    std::ostringstream os;
    write_csv(os, cfg, run_experiment(cfg));
    return os.str();
}

}  // namespace

TEST_CASE("config validation") {
    ExperimentConfig cfg = cyclic_config(5, 0, 1);
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg.trials = 3;
    cfg.extra_letters = 0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg.extra_letters = 1;
    CHECK_NOTHROW(validate_config(cfg));
    cfg.params.n = 0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
}

TEST_CASE("seeds are derived deterministically") {
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
    CHECK(derive_seed(7, 3) != derive_seed(7, 4));
    CHECK(derive_seed(7, 3) != derive_seed(8, 3));
}

TEST_CASE("output does not depend on the thread count") {
    ExperimentConfig cfg = cyclic_config(6, 12, 99);
    cfg.extra_kind = ExtraKind::random_map;
    const std::string one = csv_of(cfg);
    cfg.threads = 3;
    CHECK(csv_of(cfg) == one);
    cfg.seed = 100;
    CHECK(csv_of(cfg) != one);
}

TEST_CASE("csv layout") {
    const ExperimentConfig cfg = cyclic_config(5, 2, 3);
    std::istringstream in(csv_of(cfg));
    std::string first, header;
    std::getline(in, first);
    std::getline(in, header);
    CHECK(first.rfind("# cerny-experiment csv v" + std::to_string(kCsvVersion), 0) == 0);
    CHECK(first.find("seed=3") != std::string::npos);
    CHECK(header.rfind("trial,trial_seed,n,", 0) == 0);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 2);

    const auto j = rows_to_json(cfg, run_experiment(cfg));
    CHECK(j.dump().find("\"trial_seed\"") != std::string::npos);
}

TEST_CASE("row invariants") {
    for (unsigned n : {4u, 5u, 7u}) {
        ExperimentConfig cfg = cyclic_config(n, 15, n);
        cfg.extra_kind = n == 5 ? ExtraKind::random_map : ExtraKind::pair_merge;
        for (const auto& r : run_experiment(cfg)) {
            CHECK(r.n == n);
            CHECK(r.diam == n - 1);
            CHECK(r.reset_length <= r.expansion_length);
            CHECK(r.order_ok);
            CHECK(r.cerny_ok);
            CHECK(r.main_ok);
            CHECK(r.reset_length <= (n - 1) * (n - 1));
            CHECK(r.reset_word.size() == r.reset_length);
            CHECK_FALSE(r.max_expanding.has_value());
        }
    }
}

TEST_CASE("chain scan on Z_3 x Z_3 with a random letter") {
    const auto gg = make_elementary_abelian(3, 2);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 3; ++t) {
        const Automaton a = random_cayley_extension(gg, 1, ExtraKind::random_map, rng);
        const SubsetScan scan = scan_subsets(a);
        CHECK(scan.subsets == 501);
        CHECK(scan.violations == 0);
        CHECK(scan.max_expanding <= scan.max_gap_bound);
    }
}

TEST_CASE("chain columns in experiments") {
    ExperimentConfig cfg;
    cfg.family = Family::dihedral;
    cfg.params.n = 3;
    cfg.extra_kind = ExtraKind::random_map;
    cfg.trials = 4;
    cfg.chain = true;
    for (const auto& r : run_experiment(cfg)) {
        REQUIRE(r.max_expanding.has_value());
        CHECK(*r.max_expanding <= *r.max_gap_bound);
        CHECK(r.gap_violations == 0);
        CHECK(r.subsets == 56);
    }
}

TEST_CASE("verification suites pass") {
    for (const auto& suite : {verify_characters(), verify_chain_lemmas(3, 40), verify_families()}) {
        CHECK_FALSE(suite.empty());
        for (const auto& c : suite) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.passed);
        }
    }
}

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cerny/automaton.hpp"
#include "cerny/bounds.hpp"
#include "cerny/experiment.hpp"
#include "cerny/repr.hpp"

using namespace cerny;

namespace {

constexpr int kPass = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyArgs {
    std::string family;
    unsigned n = 0, p = 0, m = 0, k = 0;
    std::string gens;

    void add(CLI::App* app) {
        app->add_option("--family", family, "cyclic, dihedral, elementary_abelian, affine, dihedral_p2, symmetric, "
                                            "alternating, sl2, psl2")
            ->required();
        app->add_option("--n", n, "order / degree");
        app->add_option("--p", p, "prime");
        app->add_option("--m", m, "rank");
        app->add_option("--k", k, "order of the multiplier subgroup");
        app->add_option("--gens", gens, "rot-refl, two-refl, coxeter or transposition-cycle");
    }

    std::pair<Family, FamilyParams> resolve() const {
        auto f = parse_family(family);
        if (!f) throw UsageError("unknown family: " + family);
        FamilyParams q;
        q.n = n;
        q.p = p;
        q.m = m;
        q.k = k;
        if (gens == "two-refl")
            q.dihedral_gens = DihedralGens::two_reflections;
        else if (gens == "transposition-cycle")
            q.symmetric_gens = SymmetricGens::transposition_cycle;
        else if (!gens.empty() && gens != "rot-refl" && gens != "coxeter")
            throw UsageError("unknown generating set: " + gens);
        try {
            validate_family_params(*f, q);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return {*f, q};
    }
};

struct AutomatonArgs {
    std::string input;
    std::size_t cerny_n = 0;

    void add(CLI::App* app) {
        app->add_option("--input", input, "automaton JSON file, or - for stdin");
        app->add_option("--cerny", cerny_n, "use the built-in Cerny automaton C_n instead");
    }

    Automaton load() const {
        if (cerny_n) {
            if (cerny_n < 2 || cerny_n > StateSet::kMaxStates) throw UsageError("--cerny must lie in [2, 64]");
            return cerny_automaton(cerny_n);
        }
        if (input.empty()) throw UsageError("one of --input or --cerny is required");
        nlohmann::json j;
        try {
            if (input == "-") {
                j = nlohmann::json::parse(std::cin);
            } else {
                std::ifstream in(input);
                if (!in) throw UsageError("cannot open " + input);
                j = nlohmann::json::parse(in);
            }
            return automaton_from_json(j);
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(std::string("malformed automaton JSON: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("invalid automaton: ") + e.what());
        }
    }
};

StateSet parse_subset(const std::string& text, std::size_t n) {
    StateSet s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long x = 0;
        try {
            x = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw UsageError("malformed subset: " + text);
        }
        if (pos != item.size() || x >= n) throw UsageError("subset element out of range: " + item);
        s.insert(static_cast<State>(x));
    }
    return s;
}

std::string set_to_string(StateSet s) {
    std::string out = "{";
    for (State x : s.elements()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

int cmd_bound(const FamilyArgs& fa, const std::string& format) {
    auto [f, q] = fa.resolve();
    const BoundReport r = make_bound_report(f, q);
    if (format == "json") {
        std::cout << bound_report_to_json(r).dump(2) << '\n';
    } else {
        std::cout << "family      " << r.family << '\n'
                  << "n           " << r.n << '\n'
                  << "diam        " << r.diam << '\n'
                  << "diam_cap    " << (r.diam_cap ? std::to_string(*r.diam_cap) : "-") << '\n'
                  << "m_lower     " << r.m.value.get_str()
                  << (r.m.exactness == Exactness::exact ? " (exact)" : " (lower bound)") << '\n'
                  << "m_note      " << r.m.note << '\n'
                  << "cerny       " << r.cerny.get_str() << '\n'
                  << "rystsov     " << r.rystsov.get_str() << '\n'
                  << "main        " << r.main.get_str() << '\n'
                  << "certified   " << (r.is_cerny_graph_certified ? "yes" : "no") << '\n';
    }
    if (r.diam_cap && r.diam > *r.diam_cap) {
        std::cerr << "diameter exceeds the predicted cap\n";
        return kPropertyFailure;
    }
    return kPass;
}

int cmd_exact(const AutomatonArgs& aa, std::size_t cap) {
    const Automaton a = aa.load();
    ResetWord r;
    try {
        r = shortest_reset_word(a, SolverCaps{cap});
    } catch (const NotSynchronizing&) {
        std::cout << "not synchronizing\n";
        return kPropertyFailure;
    }
    const StateSet img = apply(a, StateSet::full(a.states()), r.word);
    std::cout << "length " << r.length << '\n'
              << "word " << word_to_string(r.word) << '\n'
              << "replay " << set_to_string(img) << (img.size() == 1 ? " ok" : " FAILED") << '\n';
    return img.size() == 1 ? kPass : kPropertyFailure;
}

int cmd_expand(const AutomatonArgs& aa, const std::string& subset, std::size_t cap) {
    const Automaton a = aa.load();
    const StateSet s = parse_subset(subset, a.states());
    if (s.empty() || s.size() >= a.states()) throw UsageError("subset must satisfy 1 <= |S| < n");
    if (!is_synchronizing(a)) {
        std::cout << "not synchronizing\n";
        return kPropertyFailure;
    }
    const Word w = shortest_expanding_word(a, s, SolverCaps{cap});
    const StateSet pre = preimage(a, s, w);
    std::cout << "length " << w.size() << '\n'
              << "word " << word_to_string(w) << '\n'
              << "preimage " << set_to_string(pre) << (pre.size() > s.size() ? " ok" : " FAILED") << '\n';
    return pre.size() > s.size() ? kPass : kPropertyFailure;
}

int cmd_chain(const AutomatonArgs& aa, const std::string& subset, const std::string& format, std::size_t cap) {
    const Automaton a = aa.load();
    const StateSet s = parse_subset(subset, a.states());
    const StandardRep rep(a);
    if (!rep.synchronizing() || !rep.transitive()) {
        std::cout << "not synchronizing and transitive\n";
        return kPropertyFailure;
    }
    ChainReport r;
    try {
        r = build_chain(rep, s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::size_t t = shortest_expanding_word(a, s, SolverCaps{cap}).size();
    if (format == "json") {
        nlohmann::json j{{"dims", r.dims}, {"gaps", r.gaps}, {"s", r.s}, {"diam", r.diam},
                         {"gap_bound", r.gap_bound}, {"closure_depths", r.closure_depths}, {"expanding_length", t}};
        std::cout << j.dump(2) << '\n';
    } else {
        auto list = [](const std::vector<std::size_t>& v) {
            std::string out;
            for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
            return out;
        };
        std::cout << "dims " << list(r.dims) << '\n'
                  << "gaps " << list(r.gaps) << '\n'
                  << "s " << r.s << '\n'
                  << "diam " << r.diam << '\n'
                  << "gap_bound " << r.gap_bound << '\n'
                  << "expanding_length " << t << '\n';
    }
    return t <= r.gap_bound ? kPass : kPropertyFailure;
}

int cmd_experiment(const FamilyArgs& fa, std::size_t extra, const std::string& kind, std::size_t trials,
                   std::uint64_t seed, bool chain, unsigned threads, const std::string& out, const std::string& format,
                   std::size_t cap) {
    ExperimentConfig cfg;
    std::tie(cfg.family, cfg.params) = fa.resolve();
    cfg.extra_letters = extra;
    if (kind == "pair-merge")
        cfg.extra_kind = ExtraKind::pair_merge;
    else if (kind == "random-map")
        cfg.extra_kind = ExtraKind::random_map;
    else
        throw UsageError("unknown extra-letter kind: " + kind);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.chain = chain;
    cfg.threads = threads;
    cfg.solver_caps.max_states = cap;
    try {
        validate_config(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto rows = run_experiment(cfg);

    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) throw std::runtime_error("cannot write " + out);
    }
    std::ostream& os = out.empty() ? std::cout : file;
    if (format == "json")
        os << rows_to_json(cfg, rows).dump(2) << '\n';
    else
        write_csv(os, cfg, rows);
    if (!os) throw std::runtime_error("write failed");

    std::size_t failures = 0;
    for (const auto& r : rows)
        if (!r.main_ok || !r.order_ok || r.gap_violations) ++failures;
    if (!out.empty()) std::cerr << rows.size() << " rows written to " << out << '\n';
    if (failures) std::cerr << failures << " rows violate a proved bound\n";
    return failures ? kPropertyFailure : kPass;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    std::vector<CheckResult> results;
    if (suite == "characters")
        results = verify_characters();
    else if (suite == "chain-lemmas")
        results = verify_chain_lemmas(seed);
    else if (suite == "families")
        results = verify_families();
    else
        throw UsageError("unknown suite: " + suite);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
        ok = ok && r.passed;
    }
    std::cout << (ok ? "all checks passed" : "some checks failed") << '\n';
    return ok ? kPass : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley-graph synchronization bounds and exact reset-word search"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::size_t cap = SolverCaps{}.max_states;

    FamilyArgs bound_args;
    auto* bound = app.add_subcommand("bound", "closed-form bounds with the measured diameter");
    bound_args.add(bound);
    bound->add_option("--format", format, "csv (plain table) or json")->check(CLI::IsMember({"csv", "json"}));

    AutomatonArgs exact_args;
    auto* exact = app.add_subcommand("exact", "exact shortest reset word");
    exact_args.add(exact);
    exact->add_option("--cap", cap, "state cap for subset search");

    AutomatonArgs expand_args;
    std::string subset;
    auto* expand = app.add_subcommand("expand", "shortest expanding word for one subset");
    expand_args.add(expand);
    expand->add_option("--subset", subset, "comma-separated states")->required();
    expand->add_option("--cap", cap, "state cap for subset search");

    AutomatonArgs chain_args;
    auto* chain = app.add_subcommand("chain", "subspace chain and gap bound for one subset");
    chain_args.add(chain);
    chain->add_option("--subset", subset, "comma-separated states")->required();
    chain->add_option("--format", format, "csv (plain) or json")->check(CLI::IsMember({"csv", "json"}));
    chain->add_option("--cap", cap, "state cap for subset search");

    FamilyArgs exp_args;
    std::size_t extra = 1, trials = 1;
    std::string kind = "pair-merge", out;
    std::uint64_t seed = 1;
    bool with_chain = false;
    unsigned threads = 1;
    auto* experiment = app.add_subcommand("experiment", "seeded random Cayley extensions");
    exp_args.add(experiment);
    experiment->add_option("--extra-letters", extra, "number of extra letters (>= 1)");
    experiment->add_option("--extra-kind", kind, "random-map or pair-merge");
    experiment->add_option("--trials", trials, "number of trials (>= 1)");
    experiment->add_option("--seed", seed, "master seed");
    experiment->add_flag("--chain", with_chain, "scan every subset with the chain analysis");
    experiment->add_option("--threads", threads, "worker threads");
    experiment->add_option("--out", out, "output file (default stdout)");
    experiment->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    experiment->add_option("--cap", cap, "state cap for subset search");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "fixed property suites");
    verify->add_option("suite", suite, "characters, chain-lemmas or families")->required();
    verify->add_option("--seed", seed, "seed for randomized suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*bound) return cmd_bound(bound_args, format);
        if (*exact) return cmd_exact(exact_args, cap);
        if (*expand) return cmd_expand(expand_args, subset, cap);
        if (*chain) return cmd_chain(chain_args, subset, format, cap);
        if (*experiment)
            return cmd_experiment(exp_args, extra, kind, trials, seed, with_chain, threads, out, format, cap);
        if (*verify) return cmd_verify(suite, seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kPropertyFailure;
    }
    return kUsage;
}

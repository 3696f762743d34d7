#include "cerny/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cerny/cayley.hpp"
#include "cerny/cyclotomic.hpp"
#include "cerny/lemmas.hpp"
#include "cerny/repr.hpp"
#include "cerny/rng.hpp"

namespace cerny {

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.extra_letters < 1) throw std::invalid_argument("extra letters must be >= 1");
    if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
    validate_family_params(cfg.family, cfg.params);
}

SubsetScan scan_subsets(const Automaton& a, const SolverCaps& caps) {
    const std::size_t n = a.states();
    if (n > caps.max_states) throw CapExceeded("subset scan: state count exceeds cap");
    const StandardRep rep(a);
    SubsetScan scan;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        const StateSet s(bits);
        if (s.size() < 2 || s.size() >= n) continue;
        const std::size_t t = shortest_expanding_word(a, s, caps).size();
        const std::size_t g = build_chain(rep, s).gap_bound;
        scan.max_expanding = std::max(scan.max_expanding, t);
        scan.max_gap_bound = std::max(scan.max_gap_bound, g);
        if (t > g) ++scan.violations;
        ++scan.subsets;
    }
    return scan;
}

ResultRow run_trial(const ExperimentConfig& cfg, const GeneratedGroup& gg, std::size_t diam, std::size_t trial) {
    ResultRow row;
    row.trial = trial;
    row.trial_seed = derive_seed(cfg.seed, trial);
    std::mt19937_64 rng(row.trial_seed);
    const Automaton a = random_cayley_extension(gg, cfg.extra_letters, cfg.extra_kind, rng);

    row.n = a.states();
    row.diam = diam;
    const MLower m = m_lower(cfg.family, cfg.params);
    row.m_lower = m.value;
    row.cerny = cerny_bound(row.n);
    row.rystsov = rystsov_bound(row.n, diam);
    BigInt mm = m.value;
    if (mm < 1) mm = 1;
    if (mm > static_cast<unsigned long>(row.n - 1)) mm = static_cast<unsigned long>(row.n - 1);
    row.main = main_bound(row.n, mm.get_ui(), diam);

    const ResetWord reset = shortest_reset_word(a, cfg.solver_caps);
    if (apply(a, StateSet::full(row.n), reset.word).size() != 1)
        throw std::logic_error("reset witness failed to replay");
    row.reset_length = reset.length;
    row.reset_word = reset.word;
    const ExpansionResult expansion = expansion_synchronizer(a, cfg.solver_caps);
    row.expansion_length = expansion.word.size();

    if (cfg.chain) {
        const SubsetScan scan = scan_subsets(a, cfg.solver_caps);
        row.max_expanding = scan.max_expanding;
        row.max_gap_bound = scan.max_gap_bound;
        row.gap_violations = scan.violations;
        row.subsets = scan.subsets;
    }

    row.cerny_ok = BigInt(static_cast<unsigned long>(row.reset_length)) <= row.cerny;
    row.main_ok = BigInt(static_cast<unsigned long>(row.reset_length)) <= row.main;
    row.order_ok = row.reset_length <= row.expansion_length;
    return row;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const GeneratedGroup gg = build_family(cfg.family, cfg.params, cfg.group_caps);
    if (gg.group.order() < 2) throw std::invalid_argument("experiment: group order must be >= 2");
    if (gg.group.order() > cfg.solver_caps.max_states) throw CapExceeded("experiment: group order exceeds solver cap");
    CayleyGraph cg(gg);
    const std::size_t diam = diameter(cg);

    std::vector<ResultRow> rows(cfg.trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cfg.trials) return;
            try {
                rows[i] = run_trial(cfg, gg, diam, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = cfg.trials;
                return;
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(cfg.threads, cfg.trials);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

namespace {

std::string params_string(const ExperimentConfig& cfg) {
    std::ostringstream os;
    const auto& q = cfg.params;
    os << "family=" << family_name(cfg.family) << " n=" << q.n << " p=" << q.p << " m=" << q.m << " k=" << q.k
       << " gens=" << (q.dihedral_gens == DihedralGens::rotation_reflection ? "rot-refl" : "two-refl") << '/'
       << (q.symmetric_gens == SymmetricGens::coxeter ? "coxeter" : "transposition-cycle")
       << " extra=" << cfg.extra_letters
       << " kind=" << (cfg.extra_kind == ExtraKind::pair_merge ? "pair-merge" : "random-map")
       << " trials=" << cfg.trials << " seed=" << cfg.seed << " chain=" << (cfg.chain ? 1 : 0);
    return os.str();
}

template <class T>
std::string opt(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

void write_csv(std::ostream& os, const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
    os << "# cerny-experiment csv v" << kCsvVersion << ' ' << params_string(cfg) << '\n';
    os << "trial,trial_seed,n,diam,m_lower,cerny,rystsov,main,reset_length,expansion_length,"
          "max_expanding,max_gap_bound,gap_violations,cerny_ok,main_ok,order_ok,reset_word\n";
    for (const auto& r : rows) {
        os << r.trial << ',' << r.trial_seed << ',' << r.n << ',' << r.diam << ',' << r.m_lower.get_str() << ','
           << r.cerny.get_str() << ',' << r.rystsov.get_str() << ',' << r.main.get_str() << ',' << r.reset_length
           << ',' << r.expansion_length << ',' << opt(r.max_expanding) << ',' << opt(r.max_gap_bound) << ','
           << r.gap_violations << ',' << r.cerny_ok << ',' << r.main_ok << ',' << r.order_ok << ','
           << word_to_string(r.reset_word) << '\n';
    }
}

nlohmann::json rows_to_json(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
    nlohmann::json j;
    j["version"] = kCsvVersion;
    j["config"] = params_string(cfg);
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json o;
        o["trial"] = r.trial;
        o["trial_seed"] = r.trial_seed;
        o["n"] = r.n;
        o["diam"] = r.diam;
        o["m_lower"] = r.m_lower.get_str();
        o["cerny"] = r.cerny.get_str();
        o["rystsov"] = r.rystsov.get_str();
        o["main"] = r.main.get_str();
        o["reset_length"] = r.reset_length;
        o["reset_word"] = r.reset_word;
        o["expansion_length"] = r.expansion_length;
        if (r.max_expanding) {
            o["max_expanding"] = *r.max_expanding;
            o["max_gap_bound"] = *r.max_gap_bound;
            o["gap_violations"] = r.gap_violations;
        }
        o["cerny_ok"] = r.cerny_ok;
        o["main_ok"] = r.main_ok;
        o["order_ok"] = r.order_ok;
        j["rows"].push_back(std::move(o));
    }
    return j;
}

std::vector<CheckResult> verify_characters() {
    std::vector<CheckResult> out;
    const std::pair<unsigned, unsigned> affine[] = {{3, 2}, {5, 2}, {5, 4}, {7, 3}, {7, 6}};
    for (auto [p, k] : affine) {
        const auto r = verify_affine_decomposition(p, k);
        out.push_back({"affine(" + std::to_string(p) + "," + std::to_string(k) + ")",
                       r.holds && r.degree == static_cast<long>(p * k),
                       "degree " + std::to_string(r.degree) + (r.traces_agree ? "" : ", trace mismatch")});
    }
    for (unsigned p : {3u, 5u}) {
        const auto r = verify_dp2_decomposition(p);
        bool spots = r.chi2_at_reflection == 0;
        for (unsigned k = 1; k < p * p; ++k) {
            spots = spots && r.chi1_rotations[k] == (k % p == 0 ? Rational(p - 1) : Rational(-1));
            spots = spots && r.chi2_rotations[k] == (k % p == 0 ? Rational(-static_cast<long>(p)) : Rational(0));
        }
        const long expected = 1 + 1 + 2l * (p - 1) + 2l * (p * p - p);
        out.push_back({"dihedral_p2(" + std::to_string(p) + ")",
                       r.holds && spots && r.degree == expected && expected == 2l * p * p,
                       "degree " + std::to_string(r.degree)});
    }
    return out;
}

std::vector<CheckResult> verify_chain_lemmas(std::uint64_t seed, std::size_t instances) {
    std::size_t chainin_fail = 0, getout_fail = 0, applicable = 0;
    std::string first;
    for (std::size_t i = 0; i < instances; ++i) {
        std::mt19937_64 rng(derive_seed(seed, i));
        const LemmaInstance inst = random_lemma_instance(rng, 10);
        const LemmaCheck a = check_chainin(inst);
        const LemmaCheck b = check_getout(inst);
        if (!a.holds) ++chainin_fail;
        if (!b.holds) ++getout_fail;
        if (b.applicable) ++applicable;
        if (first.empty() && !(a.holds && b.holds)) first = "instance " + std::to_string(i) + ": " + a.detail + b.detail;
    }
    return {
        {"chainin", chainin_fail == 0,
         std::to_string(instances) + " instances, " + std::to_string(chainin_fail) + " violations " + first},
        {"getout", getout_fail == 0 && applicable > 0,
         std::to_string(applicable) + " applicable instances, " + std::to_string(getout_fail) + " violations"},
    };
}

std::vector<CheckResult> verify_families() {
    std::vector<CheckResult> out;
    auto diam_check = [&](const std::string& name, Family f, FamilyParams q) {
        const GeneratedGroup gg = build_family(f, q);
        CayleyGraph cg(gg);
        const std::size_t d = diameter(cg);
        const auto cap = predicted_diameter_cap(f, q);
        std::mt19937_64 rng(0);
        const bool axioms = satisfies_unit_and_inverse_laws(gg.group) && is_associative(gg.group, rng) &&
                            generates(gg.group, gg.gens);
        out.push_back({name, axioms && (!cap || d <= *cap),
                       "order " + std::to_string(gg.group.order()) + ", diam " + std::to_string(d) +
                           (cap ? ", cap " + std::to_string(*cap) : std::string())});
    };
    for (unsigned p : {3u, 5u, 7u}) {
        FamilyParams q;
        q.p = p;
        diam_check("sl2 p=" + std::to_string(p), Family::sl2, q);
        diam_check("psl2 p=" + std::to_string(p), Family::psl2, q);
    }
    for (unsigned n : {5u, 8u, 12u}) {
        FamilyParams q;
        q.n = n;
        diam_check("cyclic n=" + std::to_string(n), Family::cyclic, q);
        diam_check("dihedral rot-refl n=" + std::to_string(n), Family::dihedral, q);
        q.dihedral_gens = DihedralGens::two_reflections;
        diam_check("dihedral two-refl n=" + std::to_string(n), Family::dihedral, q);
    }
    {
        FamilyParams q;
        q.p = 3;
        q.m = 2;
        diam_check("elementary_abelian 3^2", Family::elementary_abelian, q);
        q.k = 3;
        q.p = 7;
        diam_check("affine (7,3)", Family::affine, q);
        q.p = 3;
        diam_check("dihedral_p2 p=3", Family::dihedral_p2, q);
        q.n = 4;
        diam_check("symmetric 4 coxeter", Family::symmetric, q);
        q.symmetric_gens = SymmetricGens::transposition_cycle;
        diam_check("symmetric 4 transposition-cycle", Family::symmetric, q);
        diam_check("alternating 5", Family::alternating, FamilyParams{5, 0, 0, 0, {}, {}});
    }
    {
        FamilyParams q;
        q.n = 12;
        FamilyParams s;
        s.p = 17;
        FamilyParams d;
        d.p = 3;
        const bool ok = m_lower(Family::cyclic, q).value == 4 && m_lower(Family::sl2, s).value == 72 &&
                        m_lower(Family::dihedral_p2, d).value == 6;
        out.push_back({"m_lower spot values", ok, "cyclic 12 -> 4, sl2 17 -> 72, dihedral_p2 3 -> 6"});
        s.p = 17;
        out.push_back({"sl2 p=17 certified", certify_cerny_graph(Family::sl2, s, 49), "72 >= 3p-2 = 49"});
    }
    {
        std::size_t bad = 0;
        for (std::uint64_t n = 1; n <= 10000; ++n)
            if (!squarefree_totient_dominates(n)) ++bad;
        out.push_back({"square-free totient products", bad == 0, std::to_string(bad) + " counterexamples up to 10^4"});
    }
    return out;
}

}  // namespace cerny

#include <doctest.h>

#include <set>

#include "cerny/bounds.hpp"
#include "cerny/cyclotomic.hpp"
#include "cerny/lemmas.hpp"
#include "cerny/repr.hpp"
#include "cerny/rng.hpp"

using namespace cerny;

namespace {

QVector qv(std::initializer_list<Rational> xs) { return QVector(xs); }

// W_r by brute force: span of ρ_w(χ̂_S) over all words of length <= max_len
// with at most r Λ-letters.
std::vector<std::size_t> brute_force_dims(const StandardRep& rep, StateSet s, std::size_t levels,
                                          std::size_t max_len) {
    const std::size_t k = rep.automaton().letter_count();
    const QVector seed = hat_chi(s, rep.dim());
    std::vector<QSubspace> spans(levels, QSubspace(rep.dim()));
    std::vector<Word> frontier{{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            const std::size_t e = rep.erased_length(w);
            if (e < levels) {
                const QVector v = rep.act(w, seed);
                for (std::size_t r = e; r < levels; ++r) spans[r].insert(v);
            }
            if (len < max_len)
                for (std::size_t a = 0; a < k; ++a) {
                    Word u = w;
                    u.push_back(a);
                    next.push_back(u);
                }
        }
        frontier = std::move(next);
    }
    std::vector<std::size_t> dims;
    for (const auto& sp : spans) dims.push_back(sp.dim());
    return dims;
}

Automaton random_extension(const GeneratedGroup& gg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_cayley_extension(gg, 1, ExtraKind::random_map, rng);
}

}  // namespace

TEST_CASE("hat chi and augmentation") {
    CHECK(is_zero(hat_chi(StateSet::full(5), 5)));
    CHECK(hat_chi(StateSet::of({0, 1}), 4) == qv({Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)}));
    CHECK(augmentation(characteristic_vector(StateSet::of({0, 3, 4}), 6)) == 3);
    CHECK(augmentation(constant_vector(7, Rational(2, 3))) == Rational(14, 3));
    for (std::uint64_t bits = 1; bits < 64; ++bits) {
        CHECK(augmentation(hat_chi(StateSet(bits), 6)) == 0);
        CHECK(is_zero(hat_chi(StateSet(bits), 6)) == (bits == 63));
    }
}

TEST_CASE("standard representation matches preimages") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 40; ++t) {
        const Automaton a = random_extension(make_cyclic(3 + uniform_below(rng, 8)), rng());
        const StandardRep rep(a);
        const std::size_t n = a.states();
        Word w;
        for (std::size_t i = uniform_below(rng, 8); i > 0; --i) w.push_back(uniform_below(rng, a.letter_count()));
        const StateSet s(rng() & StateSet::full(n).bits());
        CHECK(rep.act(w, characteristic_vector(s, n)) == characteristic_vector(preimage(a, s, w), n));
        // ρ_{uv} = ρ_u ∘ ρ_v
        Word u{0}, uv{0};
        uv.insert(uv.end(), w.begin(), w.end());
        CHECK(rep.act(uv, hat_chi(s, n)) == rep.act(u, rep.act(w, hat_chi(s, n))));
        // Constants are fixed by every letter.
        for (std::size_t l = 0; l < a.letter_count(); ++l)
            CHECK(rep.act(l, constant_vector(n, Rational(5, 2))) == constant_vector(n, Rational(5, 2)));
    }
}

TEST_CASE("chain of a pure Cayley graph") {
    const StandardRep rep(cayley_automaton(make_cyclic(6)));
    CHECK_THROWS_AS(build_chain(rep, StateSet::of({0, 1})), std::invalid_argument);
    ChainOptions opts;
    opts.require_synchronizing = false;
    auto spaces = chain_subspaces(rep, StateSet::of({0, 1}), opts);
    CHECK(spaces.size() == 1);
    CHECK(inside_augmentation_kernel(spaces[0]));
    const auto r = build_chain(rep, StateSet::of({0, 3}), opts);
    CHECK_FALSE(r.escapes);
    CHECK(r.dims.size() == 1);
}

TEST_CASE("chain of C_4 against brute-force spans") {
    const StandardRep rep(cerny_automaton(4));
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
        const StateSet s(bits);
        if (s.size() < 2 || s.size() >= 4) continue;
        const ChainReport r = build_chain(rep, s);
        const auto brute = brute_force_dims(rep, s, r.dims.size(), 10);
        CHECK(brute == r.dims);
        std::size_t total = 0;
        for (auto c : r.gaps) total += c;
        CHECK(total == r.dims[r.s]);
        CHECK(r.diam == 3);
        CHECK(r.gap_bound == 1 + r.dims[r.s] - r.max_gap() + 3);
        CHECK(shortest_expanding_word(rep.automaton(), s).size() <= r.gap_bound);
    }
    const ChainReport r = build_chain(rep, StateSet::of({0, 1}));
    CHECK(r.dims.front() >= 1);
}

TEST_CASE("chain invariants and the gap bound on random extensions") {
    std::mt19937_64 rng(8);
    const std::vector<GeneratedGroup> groups = {make_cyclic(5), make_cyclic(6), make_dihedral(3, DihedralGens::rotation_reflection),
                                                make_dihedral(4, DihedralGens::two_reflections),
                                                make_elementary_abelian(2, 3), make_affine(5, 2)};
    for (int t = 0; t < 12; ++t) {
        const auto& gg = groups[t % groups.size()];
        const StandardRep rep(random_extension(gg, rng()));
        const std::size_t n = rep.dim();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const StateSet s(bits);
            if (s.size() < 2 || s.size() >= n) continue;
            ChainReport r;
            auto spaces = chain_subspaces(rep, s, {}, &r);
            CHECK(r.escapes);
            CHECK(r.dims.size() == r.s + 2);
            for (std::size_t i = 0; i + 1 < spaces.size(); ++i) {
                CHECK(spaces[i + 1].contains(spaces[i]));
                CHECK(r.dims[i] < r.dims[i + 1]);
                CHECK(inside_augmentation_kernel(spaces[i]));
            }
            CHECK_FALSE(inside_augmentation_kernel(spaces.back()));
            for (auto c : r.gaps) CHECK(c > 0);
            const std::size_t t_len = shortest_expanding_word(rep.automaton(), s).size();
            CHECK(t_len <= r.gap_bound);
        }
    }
}

TEST_CASE("gap bound never exceeds n - m + diam") {
    struct Case {
        Family f;
        FamilyParams q;
    };
    std::vector<Case> cases;
    FamilyParams q;
    q.n = 7;
    cases.push_back({Family::cyclic, q});
    q.n = 5;
    cases.push_back({Family::dihedral, q});
    q = {};
    q.p = 3;
    q.m = 2;
    cases.push_back({Family::elementary_abelian, q});
    q = {};
    q.p = 5;
    q.k = 2;
    cases.push_back({Family::affine, q});
    std::mt19937_64 rng(2);
    for (const auto& c : cases) {
        const auto gg = build_family(c.f, c.q);
        const StandardRep rep(random_extension(gg, rng()));
        const std::size_t n = rep.dim();
        const long m = m_lower(c.f, c.q).value.get_si();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); bits += 3) {
            const StateSet s(bits);
            if (s.size() < 2 || s.size() >= n) continue;
            const auto r = build_chain(rep, s);
            CHECK(static_cast<long>(r.gap_bound) <= static_cast<long>(n) - m + static_cast<long>(r.diam));
        }
    }
}

TEST_CASE("group-average projector") {
    for (auto gg : {make_cyclic(6), make_dihedral(5, DihedralGens::rotation_reflection), make_sl2(3)}) {
        const StandardRep rep(cayley_automaton(gg));
        const QMatrix p = group_average_projector(rep, gg);
        const std::size_t n = gg.group.order();
        CHECK(p * p == p);
        CHECK(p.trace() == 1);
        CHECK(p * constant_vector(n, 1) == constant_vector(n, 1));
        std::mt19937_64 rng(n);
        for (int i = 0; i < 20; ++i) CHECK(is_zero(p * hat_chi(StateSet(rng() & StateSet::full(n).bits()), n)));
    }
    const StandardRep wrong(cayley_automaton(make_cyclic(6)));
    CHECK_THROWS_AS(group_average_projector(wrong, make_dihedral(3, DihedralGens::rotation_reflection)),
                    std::invalid_argument);
}

TEST_CASE("standard argument") {
    std::mt19937_64 rng(17);
    std::size_t premises = 0;
    for (auto gg : {make_cyclic(5), make_dihedral(3, DihedralGens::rotation_reflection), make_elementary_abelian(2, 2)}) {
        const StandardRep rep(random_extension(gg, rng()));
        const CayleyGraph cg(gg);
        const QMatrix p = group_average_projector(rep, gg);
        const std::size_t n = rep.dim();
        for (int trial = 0; trial < 60; ++trial) {
            Word u, w;
            for (std::size_t i = uniform_below(rng, 3); i > 0; --i) u.push_back(uniform_below(rng, rep.automaton().letter_count()));
            for (std::size_t i = uniform_below(rng, 4); i > 0; --i) w.push_back(uniform_below(rng, rep.automaton().letter_count()));
            const StateSet s(rng() & StateSet::full(n).bits());
            if (s.size() < 1 || s.size() >= n) continue;
            const auto out = standard_argument(rep, cg, p, s, u, w);
            if (!out.premise) continue;
            ++premises;
            REQUIRE(out.witness.has_value());
            Word t = u;
            for (std::size_t i : shortest_word(cg, *out.witness)) t.push_back(rep.automaton().cayley_letters()[i]);
            t.insert(t.end(), w.begin(), w.end());
            CHECK(preimage(rep.automaton(), s, t).size() > s.size());
            CHECK(out.witness_length <= u.size() + w.size() + diameter(cg));
        }
    }
    CHECK(premises > 0);
}

TEST_CASE("cyclotomic polynomials and modules") {
    auto poly = [](std::initializer_list<long> xs) {
        IntPoly p;
        for (long x : xs) p.emplace_back(x);
        return p;
    };
    CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
    CHECK(cyclotomic_polynomial(3) == poly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(8) == poly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(9) == poly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(10) == poly({1, -1, 1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));

    auto m3 = cyclotomic_module(3);
    CHECK(m3.dim == 2);
    QMatrix companion(2, 2);
    companion(1, 0) = 1;
    companion(0, 1) = -1;
    companion(1, 1) = -1;
    CHECK(m3.rotation == companion);
    CHECK(cyclotomic_module(9).dim == 6);

    for (unsigned n = 3; n <= 16; ++n) {
        auto m = cyclotomic_module(n);
        CHECK(m.dim == totient(n));
        const QMatrix id = QMatrix::identity(m.dim);
        CHECK(m.rotation.power(n) == id);
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) CHECK_FALSE(m.rotation.power(d) == id);
        CHECK(m.conjugation * m.conjugation == id);
        CHECK(m.conjugation * m.rotation * m.conjugation == m.rotation.power(n - 1));
    }
    CHECK_THROWS_AS(cyclotomic_module(2), std::invalid_argument);
}

TEST_CASE("affine character identity") {
    for (auto [p, k] : {std::pair{3u, 2u}, {5u, 2u}, {5u, 4u}, {7u, 3u}, {7u, 6u}, {11u, 5u}, {13u, 1u}}) {
        const auto r = verify_affine_decomposition(p, k);
        CHECK(r.holds);
        CHECK(r.traces_agree);
        CHECK(r.is_representation);
        CHECK(r.group_order == p * k);
        CHECK(r.degree == static_cast<long>(p * k));
    }
    CHECK_THROWS_AS(verify_affine_decomposition(7, 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_affine_decomposition(9, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_affine_decomposition(179, 2), std::invalid_argument);
}

TEST_CASE("D_{p^2} character identity") {
    for (unsigned p : {3u, 5u}) {
        const auto r = verify_dp2_decomposition(p);
        CHECK(r.holds);
        CHECK(r.relations_hold);
        CHECK(r.chi2_at_reflection == 0);
        CHECK(r.degree == static_cast<long>(2 * p * p));
        CHECK(r.degree == 1 + 1 + 2 * static_cast<long>(p - 1) + 2 * static_cast<long>(p * p - p));
        for (unsigned k = 1; k < p * p; ++k) {
            CHECK(r.chi1_rotations[k] == (k % p == 0 ? Rational(p - 1) : Rational(-1)));
            CHECK(r.chi2_rotations[k] == (k % p == 0 ? Rational(-static_cast<long>(p)) : Rational(0)));
        }
    }
    CHECK_THROWS_AS(verify_dp2_decomposition(17), std::invalid_argument);
    CHECK_THROWS_AS(verify_dp2_decomposition(2), std::invalid_argument);
}

TEST_CASE("chain lemmas as properties") {
    std::size_t applicable = 0;
    for (std::uint64_t i = 0; i < 150; ++i) {
        std::mt19937_64 rng(derive_seed(99, i));
        const auto inst = random_lemma_instance(rng, 10);
        CHECK(inst.dim <= 10);
        const auto a = check_chainin(inst);
        CHECK_MESSAGE(a.holds, a.detail);
        const auto b = check_getout(inst);
        CHECK_MESSAGE(b.holds, b.detail);
        applicable += b.applicable;
    }
    CHECK(applicable > 50);
}

TEST_CASE("getout on a hand-built instance") {
    // Shift on Q^4: e0 -> e1 -> e2 -> e3 -> 0. W = span(e0), U = W + span(e1).
    LemmaInstance inst;
    inst.dim = 4;
    QMatrix shift(4, 4);
    for (std::size_t i = 0; i + 1 < 4; ++i) shift(i + 1, i) = 1;
    inst.letters = {shift};
    inst.w_span = {qv({1, 0, 0, 0})};
    inst.u_extra = {qv({0, 1, 0, 0})};
    CHECK(monoid_closure(inst).dim() == 4);
    CHECK(bounded_span(inst, 3).dim() == 4);
    CHECK(bounded_span(inst, 2).dim() == 3);
    CHECK(check_chainin(inst).holds);
    const auto g = check_getout(inst);
    CHECK(g.applicable);
    CHECK(g.holds);
    inst.u_extra = {qv({0, 1, 0, 0}), qv({0, 0, 1, 0}), qv({0, 0, 0, 1})};
    CHECK_FALSE(check_getout(inst).applicable);
}

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cerny/group.hpp"

namespace cerny {

using State = std::uint32_t;
/// A letter is a total map on states: letter[x] = x·a.
using Letter = std::vector<State>;
/// Sequence of letter indices, applied left to right.
using Word = std::vector<std::size_t>;

class NotSynchronizing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Subset of at most 64 states as a bit mask.
class StateSet {
public:
    static constexpr std::size_t kMaxStates = 64;

    constexpr StateSet() = default;
    constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}
    static StateSet full(std::size_t n) {
        return StateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static StateSet singleton(State x) { return StateSet(std::uint64_t{1} << x); }
    static StateSet of(std::initializer_list<State> xs) {
        StateSet s;
        for (State x : xs) s.insert(x);
        return s;
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(State x) const noexcept { return x < 64 && ((bits_ >> x) & 1U); }
    void insert(State x) { bits_ |= std::uint64_t{1} << x; }
    std::vector<State> elements() const;

    friend constexpr bool operator==(StateSet, StateSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Deterministic complete automaton on states 0..n-1.
///
/// Letters flagged as Cayley letters form Δ and must be permutations; the
/// remaining letters form Λ.
class Automaton {
public:
    Automaton(std::size_t n, std::vector<Letter> letters, std::vector<std::size_t> cayley_letters = {});

    std::size_t states() const noexcept { return n_; }
    std::size_t letter_count() const noexcept { return letters_.size(); }
    const Letter& letter(std::size_t i) const { return letters_.at(i); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    const std::vector<std::size_t>& cayley_letters() const noexcept { return cayley_; }
    std::vector<std::size_t> extra_letters() const;
    bool is_cayley_letter(std::size_t i) const { return cayley_mask_.at(i); }
    bool is_permutation(std::size_t i) const { return permutation_.at(i); }

    State step(State x, std::size_t a) const { return letters_[a][x]; }
    State run(State x, const Word& w) const;

    /// {x·a : x in S}; requires states() <= 64.
    StateSet image(StateSet s, std::size_t a) const;
    /// {x : x·a in S}; requires states() <= 64.
    StateSet preimage(StateSet s, std::size_t a) const;

private:
    std::size_t n_;
    std::vector<Letter> letters_;
    std::vector<std::size_t> cayley_;
    std::vector<bool> cayley_mask_;
    std::vector<bool> permutation_;
    // Per letter, per byte chunk of the mask: union of images / preimages.
    using ChunkTable = std::vector<std::array<std::uint64_t, 256>>;
    std::vector<ChunkTable> image_tables_;
    std::vector<ChunkTable> preimage_tables_;
};

/// S·w
StateSet apply(const Automaton& a, StateSet s, const Word& w);
/// S·a^{-1}
StateSet preimage(const Automaton& a, StateSet s, std::size_t letter);
/// S·w^{-1} = {x : x·w in S}
StateSet preimage(const Automaton& a, StateSet s, const Word& w);

/// Pair-merging criterion: every pair of states can be sent to one state.
bool is_synchronizing(const Automaton& a);
/// Every state reaches every other state.
bool is_transitive(const Automaton& a);
/// Δ-letters act as right multiplication by `gg.gens` on the group elements.
bool realizes_cayley_graph(const Automaton& a, const GeneratedGroup& gg);

struct SolverCaps {
    std::size_t max_states = 24;
};

struct ResetWord {
    std::size_t length = 0;
    Word word;
};

/// Exact shortest reset word by breadth-first search over images of the
/// full state set. Throws NotSynchronizing or CapExceeded.
ResetWord shortest_reset_word(const Automaton& a, const SolverCaps& caps = {});

/// Shortest t with |S·t^{-1}| > |S|, by breadth-first search over preimage
/// sets, prepending letters. Among shortest words the one least in
/// reverse-lexicographic order (compared from the last letter) is returned.
/// Throws std::logic_error when no expanding word exists.
Word shortest_expanding_word(const Automaton& a, StateSet s, const SolverCaps& caps = {});

struct ExpansionResult {
    Word word;
    /// Lengths of the successive expanding words, after the initial letter.
    std::vector<std::size_t> phase_lengths;
    State target = 0;
};

/// Reset word built from one non-permutation letter followed by repeated
/// shortest expansions of the preimage of the target state.
ExpansionResult expansion_synchronizer(const Automaton& a, const SolverCaps& caps = {});

/// C_n: letter 0 is the cycle x -> x+1 mod n (the Cayley letter of Z_n),
/// letter 1 sends n-1 to 0 and fixes everything else.
Automaton cerny_automaton(std::size_t n);

/// States are group elements; one permutation letter g -> g*a per generator.
Automaton cayley_automaton(const GeneratedGroup& gg);

enum class ExtraKind { random_map, pair_merge };

Letter random_extra_letter(std::size_t n, ExtraKind kind, std::mt19937_64& rng);

/// Cayley automaton of `gg` plus `extra` random letters, resampled until
/// synchronizing. Throws std::runtime_error after `max_attempts` failures.
Automaton random_cayley_extension(const GeneratedGroup& gg, std::size_t extra, ExtraKind kind,
                                  std::mt19937_64& rng, std::size_t max_attempts = 10000);

/// {"n": int, "letters": [[int,...],...], "cayley_letters": [int,...]}
nlohmann::json automaton_to_json(const Automaton& a);
Automaton automaton_from_json(const nlohmann::json& j);
std::string word_to_string(const Word& w);

}  // namespace cerny

#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "cerny/group.hpp"

namespace cerny {

/// Word over a generating set, as positions into `GeneratorSet::gens`.
using GenWord = std::vector<std::size_t>;

/// Cayley graph (G, Δ) with right multiplication g -> g*a.
///
/// Shortest word lengths come from one breadth-first search from the
/// identity, run on first use. Generators are tried in index order, so the
/// recorded witnesses are deterministic.
class CayleyGraph {
public:
    CayleyGraph(FiniteGroup group, GeneratorSet gens);
    explicit CayleyGraph(const GeneratedGroup& gg) : CayleyGraph(gg.group, gg.gens) {}

    const FiniteGroup& group() const noexcept { return group_; }
    const GeneratorSet& gens() const noexcept { return gens_; }

    /// Shortest Δ-word length of g. Throws std::invalid_argument when Δ
    /// does not generate.
    std::size_t word_length(Elem g) const;
    const std::vector<std::size_t>& word_lengths() const;

    /// Evaluates a generator word to a group element.
    Elem evaluate(const GenWord& w) const;

private:
    void ensure_bfs() const;

    FiniteGroup group_;
    GeneratorSet gens_;
    mutable std::once_flag once_;
    mutable std::vector<std::size_t> dist_;
    mutable std::vector<Elem> parent_;
    mutable std::vector<std::size_t> parent_gen_;
    mutable bool generating_ = false;

    friend GenWord shortest_word(const CayleyGraph& cg, Elem g);
};

/// max_g of the shortest word length; 0 <= diam <= |G|-1.
std::size_t diameter(const CayleyGraph& cg);

/// A shortest word evaluating to g (empty for the identity).
GenWord shortest_word(const CayleyGraph& cg, Elem g);

/// Max over right cosets Hg of the least word length landing in Hg.
/// Throws std::invalid_argument if `subgroup` is not a subgroup.
std::size_t max_coset_word_length(const CayleyGraph& cg, const std::vector<Elem>& subgroup);

}  // namespace cerny

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cerny/automaton.hpp"
#include "cerny/cayley.hpp"
#include "cerny/qlinalg.hpp"

namespace cerny {

/// Standard representation of an automaton on Q^X by right translation:
/// ρ_a(f)(x) = f(x·a).
///
/// Composition follows function application, ρ_{uv} = ρ_u ∘ ρ_v, which
/// makes ρ_w(χ_S) = χ_{S·w^{-1}}.
class StandardRep {
public:
    explicit StandardRep(Automaton a);

    const Automaton& automaton() const noexcept { return automaton_; }
    std::size_t dim() const noexcept { return automaton_.states(); }

    QVector act(std::size_t letter, const QVector& f) const;
    QVector act(const Word& w, const QVector& f) const;

    /// Number of Λ-letters in w, i.e. |δ(w)| for the map erasing Δ.
    std::size_t erased_length(const Word& w) const;

    bool synchronizing() const noexcept { return synchronizing_; }
    bool transitive() const noexcept { return transitive_; }
    /// Eccentricity of state 0 in the graph of the Δ-letters; equals the
    /// Cayley diameter when the Δ-letters are right multiplications.
    /// Throws std::invalid_argument if Δ is empty or not transitive.
    std::size_t cayley_diameter() const;

private:
    Automaton automaton_;
    bool synchronizing_;
    bool transitive_;
    std::optional<std::size_t> diameter_;
};

QVector characteristic_vector(StateSet s, std::size_t n);
/// χ_S - (|S|/n)·1, the projection of χ_S onto the augmentation kernel V_0.
QVector hat_chi(StateSet s, std::size_t n);
/// Coordinate sum ε(v).
Rational augmentation(const QVector& v);
/// W ⊆ V_0, tested on the basis rows.
bool inside_augmentation_kernel(const QSubspace& w);

/// The chain W_0 ⊆ W_1 ⊆ ... for a subset S, where W_0 = Δ*·Span{χ̂_S} and
/// W_{r+1} = Δ*Λ^{≤1}W_r.
struct ChainReport {
    /// dim W_0 .. dim W_{s+1} (the last entry is the first level leaving V_0).
    std::vector<std::size_t> dims;
    /// c_0 .. c_s
    std::vector<std::size_t> gaps;
    std::size_t s = 0;
    std::size_t diam = 0;
    std::size_t gap_bound = 0;
    /// Number of Δ-rounds that grew the span while closing level r.
    std::vector<std::size_t> closure_depths;
    /// False only when the chain stabilized inside V_0 (possible only for
    /// non-synchronizing input with checks disabled); gap_bound is then 0.
    bool escapes = true;

    std::size_t max_gap() const;
};

struct ChainOptions {
    /// Reject automata that are not synchronizing and transitive.
    bool require_synchronizing = true;
};

/// Builds the chain and the gap bound 1 + dim W_s - max c_r + diam.
/// Throws std::invalid_argument when preconditions fail.
ChainReport build_chain(const StandardRep& rep, StateSet s, const ChainOptions& opts = {});
/// Same chain, returning the subspaces W_0 .. W_{s+1}.
std::vector<QSubspace> chain_subspaces(const StandardRep& rep, StateSet s, const ChainOptions& opts = {},
                                       ChainReport* report = nullptr);

/// P = (1/|G|) Σ_g λ_g with (λ_g f)(x) = f(x·g). Throws std::invalid_argument
/// unless the Δ-letters of `rep` realize right multiplication by `gg.gens`.
QMatrix group_average_projector(const StandardRep& rep, const GeneratedGroup& gg);

/// Outcome of the averaging argument for a subset S and words u, w, using
/// the shortest Cayley words u_g and the group average P.
struct StandardArgumentOutcome {
    /// ρ_u·P·ρ_w(χ̂_S) lies in V_0 and some ρ_{u u_g w}(χ̂_S) does not.
    bool premise = false;
    /// Some g' with |S·(u u_{g'} w)^{-1}| > |S|, lowest element index first.
    std::optional<Elem> witness;
    std::size_t witness_length = 0;
};

StandardArgumentOutcome standard_argument(const StandardRep& rep, const CayleyGraph& cg, const QMatrix& projector,
                                          StateSet s, const Word& u, const Word& w);

}  // namespace cerny

#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "cerny/qlinalg.hpp"

namespace cerny {

/// A monoid action on Q^d given by one matrix per letter, with
/// φ_{uv} = φ_u φ_v, together with a subspace W and an extension U ⊇ W.
struct LemmaInstance {
    std::size_t dim = 0;
    std::vector<QMatrix> letters;
    /// Spanning set X of W.
    std::vector<QVector> w_span;
    /// U = W + Span(u_extra).
    std::vector<QVector> u_extra;
};

/// Dimension in [2, max_dim], one to three letters mixing transformation
/// matrices and small integer matrices.
LemmaInstance random_lemma_instance(std::mt19937_64& rng, std::size_t max_dim = 10);

/// Σ*W by closure under the letters.
QSubspace monoid_closure(const LemmaInstance& inst);
/// Σ^{≤len}W
QSubspace bounded_span(const LemmaInstance& inst, std::size_t len);

struct LemmaCheck {
    bool holds = true;
    /// False when the hypothesis fails (getout with Σ*W ⊆ U).
    bool applicable = true;
    std::string detail;
};

/// Σ*W = Σ^{≤d}W with d = dim Σ*W - dim W, and the partial spans grow
/// strictly until they stabilize.
LemmaCheck check_chainin(const LemmaInstance& inst);

/// When Σ*W ⊄ U, some x in the spanning set and some word w with
/// |w| <= dim U - dim W + 1 give φ_w(x) outside U. The witness is replayed
/// from scratch.
LemmaCheck check_getout(const LemmaInstance& inst);

}  // namespace cerny

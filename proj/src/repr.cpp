#include "cerny/repr.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cerny {

StandardRep::StandardRep(Automaton a)
    : automaton_(std::move(a)),
      synchronizing_(is_synchronizing(automaton_)),
      transitive_(is_transitive(automaton_)) {
    const auto& delta = automaton_.cayley_letters();
    if (delta.empty()) return;
    const std::size_t n = automaton_.states();
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::deque<State> queue{0};
    dist[0] = 0;
    while (!queue.empty()) {
        State x = queue.front();
        queue.pop_front();
        for (std::size_t a : delta) {
            State y = automaton_.step(x, a);
            if (dist[y] == SIZE_MAX) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    if (std::find(dist.begin(), dist.end(), SIZE_MAX) == dist.end())
        diameter_ = *std::max_element(dist.begin(), dist.end());
}

QVector StandardRep::act(std::size_t letter, const QVector& f) const {
    if (f.size() != dim()) throw std::invalid_argument("act: dimension mismatch");
    const Letter& a = automaton_.letter(letter);
    QVector out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[a[x]];
    return out;
}

QVector StandardRep::act(const Word& w, const QVector& f) const {
    if (f.size() != dim()) throw std::invalid_argument("act: dimension mismatch");
    for (std::size_t a : w)
        if (a >= automaton_.letter_count()) throw std::invalid_argument("act: letter out of range");
    QVector out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[automaton_.run(static_cast<State>(x), w)];
    return out;
}

std::size_t StandardRep::erased_length(const Word& w) const {
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [this](std::size_t a) { return !automaton_.is_cayley_letter(a); }));
}

std::size_t StandardRep::cayley_diameter() const {
    if (automaton_.cayley_letters().empty()) throw std::invalid_argument("no Cayley letters");
    if (!diameter_) throw std::invalid_argument("Cayley letters do not act transitively");
    return *diameter_;
}

QVector characteristic_vector(StateSet s, std::size_t n) {
    QVector v(n);
    for (State x : s.elements()) {
        if (x >= n) throw std::invalid_argument("subset exceeds state count");
        v[x] = 1;
    }
    return v;
}

QVector hat_chi(StateSet s, std::size_t n) {
    QVector v = characteristic_vector(s, n);
    Rational shift(static_cast<long>(s.size()), static_cast<long>(n));
    shift.canonicalize();
    for (auto& x : v) x -= shift;
    return v;
}

Rational augmentation(const QVector& v) {
    Rational sum = 0;
    for (const auto& x : v) sum += x;
    return sum;
}

bool inside_augmentation_kernel(const QSubspace& w) {
    return std::all_of(w.basis().begin(), w.basis().end(), [](const QVector& r) { return sgn(augmentation(r)) == 0; });
}

std::size_t ChainReport::max_gap() const { return gaps.empty() ? 0 : *std::max_element(gaps.begin(), gaps.end()); }

namespace {

// Adds `seeds` to w, then closes under the Δ-letters level by level.
// Returns the number of rounds that enlarged the span.
std::size_t delta_close(const StandardRep& rep, QSubspace& w, const std::vector<QVector>& seeds) {
    std::vector<QVector> level;
    for (const auto& v : seeds)
        if (w.insert(v)) level.push_back(v);
    std::size_t depth = 0;
    const auto& delta = rep.automaton().cayley_letters();
    while (!level.empty()) {
        std::vector<QVector> next;
        for (const auto& v : level)
            for (std::size_t a : delta) {
                QVector u = rep.act(a, v);
                if (w.insert(u)) next.push_back(std::move(u));
            }
        if (!next.empty()) ++depth;
        level = std::move(next);
    }
    return depth;
}

}  // namespace

std::vector<QSubspace> chain_subspaces(const StandardRep& rep, StateSet s, const ChainOptions& opts,
                                       ChainReport* report) {
    const Automaton& a = rep.automaton();
    const std::size_t n = a.states();
    if (n > StateSet::kMaxStates) throw std::invalid_argument("chain: too many states");
    if (s.size() < 2 || s.size() >= n) throw std::invalid_argument("chain: need 2 <= |S| < n");
    if ((s.bits() & ~StateSet::full(n).bits()) != 0)
        throw std::invalid_argument("chain: subset exceeds state count");
    if (a.cayley_letters().empty()) throw std::invalid_argument("chain: no Cayley letters");
    if (opts.require_synchronizing && !(rep.synchronizing() && rep.transitive()))
        throw std::invalid_argument("chain: automaton must be synchronizing and transitive");

    ChainReport r;
    r.diam = rep.cayley_diameter();

    // Scaling by n keeps the seed integral without changing its span.
    QVector seed = hat_chi(s, n);
    for (auto& x : seed) x *= static_cast<long>(n);

    std::vector<QSubspace> spaces;
    QSubspace w(n);
    std::size_t depth = delta_close(rep, w, {seed});
    if (depth + 1 > w.dim()) throw std::logic_error("chain: closure depth exceeds dim W_0 - 1");
    if (!inside_augmentation_kernel(w)) throw std::logic_error("chain: W_0 not in the augmentation kernel");
    spaces.push_back(w);
    r.dims.push_back(w.dim());
    r.closure_depths.push_back(depth);

    const auto lambda = a.extra_letters();
    for (;;) {
        const QSubspace& prev = spaces.back();
        QSubspace next = prev;
        std::vector<QVector> images;
        for (const auto& v : prev.basis())
            for (std::size_t l : lambda) images.push_back(rep.act(l, v));
        depth = delta_close(rep, next, images);
        const std::size_t grown = next.dim() - prev.dim();
        if (grown > 0 && depth + 1 > grown) throw std::logic_error("chain: closure depth exceeds level growth - 1");
        if (!next.contains(prev)) throw std::logic_error("chain: level does not contain its predecessor");
        if (grown == 0) {
            // Stabilized inside V_0.
            if (opts.require_synchronizing) throw std::logic_error("chain: stabilized inside V_0");
            r.escapes = false;
            r.s = spaces.size() - 1;
            break;
        }
        const bool inside = inside_augmentation_kernel(next);
        spaces.push_back(std::move(next));
        r.dims.push_back(spaces.back().dim());
        r.closure_depths.push_back(depth);
        if (!inside) {
            r.s = spaces.size() - 2;
            break;
        }
    }

    for (std::size_t i = 0; i <= r.s; ++i) r.gaps.push_back(i == 0 ? r.dims[0] : r.dims[i] - r.dims[i - 1]);
    if (r.escapes) r.gap_bound = 1 + r.dims[r.s] - r.max_gap() + r.diam;
    if (report) *report = std::move(r);
    return spaces;
}

ChainReport build_chain(const StandardRep& rep, StateSet s, const ChainOptions& opts) {
    ChainReport r;
    chain_subspaces(rep, s, opts, &r);
    return r;
}

QMatrix group_average_projector(const StandardRep& rep, const GeneratedGroup& gg) {
    const Automaton& a = rep.automaton();
    if (!realizes_cayley_graph(a, gg)) throw std::invalid_argument("projector: Cayley letters do not match the group");
    const FiniteGroup& g = gg.group;
    const std::size_t n = g.order();
    QMatrix p(n, n);
    const Rational w(1, static_cast<long>(n));
    for (Elem x = 0; x < n; ++x)
        for (Elem h = 0; h < n; ++h) p(x, g.mul(x, h)) += w;
    return p;
}

StandardArgumentOutcome standard_argument(const StandardRep& rep, const CayleyGraph& cg, const QMatrix& projector,
                                          StateSet s, const Word& u, const Word& w) {
    const Automaton& a = rep.automaton();
    const std::size_t n = a.states();
    if (cg.group().order() != n) throw std::invalid_argument("standard argument: group order mismatch");
    const auto& delta = a.cayley_letters();
    if (delta.size() != cg.gens().gens.size()) throw std::invalid_argument("standard argument: generator mismatch");

    StandardArgumentOutcome out;
    const QVector moved = rep.act(w, hat_chi(s, n));
    if (sgn(augmentation(rep.act(u, projector * moved))) != 0) return out;

    // words[g] = u u_g
    std::vector<Word> words(n, u);
    bool escapes = false;
    for (Elem g = 0; g < n; ++g) {
        for (std::size_t i : shortest_word(cg, g)) words[g].push_back(delta[i]);
        if (sgn(augmentation(rep.act(words[g], moved))) != 0) escapes = true;
    }
    if (!escapes) return out;
    out.premise = true;
    for (Elem g = 0; g < n; ++g) {
        Word t = words[g];
        t.insert(t.end(), w.begin(), w.end());
        if (preimage(a, s, t).size() > s.size()) {
            out.witness = g;
            out.witness_length = t.size();
            break;
        }
    }
    return out;
}

}  // namespace cerny

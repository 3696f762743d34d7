#include "cerny/lemmas.hpp"

#include "cerny/rng.hpp"

namespace cerny {

namespace {

QVector random_int_vector(std::mt19937_64& rng, std::size_t d, long radius) {
    QVector v(d);
    for (auto& x : v) x = static_cast<long>(uniform_below(rng, 2 * radius + 1)) - radius;
    return v;
}

QSubspace span_of(std::size_t d, const std::vector<QVector>& vs) {
    QSubspace s(d);
    for (const auto& v : vs) s.insert(v);
    return s;
}

}  // namespace

LemmaInstance random_lemma_instance(std::mt19937_64& rng, std::size_t max_dim) {
    if (max_dim < 2) throw std::invalid_argument("lemma instance: max_dim must be at least 2");
    LemmaInstance inst;
    inst.dim = 2 + uniform_below(rng, max_dim - 1);
    const std::size_t d = inst.dim;
    const std::size_t letters = 1 + uniform_below(rng, 3);
    for (std::size_t i = 0; i < letters; ++i) {
        QMatrix m(d, d);
        if (uniform_below(rng, 2) == 0) {
            // ρ_a(f)(x) = f(x·a) for a random map a.
            for (std::size_t x = 0; x < d; ++x) m(x, uniform_below(rng, d)) = 1;
        } else {
            static constexpr long kEntries[] = {-1, 0, 0, 0, 1, 2};
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) m(r, c) = kEntries[uniform_below(rng, 6)];
        }
        inst.letters.push_back(std::move(m));
    }
    const std::size_t wn = 1 + uniform_below(rng, 2);
    for (std::size_t i = 0; i < wn; ++i) inst.w_span.push_back(random_int_vector(rng, d, 2));
    const std::size_t un = uniform_below(rng, std::min<std::size_t>(4, d));
    for (std::size_t i = 0; i < un; ++i) inst.u_extra.push_back(random_int_vector(rng, d, 2));
    return inst;
}

QSubspace monoid_closure(const LemmaInstance& inst) {
    QSubspace s(inst.dim);
    std::vector<QVector> queue;
    for (const auto& v : inst.w_span)
        if (s.insert(v)) queue.push_back(v);
    while (!queue.empty()) {
        QVector v = std::move(queue.back());
        queue.pop_back();
        for (const auto& m : inst.letters) {
            QVector u = m * v;
            if (s.insert(u)) queue.push_back(std::move(u));
        }
    }
    return s;
}

QSubspace bounded_span(const LemmaInstance& inst, std::size_t len) {
    // B_{i+1} = B_i + Σ B_i, using a basis of B_i each round.
    QSubspace s = span_of(inst.dim, inst.w_span);
    for (std::size_t i = 0; i < len; ++i) {
        QSubspace next = s;
        for (const auto& v : s.basis())
            for (const auto& m : inst.letters) next.insert(m * v);
        if (next == s) break;
        s = std::move(next);
    }
    return s;
}

LemmaCheck check_chainin(const LemmaInstance& inst) {
    LemmaCheck out;
    const QSubspace w = span_of(inst.dim, inst.w_span);
    const QSubspace closure = monoid_closure(inst);
    const std::size_t d = closure.dim() - w.dim();
    if (!(bounded_span(inst, d) == closure)) {
        out.holds = false;
        out.detail = "span of words of length <= " + std::to_string(d) + " is smaller than the closure";
        return out;
    }
    std::size_t prev = w.dim();
    bool stable = false;
    for (std::size_t i = 1; i <= d + 1; ++i) {
        const std::size_t cur = bounded_span(inst, i).dim();
        if (stable && cur != prev) {
            out.holds = false;
            out.detail = "partial spans grew after stabilizing";
        }
        if (cur == prev) stable = true;
        prev = cur;
    }
    return out;
}

LemmaCheck check_getout(const LemmaInstance& inst) {
    LemmaCheck out;
    const std::size_t d = inst.dim;
    const QSubspace w = span_of(d, inst.w_span);
    QSubspace u = w;
    for (const auto& v : inst.u_extra) u.insert(v);
    if (u.contains(monoid_closure(inst))) {
        out.applicable = false;
        return out;
    }
    const std::size_t bound = u.dim() - w.dim() + 1;

    // Each tracked vector is φ_word(x) for a recorded spanning vector x; the
    // tracked vectors of length <= i span Σ^{≤i}W.
    struct Tracked {
        std::size_t source;
        std::vector<std::size_t> word;
        QVector value;
    };
    QSubspace reached(d);
    std::vector<Tracked> level;
    for (std::size_t i = 0; i < inst.w_span.size(); ++i)
        if (reached.insert(inst.w_span[i])) level.push_back({i, {}, inst.w_span[i]});
    const Tracked* escape = nullptr;
    std::vector<Tracked> all;
    for (std::size_t len = 0; len <= bound && !level.empty(); ++len) {
        for (const auto& t : level)
            if (!u.contains(t.value)) {
                all.push_back(t);
                escape = &all.back();
                break;
            }
        if (escape) break;
        std::vector<Tracked> next;
        for (const auto& t : level)
            for (std::size_t a = 0; a < inst.letters.size(); ++a) {
                QVector v = inst.letters[a] * t.value;
                if (reached.insert(v)) {
                    std::vector<std::size_t> word{a};
                    word.insert(word.end(), t.word.begin(), t.word.end());
                    next.push_back({t.source, std::move(word), std::move(v)});
                }
            }
        level = std::move(next);
    }
    if (!escape) {
        out.holds = false;
        out.detail = "no escaping word of length <= " + std::to_string(bound);
        return out;
    }
    // Replay φ_w(x) = M_{w1}(M_{w2}(... M_{wk} x)).
    QVector v = inst.w_span[escape->source];
    for (auto it = escape->word.rbegin(); it != escape->word.rend(); ++it) v = inst.letters[*it] * v;
    if (!(v == escape->value) || u.contains(v) || escape->word.size() > bound) {
        out.holds = false;
        out.detail = "escaping witness failed to replay";
    }
    return out;
}

}  // namespace cerny

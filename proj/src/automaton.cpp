#include "cerny/automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cerny/rng.hpp"

namespace cerny {

std::vector<State> StateSet::elements() const {
    std::vector<State> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<State>(std::countr_zero(b)));
    return out;
}

Automaton::Automaton(std::size_t n, std::vector<Letter> letters, std::vector<std::size_t> cayley_letters)
    : n_(n), letters_(std::move(letters)), cayley_(std::move(cayley_letters)) {
    if (n_ == 0) throw std::invalid_argument("automaton: need at least one state");
    cayley_mask_.assign(letters_.size(), false);
    permutation_.assign(letters_.size(), false);
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const auto& l = letters_[i];
        if (l.size() != n_) throw std::invalid_argument("automaton: letter is not total");
        std::vector<bool> hit(n_, false);
        bool perm = true;
        for (State y : l) {
            if (y >= n_) throw std::invalid_argument("automaton: letter maps outside the state set");
            if (hit[y]) perm = false;
            hit[y] = true;
        }
        permutation_[i] = perm;
    }
    for (std::size_t c : cayley_) {
        if (c >= letters_.size()) throw std::invalid_argument("automaton: cayley letter out of range");
        if (cayley_mask_[c]) throw std::invalid_argument("automaton: duplicate cayley letter");
        if (!permutation_[c]) throw std::invalid_argument("automaton: cayley letter is not a permutation");
        cayley_mask_[c] = true;
    }
    if (n_ <= StateSet::kMaxStates) {
        const std::size_t chunks = (n_ + 7) / 8;
        for (const auto& l : letters_) {
            ChunkTable img(chunks), pre(chunks);
            std::vector<std::uint64_t> pre_of(n_, 0);  // preimage of each single state
            for (State x = 0; x < n_; ++x) pre_of[l[x]] |= std::uint64_t{1} << x;
            for (std::size_t c = 0; c < chunks; ++c) {
                for (unsigned byte = 0; byte < 256; ++byte) {
                    std::uint64_t im = 0, pr = 0;
                    for (unsigned bit = 0; bit < 8; ++bit) {
                        std::size_t x = c * 8 + bit;
                        if (!((byte >> bit) & 1U) || x >= n_) continue;
                        im |= std::uint64_t{1} << l[x];
                        pr |= pre_of[x];
                    }
                    img[c][byte] = im;
                    pre[c][byte] = pr;
                }
            }
            image_tables_.push_back(std::move(img));
            preimage_tables_.push_back(std::move(pre));
        }
    }
}

std::vector<std::size_t> Automaton::extra_letters() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (!cayley_mask_[i]) out.push_back(i);
    return out;
}

State Automaton::run(State x, const Word& w) const {
    for (std::size_t a : w) x = letters_.at(a).at(x);
    return x;
}

namespace {
std::uint64_t chunk_union(const std::vector<std::array<std::uint64_t, 256>>& table, std::uint64_t bits) {
    std::uint64_t out = 0;
    for (std::size_t c = 0; bits && c < table.size(); ++c, bits >>= 8) out |= table[c][bits & 0xFF];
    return out;
}
}  // namespace

StateSet Automaton::image(StateSet s, std::size_t a) const {
    if (image_tables_.empty()) throw std::invalid_argument("automaton: state sets need n <= 64");
    return StateSet(chunk_union(image_tables_.at(a), s.bits()));
}

StateSet Automaton::preimage(StateSet s, std::size_t a) const {
    if (preimage_tables_.empty()) throw std::invalid_argument("automaton: state sets need n <= 64");
    return StateSet(chunk_union(preimage_tables_.at(a), s.bits()));
}

StateSet apply(const Automaton& a, StateSet s, const Word& w) {
    for (std::size_t l : w) s = a.image(s, l);
    return s;
}

StateSet preimage(const Automaton& a, StateSet s, std::size_t letter) { return a.preimage(s, letter); }

StateSet preimage(const Automaton& a, StateSet s, const Word& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) s = a.preimage(s, *it);
    return s;
}

bool is_synchronizing(const Automaton& a) {
    const std::size_t n = a.states();
    if (n == 1) return true;
    const std::size_t L = a.letter_count();
    auto id = [n](State x, State y) { return x < y ? x * n + y : y * n + x; };
    // Reverse edges of the pair graph in compressed form.
    std::vector<std::size_t> offsets(n * n + 1, 0);
    std::vector<bool> merged(n * n, false);
    std::deque<std::size_t> queue;
    for (State x = 0; x < n; ++x)
        for (State y = x + 1; y < n; ++y)
            for (std::size_t l = 0; l < L; ++l) {
                State u = a.step(x, l), v = a.step(y, l);
                if (u == v) {
                    if (!merged[id(x, y)]) {
                        merged[id(x, y)] = true;
                        queue.push_back(id(x, y));
                    }
                } else {
                    ++offsets[id(u, v) + 1];
                }
            }
    for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
    std::vector<std::size_t> sources(offsets.back());
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (State x = 0; x < n; ++x)
        for (State y = x + 1; y < n; ++y)
            for (std::size_t l = 0; l < L; ++l) {
                State u = a.step(x, l), v = a.step(y, l);
                if (u != v) sources[fill[id(u, v)]++] = id(x, y);
            }
    while (!queue.empty()) {
        std::size_t p = queue.front();
        queue.pop_front();
        for (std::size_t i = offsets[p]; i < offsets[p + 1]; ++i) {
            std::size_t q = sources[i];
            if (!merged[q]) {
                merged[q] = true;
                queue.push_back(q);
            }
        }
    }
    for (State x = 0; x < n; ++x)
        for (State y = x + 1; y < n; ++y)
            if (!merged[id(x, y)]) return false;
    return true;
}

bool is_transitive(const Automaton& a) {
    const std::size_t n = a.states();
    auto reach_all = [&](bool forward) {
        std::vector<std::vector<State>> adj(n);
        for (std::size_t l = 0; l < a.letter_count(); ++l)
            for (State x = 0; x < n; ++x) {
                State y = a.step(x, l);
                if (forward) adj[x].push_back(y);
                else adj[y].push_back(x);
            }
        std::vector<bool> seen(n, false);
        std::deque<State> q{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!q.empty()) {
            State x = q.front();
            q.pop_front();
            for (State y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    ++count;
                    q.push_back(y);
                }
        }
        return count == n;
    };
    return reach_all(true) && reach_all(false);
}

bool realizes_cayley_graph(const Automaton& a, const GeneratedGroup& gg) {
    const auto& G = gg.group;
    if (a.states() != G.order()) return false;
    const auto& cl = a.cayley_letters();
    if (cl.size() != gg.gens.gens.size()) return false;
    for (std::size_t i = 0; i < cl.size(); ++i)
        for (State x = 0; x < a.states(); ++x)
            if (a.step(x, cl[i]) != G.mul(x, gg.gens.gens[i])) return false;
    return generates(G, gg.gens);
}

namespace {

void check_cap(const Automaton& a, const SolverCaps& caps) {
    if (a.states() > caps.max_states || a.states() > StateSet::kMaxStates)
        throw CapExceeded("automaton: state count " + std::to_string(a.states()) +
                          " exceeds exact solver cap " + std::to_string(caps.max_states));
}

struct Visit {
    std::uint64_t parent;
    std::size_t letter;
};

}  // namespace

ResetWord shortest_reset_word(const Automaton& a, const SolverCaps& caps) {
    check_cap(a, caps);
    const StateSet start = StateSet::full(a.states());
    if (start.size() == 1) return {};
    std::unordered_map<std::uint64_t, Visit> seen;
    seen.reserve(1024);
    seen.emplace(start.bits(), Visit{0, 0});
    std::deque<StateSet> queue{start};
    while (!queue.empty()) {
        StateSet cur = queue.front();
        queue.pop_front();
        for (std::size_t l = 0; l < a.letter_count(); ++l) {
            StateSet next = a.image(cur, l);
            if (!seen.emplace(next.bits(), Visit{cur.bits(), l}).second) continue;
            if (next.size() == 1) {
                Word w;
                for (std::uint64_t m = next.bits(); m != start.bits();) {
                    const Visit& v = seen.at(m);
                    w.push_back(v.letter);
                    m = v.parent;
                }
                std::reverse(w.begin(), w.end());
                if (apply(a, start, w).size() != 1) throw std::logic_error("reset word failed replay");
                return {w.size(), std::move(w)};
            }
            queue.push_back(next);
        }
    }
    throw NotSynchronizing("automaton is not synchronizing");
}

Word shortest_expanding_word(const Automaton& a, StateSet s, const SolverCaps& caps) {
    check_cap(a, caps);
    const std::size_t target = s.size();
    std::unordered_map<std::uint64_t, Visit> seen;
    seen.emplace(s.bits(), Visit{0, 0});
    std::deque<StateSet> queue{s};
    while (!queue.empty()) {
        StateSet cur = queue.front();
        queue.pop_front();
        for (std::size_t l = 0; l < a.letter_count(); ++l) {
            StateSet next = a.preimage(cur, l);
            if (!seen.emplace(next.bits(), Visit{cur.bits(), l}).second) continue;
            if (next.size() > target) {
                // Letters were prepended, so the chain from the goal back to S
                // reads the word left to right.
                Word w;
                for (std::uint64_t m = next.bits(); m != s.bits();) {
                    const Visit& v = seen.at(m);
                    w.push_back(v.letter);
                    m = v.parent;
                }
                if (preimage(a, s, w).size() <= target) throw std::logic_error("expanding word failed replay");
                return w;
            }
            queue.push_back(next);
        }
    }
    throw std::logic_error("no expanding word exists for the given subset");
}

ExpansionResult expansion_synchronizer(const Automaton& a, const SolverCaps& caps) {
    check_cap(a, caps);
    const std::size_t n = a.states();
    ExpansionResult out;
    if (n == 1) return out;
    if (!is_synchronizing(a)) throw NotSynchronizing("automaton is not synchronizing");

    std::size_t b = a.letter_count();
    for (std::size_t l = 0; l < a.letter_count(); ++l)
        if (!a.is_permutation(l)) {
            b = l;
            break;
        }
    if (b == a.letter_count()) throw NotSynchronizing("automaton has no non-permutation letter");

    std::vector<std::size_t> fibre(n, 0);
    for (State x = 0; x < n; ++x) ++fibre[a.step(x, b)];
    out.target = static_cast<State>(std::max_element(fibre.begin(), fibre.end()) - fibre.begin());

    StateSet current = a.preimage(StateSet::singleton(out.target), b);
    Word w{b};
    while (current.size() < n) {
        Word t = shortest_expanding_word(a, current, caps);
        out.phase_lengths.push_back(t.size());
        current = preimage(a, current, t);
        t.insert(t.end(), w.begin(), w.end());
        w = std::move(t);
    }
    if (apply(a, StateSet::full(n), w) != StateSet::singleton(out.target))
        throw std::logic_error("expansion synchronizer failed replay");
    out.word = std::move(w);
    return out;
}

Automaton cerny_automaton(std::size_t n) {
    if (n < 2) throw std::invalid_argument("cerny automaton: n must be at least 2");
    Letter cycle(n), merge(n);
    for (State x = 0; x < n; ++x) {
        cycle[x] = static_cast<State>((x + 1) % n);
        merge[x] = x;
    }
    merge[n - 1] = 0;
    return Automaton(n, {cycle, merge}, {0});
}

Automaton cayley_automaton(const GeneratedGroup& gg) {
    const auto& G = gg.group;
    const std::size_t n = G.order();
    std::vector<Letter> letters;
    std::vector<std::size_t> cayley;
    for (Elem a : gg.gens.gens) {
        Letter l(n);
        for (Elem x = 0; x < n; ++x) l[x] = G.mul(x, a);
        cayley.push_back(letters.size());
        letters.push_back(std::move(l));
    }
    return Automaton(n, std::move(letters), std::move(cayley));
}

Letter random_extra_letter(std::size_t n, ExtraKind kind, std::mt19937_64& rng) {
    Letter l(n);
    if (kind == ExtraKind::random_map) {
        for (auto& y : l) y = static_cast<State>(uniform_below(rng, n));
        return l;
    }
    for (State x = 0; x < n; ++x) l[x] = x;
    if (n < 2) return l;
    auto x = static_cast<State>(uniform_below(rng, n));
    auto y = static_cast<State>(uniform_below(rng, n - 1));
    if (y >= x) ++y;
    l[x] = y;
    return l;
}

Automaton random_cayley_extension(const GeneratedGroup& gg, std::size_t extra, ExtraKind kind,
                                  std::mt19937_64& rng, std::size_t max_attempts) {
    const Automaton base = cayley_automaton(gg);
    const std::size_t n = base.states();
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Letter> letters = base.letters();
        for (std::size_t e = 0; e < extra; ++e) letters.push_back(random_extra_letter(n, kind, rng));
        Automaton a(n, std::move(letters), base.cayley_letters());
        if (is_synchronizing(a)) return a;
    }
    throw std::runtime_error("could not sample a synchronizing extension");
}

nlohmann::json automaton_to_json(const Automaton& a) {
    return nlohmann::json{{"n", a.states()}, {"letters", a.letters()}, {"cayley_letters", a.cayley_letters()}};
}

Automaton automaton_from_json(const nlohmann::json& j) {
    const auto n = j.at("n").get<std::size_t>();
    auto letters = j.at("letters").get<std::vector<Letter>>();
    std::vector<std::size_t> cayley;
    if (j.contains("cayley_letters")) cayley = j.at("cayley_letters").get<std::vector<std::size_t>>();
    return Automaton(n, std::move(letters), std::move(cayley));
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    return os.str();
}

}  // namespace cerny

#include "cerny/cayley.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace cerny {

namespace {
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
}

CayleyGraph::CayleyGraph(FiniteGroup group, GeneratorSet gens)
    : group_(std::move(group)), gens_(std::move(gens)) {
    if (gens_.gens.empty()) throw std::invalid_argument("cayley: empty generating set");
    for (Elem a : gens_.gens)
        if (a >= group_.order()) throw std::invalid_argument("cayley: generator out of range");
}

void CayleyGraph::ensure_bfs() const {
    std::call_once(once_, [this] {
        const std::size_t n = group_.order();
        dist_.assign(n, kUnreached);
        parent_.assign(n, 0);
        parent_gen_.assign(n, 0);
        std::deque<Elem> queue{0};
        dist_[0] = 0;
        std::size_t reached = 1;
        while (!queue.empty()) {
            Elem x = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < gens_.gens.size(); ++i) {
                Elem y = group_.mul(x, gens_.gens[i]);
                if (dist_[y] != kUnreached) continue;
                dist_[y] = dist_[x] + 1;
                parent_[y] = x;
                parent_gen_[y] = i;
                ++reached;
                queue.push_back(y);
            }
        }
        generating_ = reached == n;
    });
}

const std::vector<std::size_t>& CayleyGraph::word_lengths() const {
    ensure_bfs();
    if (!generating_) throw std::invalid_argument("cayley: generators do not generate the group");
    return dist_;
}

std::size_t CayleyGraph::word_length(Elem g) const { return word_lengths().at(g); }

Elem CayleyGraph::evaluate(const GenWord& w) const {
    Elem x = 0;
    for (std::size_t i : w) x = group_.mul(x, gens_.gens.at(i));
    return x;
}

std::size_t diameter(const CayleyGraph& cg) {
    const auto& d = cg.word_lengths();
    return *std::max_element(d.begin(), d.end());
}

GenWord shortest_word(const CayleyGraph& cg, Elem g) {
    cg.word_lengths();
    GenWord w;
    for (Elem x = g; x != 0; x = cg.parent_[x]) w.push_back(cg.parent_gen_[x]);
    std::reverse(w.begin(), w.end());
    return w;
}

std::size_t max_coset_word_length(const CayleyGraph& cg, const std::vector<Elem>& subgroup) {
    const auto& G = cg.group();
    if (!is_subgroup(G, subgroup)) throw std::invalid_argument("cayley: not a subgroup");
    const auto& d = cg.word_lengths();
    const std::size_t n = G.order();
    std::vector<std::size_t> coset_min;
    std::vector<std::size_t> coset_of(n, kUnreached);
    for (Elem x = 0; x < n; ++x) {
        if (coset_of[x] != kUnreached) continue;
        std::size_t id = coset_min.size();
        std::size_t best = kUnreached;
        for (Elem h : subgroup) {
            Elem y = G.mul(h, x);
            coset_of[y] = id;
            best = std::min(best, d[y]);
        }
        coset_min.push_back(best);
    }
    return *std::max_element(coset_min.begin(), coset_min.end());
}

}  // namespace cerny

#include "cerny/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cerny {

struct FiniteGroup::Computed {
    std::vector<Code> codes;
    // Empty when codes[i] == i for every element.
    std::unordered_map<Code, Elem> index;
    ComposeFn compose;

    Elem lookup(Code c) const {
        if (index.empty()) {
            if (c >= codes.size()) throw std::logic_error("group: product left the element list");
            return static_cast<Elem>(c);
        }
        auto it = index.find(c);
        if (it == index.end()) throw std::logic_error("group: product left the element list");
        return it->second;
    }
};

FiniteGroup FiniteGroup::from_codes(std::vector<Code> codes, ComposeFn compose, InvertFn invert,
                                    std::vector<std::string> labels) {
    if (codes.empty()) throw std::invalid_argument("group: empty element list");
    auto computed = std::make_shared<Computed>();
    const std::size_t n = codes.size();

    bool identity_coded = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (codes[i] != i) {
            identity_coded = false;
            break;
        }
    }
    if (!identity_coded) {
        computed->index.reserve(n * 2);
        for (std::size_t i = 0; i < n; ++i) {
            if (!computed->index.emplace(codes[i], static_cast<Elem>(i)).second)
                throw std::invalid_argument("group: duplicate element code");
        }
    }
    if (compose(codes[0], codes[0]) != codes[0])
        throw std::invalid_argument("group: codes[0] is not the identity");
    computed->codes = std::move(codes);
    computed->compose = std::move(compose);

    FiniteGroup g;
    g.order_ = n;
    if (!labels.empty()) {
        if (labels.size() != n) throw std::invalid_argument("group: label count mismatch");
        g.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    }

    std::vector<Elem> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = computed->lookup(invert(computed->codes[i]));
    g.inv_ = std::make_shared<const std::vector<Elem>>(std::move(inv));

    if (n <= kTableLimit) {
        std::vector<Elem> table(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                table[a * n + b] =
                    computed->lookup(computed->compose(computed->codes[a], computed->codes[b]));
        g.table_ = std::make_shared<const std::vector<Elem>>(std::move(table));
    } else {
        g.computed_ = std::move(computed);
    }
    return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Elem>> table,
                                    std::vector<std::string> labels) {
    const std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("group: empty table");
    std::vector<Elem> flat(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) throw std::invalid_argument("group: table is not square");
        for (std::size_t b = 0; b < n; ++b) {
            if (table[a][b] >= n) throw std::invalid_argument("group: table entry out of range");
            flat[a * n + b] = table[a][b];
        }
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (flat[g] != g || flat[g * n] != g)
            throw std::invalid_argument("group: element 0 is not the identity");
    }
    std::vector<Elem> inv(n);
    for (std::size_t g = 0; g < n; ++g) {
        auto row = flat.begin() + static_cast<std::ptrdiff_t>(g * n);
        auto it = std::find(row, row + static_cast<std::ptrdiff_t>(n), Elem{0});
        if (it == row + static_cast<std::ptrdiff_t>(n))
            throw std::invalid_argument("group: element without inverse");
        inv[g] = static_cast<Elem>(it - row);
    }
    FiniteGroup grp;
    grp.order_ = n;
    grp.table_ = std::make_shared<const std::vector<Elem>>(std::move(flat));
    grp.inv_ = std::make_shared<const std::vector<Elem>>(std::move(inv));
    if (!labels.empty()) {
        if (labels.size() != n) throw std::invalid_argument("group: label count mismatch");
        grp.labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    }
    return grp;
}

Elem FiniteGroup::mul(Elem g, Elem h) const {
    if (table_) return (*table_)[static_cast<std::size_t>(g) * order_ + h];
    return computed_->lookup(computed_->compose(computed_->codes.at(g), computed_->codes.at(h)));
}

std::string FiniteGroup::label(Elem g) const {
    if (labels_ && g < labels_->size()) return (*labels_)[g];
    return std::to_string(g);
}

std::size_t FiniteGroup::element_order(Elem g) const {
    std::size_t k = 1;
    for (Elem x = g; x != 0; x = mul(x, g)) ++k;
    return k;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Code = FiniteGroup::Code;

// BFS closure of the generators, identity first.
std::vector<Code> closure(Code identity, const std::vector<Code>& gens,
                          const FiniteGroup::ComposeFn& compose) {
    std::vector<Code> out{identity};
    std::unordered_map<Code, std::size_t> seen{{identity, 0}};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (Code a : gens) {
            Code c = compose(out[head], a);
            if (seen.emplace(c, out.size()).second) out.push_back(c);
        }
    }
    return out;
}

Elem find_code(const std::vector<Code>& codes, Code c) {
    auto it = std::find(codes.begin(), codes.end(), c);
    if (it == codes.end()) throw std::logic_error("group: generator not in closure");
    return static_cast<Elem>(it - codes.begin());
}

// Permutations of at most 16 points packed four bits per image.
using Perm = std::vector<unsigned>;

Code pack(const Perm& p) {
    Code c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) c |= Code{p[i]} << (4 * i);
    return c;
}

Perm unpack(Code c, unsigned n) {
    Perm p(n);
    for (unsigned i = 0; i < n; ++i) p[i] = static_cast<unsigned>((c >> (4 * i)) & 0xF);
    return p;
}

std::string cycle_notation(const Perm& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (unsigned i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == i) continue;
        out += '(';
        unsigned j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

GeneratedGroup permutation_group(std::string name, unsigned n, const std::vector<Perm>& gen_perms,
                                 std::vector<std::string> gen_names) {
    // Right action: x^(gh) = (x^g)^h.
    auto compose = [n](Code a, Code b) {
        Code c = 0;
        for (unsigned i = 0; i < n; ++i) {
            Code ai = (a >> (4 * i)) & 0xF;
            c |= ((b >> (4 * ai)) & 0xF) << (4 * i);
        }
        return c;
    };
    auto invert = [n](Code a) {
        Code c = 0;
        for (unsigned i = 0; i < n; ++i) c |= Code{i} << (4 * ((a >> (4 * i)) & 0xF));
        return c;
    };
    Perm id(n);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Code> gens;
    for (const auto& g : gen_perms) gens.push_back(pack(g));
    auto codes = closure(pack(id), gens, compose);

    std::vector<std::string> labels;
    if (codes.size() <= FiniteGroup::kTableLimit)
        for (Code c : codes) labels.push_back(cycle_notation(unpack(c, n)));

    GeneratedGroup out;
    out.name = std::move(name);
    GeneratorSet gs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Elem e = find_code(codes, gens[i]);
        if (e == 0 || std::find(gs.gens.begin(), gs.gens.end(), e) != gs.gens.end()) continue;
        gs.gens.push_back(e);
        gs.names.push_back(gen_names[i]);
    }
    if (gs.gens.empty()) {
        gs.gens = {0};
        gs.names = {"e"};
        gs.degenerate = true;
    }
    out.group = FiniteGroup::from_codes(std::move(codes), compose, invert, std::move(labels));
    out.gens = std::move(gs);
    return out;
}

Perm transposition(unsigned n, unsigned a, unsigned b) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::swap(p[a], p[b]);
    return p;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > cap / base) throw CapExceeded("group order exceeds configured cap");
        r *= base;
    }
    return r;
}

unsigned mod_pow(unsigned b, unsigned e, unsigned m) {
    std::uint64_t r = 1 % m, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<unsigned>(r);
}

unsigned primitive_root(unsigned p) {
    std::vector<unsigned> factors;
    unsigned q = p - 1;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            factors.push_back(d);
            while (q % d == 0) q /= d;
        }
    }
    if (q > 1) factors.push_back(q);
    for (unsigned g = 2; g < p; ++g) {
        bool ok = std::all_of(factors.begin(), factors.end(),
                              [&](unsigned f) { return mod_pow(g, (p - 1) / f, p) != 1; });
        if (ok) return g;
    }
    return 1;  // p == 2
}

std::string matrix_label(unsigned a, unsigned b, unsigned c, unsigned d) {
    std::ostringstream os;
    os << '[' << a << ' ' << b << "; " << c << ' ' << d << ']';
    return os.str();
}

GeneratedGroup special_linear(unsigned p, bool projective, const GroupCaps& caps) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("SL(2,p): p must be an odd prime");
    if (p > caps.max_sl2_prime) throw CapExceeded("SL(2,p): p exceeds configured cap");
    const Code P = p;
    auto encode = [P](Code a, Code b, Code c, Code d) { return a + P * (b + P * (c + P * d)); };
    auto canon = [P, projective, encode](Code m) {
        if (!projective) return m;
        Code a = m % P, b = m / P % P, c = m / (P * P) % P, d = m / (P * P * P);
        auto neg = [P](Code x) { return (P - x) % P; };
        return std::min(m, encode(neg(a), neg(b), neg(c), neg(d)));
    };
    auto compose = [P, encode, canon](Code x, Code y) {
        Code a = x % P, b = x / P % P, c = x / (P * P) % P, d = x / (P * P * P);
        Code e = y % P, f = y / P % P, g = y / (P * P) % P, h = y / (P * P * P);
        return canon(encode((a * e + b * g) % P, (a * f + b * h) % P, (c * e + d * g) % P,
                            (c * f + d * h) % P));
    };
    auto invert = [P, encode, canon](Code x) {
        Code a = x % P, b = x / P % P, c = x / (P * P) % P, d = x / (P * P * P);
        return canon(encode(d, (P - b) % P, (P - c) % P, a));
    };
    std::vector<Code> gens{canon(encode(1, 1, 0, 1)), canon(encode(1, 0, 1, 1))};
    auto codes = closure(canon(encode(1, 0, 0, 1)), gens, compose);
    std::vector<std::string> labels;
    for (Code m : codes)
        labels.push_back(matrix_label(static_cast<unsigned>(m % P), static_cast<unsigned>(m / P % P),
                                      static_cast<unsigned>(m / (P * P) % P),
                                      static_cast<unsigned>(m / (P * P * P))));
    GeneratedGroup out;
    out.name = (projective ? "PSL(2," : "SL(2,") + std::to_string(p) + ")";
    out.gens.gens = {find_code(codes, gens[0]), find_code(codes, gens[1])};
    out.gens.names = {"x", "y"};
    out.group = FiniteGroup::from_codes(std::move(codes), compose, invert, std::move(labels));
    return out;
}

}  // namespace

GeneratedGroup make_cyclic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclic: n must be positive");
    const Code N = n;
    std::vector<Code> codes(n);
    std::iota(codes.begin(), codes.end(), Code{0});
    GeneratedGroup out;
    out.name = "Z_" + std::to_string(n);
    out.group = FiniteGroup::from_codes(
        std::move(codes), [N](Code a, Code b) { return (a + b) % N; },
        [N](Code a) { return (N - a) % N; });
    if (n == 1) {
        out.gens = GeneratorSet{{0}, {"e"}, true};
    } else {
        out.gens = GeneratorSet{{1}, {"1"}, false};
    }
    return out;
}

GeneratedGroup make_elementary_abelian(unsigned p, unsigned m, const GroupCaps& caps) {
    if (!is_prime(p)) throw std::invalid_argument("elementary abelian: p must be prime");
    if (m == 0) throw std::invalid_argument("elementary abelian: m must be positive");
    const std::uint64_t order = checked_pow(p, m, caps.max_abelian_order);
    const Code P = p;
    // Element index is the little-endian base-p digit string.
    auto compose = [P, m](Code a, Code b) {
        Code r = 0, place = 1;
        for (unsigned i = 0; i < m; ++i) {
            r += ((a % P + b % P) % P) * place;
            a /= P;
            b /= P;
            place *= P;
        }
        return r;
    };
    auto invert = [P, m](Code a) {
        Code r = 0, place = 1;
        for (unsigned i = 0; i < m; ++i) {
            r += ((P - a % P) % P) * place;
            a /= P;
            place *= P;
        }
        return r;
    };
    std::vector<Code> codes(order);
    std::iota(codes.begin(), codes.end(), Code{0});
    std::vector<std::string> labels;
    if (order <= FiniteGroup::kTableLimit) {
        for (Code c : codes) {
            std::string s = "(";
            Code x = c;
            for (unsigned i = 0; i < m; ++i) {
                if (i) s += ',';
                s += std::to_string(x % P);
                x /= P;
            }
            labels.push_back(s + ")");
        }
    }
    GeneratedGroup out;
    out.name = "Z_" + std::to_string(p) + "^" + std::to_string(m);
    out.group = FiniteGroup::from_codes(std::move(codes), compose, invert, std::move(labels));
    Code place = 1;
    for (unsigned i = 0; i < m; ++i, place *= P) {
        out.gens.gens.push_back(static_cast<Elem>(place));
        out.gens.names.push_back("e" + std::to_string(i + 1));
    }
    return out;
}

GeneratedGroup make_dihedral(unsigned n, DihedralGens kind) {
    if (n < 3) throw std::invalid_argument("dihedral: n must be at least 3");
    const Code N = n;
    // Index f*n + k stands for s^f r^k; r^k s = s r^{-k}.
    auto compose = [N](Code x, Code y) {
        Code f1 = x / N, k1 = x % N, f2 = y / N, k2 = y % N;
        Code k = ((f2 ? (N - k1) % N : k1) + k2) % N;
        return (f1 ^ f2) * N + k;
    };
    auto invert = [N](Code x) { return x < N ? (N - x) % N : x; };
    std::vector<Code> codes(2 * n);
    std::iota(codes.begin(), codes.end(), Code{0});
    std::vector<std::string> labels;
    for (unsigned k = 0; k < n; ++k)
        labels.push_back(k == 0 ? "e" : (k == 1 ? "r" : "r^" + std::to_string(k)));
    for (unsigned k = 0; k < n; ++k)
        labels.push_back(k == 0 ? "s" : (k == 1 ? "s r" : "s r^" + std::to_string(k)));
    GeneratedGroup out;
    out.name = "D_" + std::to_string(n);
    out.group = FiniteGroup::from_codes(std::move(codes), compose, invert, std::move(labels));
    if (kind == DihedralGens::rotation_reflection) {
        out.gens = GeneratorSet{{1, n}, {"r", "s"}, false};
    } else {
        out.gens = GeneratorSet{{n, n + 1}, {"s", "s'"}, false};
        if (out.group.element_order(out.group.mul(n, n + 1)) != n)
            throw std::logic_error("dihedral: reflection pair does not have full rotation order");
    }
    return out;
}

GeneratedGroup make_symmetric(unsigned n, SymmetricGens kind, const GroupCaps& caps) {
    if (n == 0) throw std::invalid_argument("symmetric: n must be positive");
    if (n > caps.max_symmetric_degree || n > 16)
        throw CapExceeded("symmetric: degree exceeds configured cap");
    std::vector<Perm> gens;
    std::vector<std::string> names;
    if (kind == SymmetricGens::coxeter) {
        for (unsigned i = 0; i + 1 < n; ++i) {
            gens.push_back(transposition(n, i, i + 1));
            names.push_back("(" + std::to_string(i + 1) + " " + std::to_string(i + 2) + ")");
        }
    } else if (n >= 2) {
        gens.push_back(transposition(n, 0, 1));
        names.push_back("(1 2)");
        Perm cycle(n);
        for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        gens.push_back(cycle);
        names.push_back(cycle_notation(cycle));
    }
    return permutation_group("S_" + std::to_string(n), n, gens, names);
}

GeneratedGroup make_alternating(unsigned n, const GroupCaps& caps) {
    if (n == 0) throw std::invalid_argument("alternating: n must be positive");
    if (n > caps.max_symmetric_degree || n > 16)
        throw CapExceeded("alternating: degree exceeds configured cap");
    std::vector<Perm> gens;
    std::vector<std::string> names;
    for (unsigned i = 2; i < n; ++i) {
        Perm p(n);
        std::iota(p.begin(), p.end(), 0u);
        p[0] = 1;
        p[1] = i;
        p[i] = 0;
        gens.push_back(p);
        names.push_back(cycle_notation(p));
    }
    return permutation_group("A_" + std::to_string(n), n, gens, names);
}

GeneratedGroup make_affine(unsigned p, unsigned k) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("affine: p must be an odd prime");
    if (k == 0 || (p - 1) % k != 0) throw std::invalid_argument("affine: k must divide p-1");
    const unsigned h = mod_pow(primitive_root(p), (p - 1) / k, p);
    std::vector<unsigned> powers(k);
    for (unsigned j = 0; j < k; ++j) powers[j] = mod_pow(h, j, p);
    const Code P = p, K = k;
    // Index j*p + r is the map x -> h^j x + r; products apply the left factor first.
    auto compose = [P, K, powers](Code x, Code y) {
        Code j1 = x / P, r1 = x % P, j2 = y / P, r2 = y % P;
        Code r = (powers[j2] * r1 + r2) % P;
        return ((j1 + j2) % K) * P + r;
    };
    auto invert = [P, K, powers](Code x) {
        Code j = x / P, r = x % P;
        Code jinv = (K - j) % K;
        return jinv * P + (P - powers[jinv] * r % P) % P;
    };
    std::vector<Code> codes(static_cast<std::size_t>(p) * k);
    std::iota(codes.begin(), codes.end(), Code{0});
    std::vector<std::string> labels;
    for (unsigned j = 0; j < k; ++j)
        for (unsigned r = 0; r < p; ++r)
            labels.push_back("x->" + std::to_string(powers[j]) + "x+" + std::to_string(r));
    GeneratedGroup out;
    out.name = "Z_" + std::to_string(p) + "xZ_" + std::to_string(k);
    out.group = FiniteGroup::from_codes(std::move(codes), compose, invert, std::move(labels));
    if (k == 1) {
        out.gens = GeneratorSet{{1}, {"t"}, false};
    } else {
        out.gens = GeneratorSet{{1, p}, {"t", "m"}, false};
    }
    return out;
}

GeneratedGroup make_sl2(unsigned p, const GroupCaps& caps) { return special_linear(p, false, caps); }

GeneratedGroup make_psl2(unsigned p, const GroupCaps& caps) { return special_linear(p, true, caps); }

GeneratedGroup make_direct_product(const GeneratedGroup& a, const GeneratedGroup& b) {
    const auto& A = a.group;
    const auto& B = b.group;
    if (!A.has_table() || !B.has_table())
        throw CapExceeded("direct product: factors must be table-backed");
    const std::size_t na = A.order(), nb = B.order();
    if (na * nb > FiniteGroup::kTableLimit * 8)
        throw CapExceeded("direct product: order exceeds cap");
    std::vector<std::vector<Elem>> table(na * nb, std::vector<Elem>(na * nb));
    for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y)
            table[x][y] = static_cast<Elem>(
                A.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb)) * nb +
                B.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb)));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < na * nb; ++x)
        labels.push_back("(" + A.label(static_cast<Elem>(x / nb)) + "," +
                         B.label(static_cast<Elem>(x % nb)) + ")");
    GeneratedGroup out;
    out.name = a.name + "x" + b.name;
    out.group = FiniteGroup::from_table(std::move(table), std::move(labels));
    for (std::size_t i = 0; i < a.gens.gens.size(); ++i) {
        if (a.gens.degenerate) break;
        out.gens.gens.push_back(static_cast<Elem>(a.gens.gens[i] * nb));
        out.gens.names.push_back(a.gens.names.at(i) + "_1");
    }
    for (std::size_t i = 0; i < b.gens.gens.size(); ++i) {
        if (b.gens.degenerate) break;
        out.gens.gens.push_back(b.gens.gens[i]);
        out.gens.names.push_back(b.gens.names.at(i) + "_2");
    }
    if (out.gens.gens.empty()) out.gens = GeneratorSet{{0}, {"e"}, true};
    return out;
}

namespace {
constexpr std::array<std::pair<std::string_view, Family>, 9> kFamilyNames{{
    {"cyclic", Family::cyclic},
    {"dihedral", Family::dihedral},
    {"elementary_abelian", Family::elementary_abelian},
    {"affine", Family::affine},
    {"dihedral_p2", Family::dihedral_p2},
    {"symmetric", Family::symmetric},
    {"alternating", Family::alternating},
    {"sl2", Family::sl2},
    {"psl2", Family::psl2},
}};
}  // namespace

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& [n, f] : kFamilyNames)
        if (n == name) return f;
    return std::nullopt;
}

std::string_view family_name(Family f) {
    for (const auto& [n, fam] : kFamilyNames)
        if (fam == f) return n;
    return "unknown";
}

void validate_family_params(Family f, const FamilyParams& q) {
    auto odd_prime = [](unsigned p) { return p > 2 && is_prime(p); };
    switch (f) {
        case Family::cyclic:
            if (q.n < 1) throw std::invalid_argument("cyclic: --n must be >= 1");
            return;
        case Family::dihedral:
            if (q.n < 3) throw std::invalid_argument("dihedral: --n must be >= 3");
            return;
        case Family::elementary_abelian:
            if (!is_prime(q.p)) throw std::invalid_argument("elementary_abelian: --p must be prime");
            if (q.m < 1) throw std::invalid_argument("elementary_abelian: --m must be >= 1");
            return;
        case Family::affine:
            if (!odd_prime(q.p)) throw std::invalid_argument("affine: --p must be an odd prime");
            if (q.k < 1 || (q.p - 1) % q.k != 0)
                throw std::invalid_argument("affine: --k must divide p-1");
            return;
        case Family::dihedral_p2:
        case Family::sl2:
        case Family::psl2:
            if (!odd_prime(q.p))
                throw std::invalid_argument(std::string(family_name(f)) + ": --p must be an odd prime");
            return;
        case Family::symmetric:
            if (q.n < 2) throw std::invalid_argument("symmetric: --n must be >= 2");
            return;
        case Family::alternating:
            if (q.n < 3) throw std::invalid_argument("alternating: --n must be >= 3");
            return;
    }
    throw std::invalid_argument("unknown family");
}

GeneratedGroup build_family(Family f, const FamilyParams& q, const GroupCaps& caps) {
    validate_family_params(f, q);
    switch (f) {
        case Family::cyclic: return make_cyclic(q.n);
        case Family::dihedral: return make_dihedral(q.n, q.dihedral_gens);
        case Family::elementary_abelian: return make_elementary_abelian(q.p, q.m, caps);
        case Family::affine: return make_affine(q.p, q.k);
        case Family::dihedral_p2: return make_dihedral(q.p * q.p, q.dihedral_gens);
        case Family::symmetric: return make_symmetric(q.n, q.symmetric_gens, caps);
        case Family::alternating: return make_alternating(q.n, caps);
        case Family::sl2: return make_sl2(q.p, caps);
        case Family::psl2: return make_psl2(q.p, caps);
    }
    throw std::invalid_argument("unknown family");
}

bool is_associative(const FiniteGroup& g, std::mt19937_64& rng, std::size_t samples) {
    const auto n = static_cast<Elem>(g.order());
    if (n <= 256) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                Elem ab = g.mul(a, b);
                for (Elem c = 0; c < n; ++c)
                    if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
            }
        return true;
    }
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        Elem a = pick(rng), b = pick(rng), c = pick(rng);
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    }
    return true;
}

bool satisfies_unit_and_inverse_laws(const FiniteGroup& g) {
    const auto n = static_cast<Elem>(g.order());
    for (Elem x = 0; x < n; ++x) {
        if (g.mul(0, x) != x || g.mul(x, 0) != x) return false;
        if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) return false;
    }
    return true;
}

bool generates(const FiniteGroup& g, const GeneratorSet& gens) {
    std::vector<bool> seen(g.order(), false);
    std::deque<Elem> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        Elem x = queue.front();
        queue.pop_front();
        for (Elem a : gens.gens) {
            Elem y = g.mul(x, a);
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                queue.push_back(y);
            }
        }
    }
    return count == g.order();
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& elements) {
    if (elements.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (Elem e : elements) {
        if (e >= g.order()) return false;
        in[e] = true;
    }
    for (Elem a : elements) {
        if (!in[g.inv(a)]) return false;
        for (Elem b : elements)
            if (!in[g.mul(a, b)]) return false;
    }
    return true;
}

nlohmann::json group_to_json(const GeneratedGroup& g) {
    const auto& G = g.group;
    if (!G.has_table()) throw CapExceeded("group JSON: only table-backed groups are serialized");
    const auto n = static_cast<Elem>(G.order());
    nlohmann::json table = nlohmann::json::array();
    nlohmann::json labels = nlohmann::json::array();
    for (Elem a = 0; a < n; ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (Elem b = 0; b < n; ++b) row.push_back(G.mul(a, b));
        table.push_back(std::move(row));
        labels.push_back(G.label(a));
    }
    return nlohmann::json{{"order", n}, {"mul_table", table}, {"gens", g.gens.gens}, {"labels", labels}};
}

GeneratedGroup group_from_json(const nlohmann::json& j) {
    const auto n = j.at("order").get<std::size_t>();
    auto table = j.at("mul_table").get<std::vector<std::vector<Elem>>>();
    if (table.size() != n) throw std::invalid_argument("group JSON: order does not match table");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    GeneratedGroup out;
    out.name = j.value("name", std::string("group"));
    out.group = FiniteGroup::from_table(std::move(table), std::move(labels));
    out.gens.gens = j.at("gens").get<std::vector<Elem>>();
    for (Elem e : out.gens.gens) {
        if (e >= n) throw std::invalid_argument("group JSON: generator out of range");
        out.gens.names.push_back(out.group.label(e));
    }
    std::mt19937_64 rng(0);
    if (!satisfies_unit_and_inverse_laws(out.group) || !is_associative(out.group, rng))
        throw std::invalid_argument("group JSON: table does not define a group");
    if (out.gens.gens.empty() || !generates(out.group, out.gens))
        throw std::invalid_argument("group JSON: gens do not generate");
    out.gens.degenerate = n == 1;
    return out;
}

}  // namespace cerny

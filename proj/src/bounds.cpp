#include "cerny/bounds.hpp"

#include <stdexcept>

#include "cerny/cayley.hpp"

namespace cerny {

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("totient: n must be positive");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

BigInt partition_count(unsigned n) {
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        BigInt sum = 0;
        for (unsigned k = 1;; ++k) {
            const unsigned long g1 = static_cast<unsigned long>(k) * (3 * k - 1) / 2;
            if (g1 > i) break;
            const unsigned long g2 = g1 + k;
            const bool plus = k % 2 == 1;
            BigInt term = p[i - g1];
            if (g2 <= i) term += p[i - g2];
            if (plus)
                sum += term;
            else
                sum -= term;
        }
        p[i] = sum;
    }
    return p[n];
}

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigInt cerny_bound(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("cerny bound: n must be >= 2");
    BigInt b(static_cast<unsigned long>(n - 1));
    return b * b;
}

BigInt rystsov_bound(std::uint64_t n, std::uint64_t diam) {
    if (n < 2) throw std::invalid_argument("rystsov bound: n must be >= 2");
    if (diam > n - 1) throw std::invalid_argument("rystsov bound: diam must be <= n-1");
    return 1 + BigInt(static_cast<unsigned long>(n - 1 + diam)) * static_cast<unsigned long>(n - 2);
}

BigInt main_bound(std::uint64_t n, std::uint64_t m, std::uint64_t diam) {
    if (n < 2) throw std::invalid_argument("main bound: n must be >= 2");
    if (diam > n - 1) throw std::invalid_argument("main bound: diam must be <= n-1");
    if (m < 1 || m > n - 1) throw std::invalid_argument("main bound: m must lie in [1, n-1]");
    return 1 + BigInt(static_cast<unsigned long>(n - m + diam)) * static_cast<unsigned long>(n - 2);
}

MLower m_lower(Family family, const FamilyParams& q) {
    validate_family_params(family, q);
    auto phi = [](std::uint64_t x) { return BigInt(static_cast<unsigned long>(totient(x))); };
    MLower out;
    switch (family) {
        case Family::cyclic:
            out.value = phi(q.n);
            out.note = "totient of the order";
            break;
        case Family::dihedral:
            out.value = phi(q.n);
            out.note = "totient of the rotation order; asserted exact, only the lower bound is proved";
            break;
        case Family::elementary_abelian:
            out.value = q.p - 1;
            out.note = "every nontrivial irreducible has degree p-1";
            break;
        case Family::affine:
            out.value = q.p - 1;
            out.note = "largest constituent of the regular representation has degree p-1";
            break;
        case Family::dihedral_p2:
            out.value = phi(static_cast<std::uint64_t>(q.p) * q.p);
            out.note = "largest constituent is Q(w_{p^2}) of degree phi(p^2)";
            break;
        case Family::symmetric: {
            BigInt quotient = factorial(q.n) / partition_count(q.n);
            mpz_sqrt(out.value.get_mpz_t(), quotient.get_mpz_t());
            out.exactness = Exactness::lower_bound;
            out.note = "floor of sqrt(n!/p_n)";
            break;
        }
        case Family::alternating: {
            FamilyParams sym = q;
            const BigInt ls = m_lower(Family::symmetric, sym).value;
            out.value = (ls + 1) / 2;
            out.exactness = Exactness::lower_bound;
            out.note = "half the symmetric-group bound, rounded up (index-two subgroup)";
            break;
        }
        case Family::sl2: {
            const BigInt a = BigInt(q.p + 1) * phi(q.p - 1) / 2;
            const BigInt b = BigInt(q.p - 1) * phi(q.p + 1) / 2;
            out.value = a > b ? a : b;
            out.exactness = Exactness::lower_bound;
            out.note = "character degree times real cyclotomic field degree; Schur index dropped";
            break;
        }
        case Family::psl2: {
            const BigInt a = BigInt((q.p + 1) / 2) * phi((q.p - 1) / 2);
            const BigInt b = BigInt((q.p - 1) / 2) * phi((q.p + 1) / 2);
            out.value = a > b ? a : b;
            out.exactness = Exactness::lower_bound;
            out.note = "character degree times cyclotomic field degree; Schur index dropped";
            break;
        }
    }
    return out;
}

bool certify_cerny_graph(Family family, const FamilyParams& params, std::uint64_t diam) {
    return BigInt(static_cast<unsigned long>(diam)) <= m_lower(family, params).value;
}

std::optional<std::uint64_t> predicted_diameter_cap(Family family, const FamilyParams& q) {
    validate_family_params(family, q);
    auto dihedral_cap = [&](std::uint64_t n) -> std::uint64_t {
        return q.dihedral_gens == DihedralGens::rotation_reflection ? (n + 2) / 2 : n;
    };
    switch (family) {
        case Family::cyclic: return q.n - 1;
        case Family::dihedral: return dihedral_cap(q.n);
        case Family::dihedral_p2: return dihedral_cap(static_cast<std::uint64_t>(q.p) * q.p);
        case Family::elementary_abelian: return static_cast<std::uint64_t>(q.m) * (q.p - 1);
        case Family::affine: return q.k == 1 ? q.p - 1 : q.p + q.k - 2;
        case Family::symmetric: {
            const std::uint64_t n = q.n;
            if (q.symmetric_gens == SymmetricGens::coxeter) return n * (n - 1) / 2;
            return (n + 1) * n * (n - 1) / 2;
        }
        case Family::sl2:
        case Family::psl2: return 3ull * q.p - 2;
        case Family::alternating: return std::nullopt;
    }
    return std::nullopt;
}

BoundReport make_bound_report(Family family, const FamilyParams& params, const GroupCaps& caps) {
    const GeneratedGroup gg = build_family(family, params, caps);
    BoundReport r;
    r.family = std::string(family_name(family));
    r.n = gg.group.order();
    if (r.n < 2) throw std::invalid_argument("bound report: group order must be >= 2");
    CayleyGraph cg(gg);
    r.diam = diameter(cg);
    r.m = m_lower(family, params);
    r.diam_cap = predicted_diameter_cap(family, params);
    r.cerny = cerny_bound(r.n);
    r.rystsov = rystsov_bound(r.n, r.diam);
    BigInt m = r.m.value;
    if (m < 1) m = 1;
    if (m > static_cast<unsigned long>(r.n - 1)) m = static_cast<unsigned long>(r.n - 1);
    r.main = main_bound(r.n, m.get_ui(), r.diam);
    r.is_cerny_graph_certified = BigInt(static_cast<unsigned long>(r.diam)) <= r.m.value;
    return r;
}

nlohmann::json bound_report_to_json(const BoundReport& r) {
    nlohmann::json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["diam"] = r.diam;
    j["diam_cap"] = r.diam_cap ? nlohmann::json(*r.diam_cap) : nlohmann::json(nullptr);
    j["m_lower"] = r.m.value.get_str();
    j["m_exact"] = r.m.exactness == Exactness::exact;
    j["m_note"] = r.m.note;
    j["cerny"] = r.cerny.get_str();
    j["rystsov"] = r.rystsov.get_str();
    j["main"] = r.main.get_str();
    j["cerny_graph_certified"] = r.is_cerny_graph_certified;
    if (r.exact_reset) j["exact_reset"] = *r.exact_reset;
    return j;
}

bool squarefree_totient_dominates(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("square-free check: n must be positive");
    std::vector<std::uint64_t> primes;
    std::uint64_t x = n;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        x /= p;
        if (x % p == 0) return true;
        primes.push_back(p);
    }
    if (x > 1) primes.push_back(x);
    if (n % 2 == 0 && primes.size() < 3) return true;
    std::uint64_t product = 1, sum = 0;
    for (auto p : primes) {
        product *= p - 1;
        sum += p - 1;
    }
    return product >= sum;
}

}  // namespace cerny

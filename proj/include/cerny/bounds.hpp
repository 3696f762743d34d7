#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cerny/group.hpp"
#include "cerny/qlinalg.hpp"

namespace cerny {

std::uint64_t totient(std::uint64_t n);
/// Number of partitions of n (Euler's pentagonal recurrence); p(0) = 1.
BigInt partition_count(unsigned n);
BigInt factorial(unsigned n);

/// (n-1)²; requires n >= 2.
BigInt cerny_bound(std::uint64_t n);
/// 1 + (n-1+diam)(n-2); requires n >= 2 and diam <= n-1.
BigInt rystsov_bound(std::uint64_t n, std::uint64_t diam);
/// 1 + (n-m+diam)(n-2); requires n >= 2, diam <= n-1 and 1 <= m <= n-1.
BigInt main_bound(std::uint64_t n, std::uint64_t m_lower, std::uint64_t diam);

enum class Exactness { exact, lower_bound };

struct MLower {
    BigInt value;
    Exactness exactness = Exactness::exact;
    /// Short reason, e.g. "totient of the order".
    std::string note;
};

/// Lower bound on the largest degree of a rational irreducible
/// representation, per family. Throws std::invalid_argument on bad params.
MLower m_lower(Family family, const FamilyParams& params);

/// diam <= m_lower(family, params)
bool certify_cerny_graph(Family family, const FamilyParams& params, std::uint64_t diam);

/// Closed-form upper bound on the diameter of the canonical generating set,
/// where one is known.
std::optional<std::uint64_t> predicted_diameter_cap(Family family, const FamilyParams& params);

struct BoundReport {
    std::string family;
    std::uint64_t n = 0;
    std::uint64_t diam = 0;
    MLower m;
    std::optional<std::uint64_t> diam_cap;
    BigInt cerny;
    BigInt rystsov;
    BigInt main;
    bool is_cerny_graph_certified = false;
    std::optional<std::uint64_t> exact_reset;
};

/// Builds the group, measures the diameter by breadth-first search and
/// fills in the formula bounds. m_lower is clamped into [1, n-1] for the
/// main bound when the family formula overshoots tiny orders.
BoundReport make_bound_report(Family family, const FamilyParams& params, const GroupCaps& caps = {});
nlohmann::json bound_report_to_json(const BoundReport& r);

/// (p_1-1)···(p_k-1) >= (p_1-1)+···+(p_k-1) for square-free n = p_1···p_k
/// with n odd or k >= 3. Returns true for n outside that class.
bool squarefree_totient_dominates(std::uint64_t n);

}  // namespace cerny

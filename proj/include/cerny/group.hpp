#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cerny {

/// Index of a group element. The identity is always 0.
using Elem = std::uint32_t;

/// Raised when a construction would exceed a configured order cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Explicit finite group on the indices 0..order-1.
///
/// Small groups (order <= kTableLimit) keep a full multiplication table.
/// Larger groups keep a compact code per element and multiply by composing
/// codes and looking the result up. Instances are immutable; copies share
/// storage.
class FiniteGroup {
public:
    static constexpr std::size_t kTableLimit = 512;

    using Code = std::uint64_t;
    using ComposeFn = std::function<Code(Code, Code)>;
    using InvertFn = std::function<Code(Code)>;

    FiniteGroup() = default;

    /// Builds a group from an explicit element list. `codes[0]` must encode
    /// the identity and the list must be closed under `compose`.
    static FiniteGroup from_codes(std::vector<Code> codes, ComposeFn compose, InvertFn invert,
                                  std::vector<std::string> labels = {});

    /// Builds a group from a full multiplication table (row g, column h holds g*h).
    static FiniteGroup from_table(std::vector<std::vector<Elem>> table,
                                  std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return order_; }
    Elem identity() const noexcept { return 0; }
    Elem mul(Elem g, Elem h) const;
    Elem inv(Elem g) const { return inv_->at(g); }
    bool has_table() const noexcept { return table_ != nullptr; }

    /// Element name; falls back to the decimal index.
    std::string label(Elem g) const;
    bool has_labels() const noexcept { return labels_ && !labels_->empty(); }

    /// Element order of g.
    std::size_t element_order(Elem g) const;

private:
    std::size_t order_ = 0;
    std::shared_ptr<const std::vector<Elem>> table_;
    std::shared_ptr<const std::vector<Elem>> inv_;
    std::shared_ptr<const std::vector<std::string>> labels_;

    struct Computed;
    std::shared_ptr<const Computed> computed_;
};

/// A generating set Δ for a group, as a list of element indices.
struct GeneratorSet {
    std::vector<Elem> gens;
    std::vector<std::string> names;
    /// Set when the group is trivial and the only "generator" is the identity.
    bool degenerate = false;
};

struct GeneratedGroup {
    std::string name;
    FiniteGroup group;
    GeneratorSet gens;
};

/// Order caps for constructors; defaults are desk scale.
struct GroupCaps {
    std::size_t max_abelian_order = std::size_t{1} << 20;
    unsigned max_symmetric_degree = 8;
    unsigned max_sl2_prime = 7;
};

enum class DihedralGens { rotation_reflection, two_reflections };
enum class SymmetricGens { coxeter, transposition_cycle };

bool is_prime(std::uint64_t n);

GeneratedGroup make_cyclic(unsigned n);
GeneratedGroup make_elementary_abelian(unsigned p, unsigned m, const GroupCaps& caps = {});
GeneratedGroup make_dihedral(unsigned n, DihedralGens kind);
GeneratedGroup make_symmetric(unsigned n, SymmetricGens kind = SymmetricGens::coxeter,
                              const GroupCaps& caps = {});
GeneratedGroup make_alternating(unsigned n, const GroupCaps& caps = {});
GeneratedGroup make_affine(unsigned p, unsigned k);
GeneratedGroup make_sl2(unsigned p, const GroupCaps& caps = {});
GeneratedGroup make_psl2(unsigned p, const GroupCaps& caps = {});
/// G x H with generators (g,1) and (1,h). Both factors must be table-backed.
GeneratedGroup make_direct_product(const GeneratedGroup& a, const GeneratedGroup& b);

/// Group families with closed-form bound support.
enum class Family {
    cyclic,
    dihedral,
    elementary_abelian,
    affine,
    dihedral_p2,
    symmetric,
    alternating,
    sl2,
    psl2,
};

struct FamilyParams {
    unsigned n = 0;
    unsigned p = 0;
    unsigned m = 0;
    unsigned k = 0;
    DihedralGens dihedral_gens = DihedralGens::rotation_reflection;
    SymmetricGens symmetric_gens = SymmetricGens::coxeter;
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);
/// Validates params for the family; throws std::invalid_argument.
void validate_family_params(Family f, const FamilyParams& params);
GeneratedGroup build_family(Family f, const FamilyParams& params, const GroupCaps& caps = {});

/// Exhaustive for order <= 256, otherwise `samples` random triples.
bool is_associative(const FiniteGroup& g, std::mt19937_64& rng, std::size_t samples = 20000);
/// Identity and inverse laws, checked for every element.
bool satisfies_unit_and_inverse_laws(const FiniteGroup& g);
/// Closure of the generators under multiplication is the whole group.
bool generates(const FiniteGroup& g, const GeneratorSet& gens);
/// H is nonempty and closed under mul and inv.
bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& elements);

/// {"order": n, "mul_table": [[...],...], "gens": [...], "labels": [...]}
nlohmann::json group_to_json(const GeneratedGroup& g);
GeneratedGroup group_from_json(const nlohmann::json& j);

}  // namespace cerny

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cerny/cayley.hpp"
#include "cerny/group.hpp"

using namespace cerny;

namespace {

using Perm = std::vector<int>;

// Right action: apply a, then b.
Perm compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
}

std::size_t closure_size(const std::vector<Perm>& gens) {
    std::set<Perm> seen;
    Perm id(gens[0].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    std::vector<Perm> stack{id};
    seen.insert(id);
    while (!stack.empty()) {
        Perm p = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            Perm q = compose(p, g);
            if (seen.insert(q).second) stack.push_back(q);
        }
    }
    return seen.size();
}

void check_axioms(const GeneratedGroup& gg) {
    std::mt19937_64 rng(5);
    CHECK(satisfies_unit_and_inverse_laws(gg.group));
    CHECK(is_associative(gg.group, rng));
    CHECK(generates(gg.group, gg.gens));
}

Elem power(const FiniteGroup& g, Elem x, unsigned k) {
    Elem r = 0;
    for (unsigned i = 0; i < k; ++i) r = g.mul(r, x);
    return r;
}

}  // namespace

TEST_CASE("cyclic groups") {
    auto z1 = make_cyclic(1);
    CHECK(z1.group.order() == 1);
    CHECK(z1.gens.gens == std::vector<Elem>{0});
    CHECK(z1.gens.degenerate);

    auto z5 = make_cyclic(5);
    CHECK(z5.group.mul(2, 4) == 1);
    CHECK(z5.gens.gens == std::vector<Elem>{1});
    CHECK_FALSE(z5.gens.degenerate);
    CHECK(make_cyclic(6).group.inv(2) == 4);
}

TEST_CASE("elementary abelian groups") {
    auto v4 = make_elementary_abelian(2, 2);
    CHECK(v4.group.order() == 4);
    for (Elem g = 1; g < 4; ++g) CHECK(v4.group.inv(g) == g);

    auto z33 = make_elementary_abelian(3, 2);
    CHECK(z33.group.order() == 9);
    CHECK(z33.gens.gens.size() == 2);

    auto a = make_elementary_abelian(5, 1), b = make_cyclic(5);
    for (Elem x = 0; x < 5; ++x)
        for (Elem y = 0; y < 5; ++y) CHECK(a.group.mul(x, y) == b.group.mul(x, y));

    CHECK_THROWS_AS(make_elementary_abelian(4, 2), std::invalid_argument);
    GroupCaps caps;
    caps.max_abelian_order = 100;
    CHECK_THROWS_AS(make_elementary_abelian(3, 5, caps), CapExceeded);
}

TEST_CASE("dihedral groups") {
    auto d3 = make_dihedral(3, DihedralGens::rotation_reflection);
    const auto& g = d3.group;
    CHECK(g.order() == 6);
    const Elem r = d3.gens.gens[0], s = d3.gens.gens[1];
    CHECK(power(g, r, 3) == 0);
    CHECK(g.mul(s, s) == 0);
    CHECK(g.mul(g.mul(s, r), s) == g.inv(r));

    auto d9 = make_dihedral(9, DihedralGens::two_reflections);
    const Elem a = d9.gens.gens[0], b = d9.gens.gens[1];
    CHECK(d9.group.element_order(a) == 2);
    CHECK(d9.group.element_order(b) == 2);
    CHECK(d9.group.element_order(d9.group.mul(a, b)) == 9);

    auto d4 = make_dihedral(4, DihedralGens::rotation_reflection);
    CHECK(d4.group.order() == 8);
    std::size_t order4 = 0;
    for (Elem x = 0; x < 8; ++x) order4 += d4.group.element_order(x) == 4;
    CHECK(order4 == 2);
}

TEST_CASE("symmetric and alternating groups") {
    auto s3 = make_symmetric(3, SymmetricGens::coxeter);
    CHECK(s3.group.order() == 6);
    CHECK(make_alternating(4).group.order() == 12);

    auto s4 = make_symmetric(4, SymmetricGens::transposition_cycle);
    CHECK(s4.group.order() == 24);
    // Oracle: closure of (1 2) and (1 2 3 4) as explicit permutations.
    CHECK(closure_size({{1, 0, 2, 3}, {1, 2, 3, 0}}) == 24);
    CHECK(generates(s4.group, s4.gens));

    // A_n generators are 3-cycles (1 2 i).
    auto a5 = make_alternating(5);
    CHECK(a5.group.order() == 60);
    CHECK(a5.gens.gens.size() == 3);
    for (Elem x : a5.gens.gens) CHECK(a5.group.element_order(x) == 3);

    CHECK_THROWS_AS(make_symmetric(9), CapExceeded);
}

TEST_CASE("affine groups") {
    CHECK(make_affine(5, 2).group.order() == 10);
    auto a73 = make_affine(7, 3);
    CHECK(a73.group.order() == 21);
    bool abelian = true;
    for (Elem x = 0; x < 21; ++x)
        for (Elem y = 0; y < 21; ++y) abelian = abelian && a73.group.mul(x, y) == a73.group.mul(y, x);
    CHECK_FALSE(abelian);
    CHECK(make_affine(3, 2).group.order() == 6);
    CHECK_THROWS_AS(make_affine(7, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_affine(9, 2), std::invalid_argument);
}

TEST_CASE("affine(p,2) is dihedral via t -> r, m -> s") {
    for (unsigned p : {3u, 5u, 7u, 11u}) {
        auto aff = make_affine(p, 2);
        auto dih = make_dihedral(p, DihedralGens::rotation_reflection);
        CayleyGraph cd(dih);
        // Map each dihedral element through a shortest word in (r, s).
        std::vector<Elem> phi(2 * p);
        std::set<Elem> image;
        for (Elem x = 0; x < 2 * p; ++x) {
            Elem y = 0;
            for (std::size_t i : shortest_word(cd, x)) y = aff.group.mul(y, aff.gens.gens[i]);
            phi[x] = y;
            image.insert(y);
        }
        CHECK(image.size() == 2 * p);
        bool hom = true;
        for (Elem x = 0; x < 2 * p; ++x)
            for (Elem y = 0; y < 2 * p; ++y)
                hom = hom && phi[dih.group.mul(x, y)] == aff.group.mul(phi[x], phi[y]);
        CHECK(hom);
    }
}

TEST_CASE("special linear groups") {
    CHECK(make_sl2(3).group.order() == 24);
    CHECK(make_psl2(3).group.order() == 12);
    auto sl5 = make_sl2(5);
    CHECK(sl5.group.order() == 120);
    CHECK(sl5.group.element_order(sl5.gens.gens[0]) == 5);
    CHECK(make_psl2(5).group.order() == 60);
    CHECK(make_sl2(7).group.order() == 336);
    CHECK_THROWS(make_sl2(11));
    CHECK_THROWS(make_sl2(4));
}

TEST_CASE("every constructor satisfies the group axioms") {
    check_axioms(make_cyclic(7));
    check_axioms(make_elementary_abelian(3, 3));
    check_axioms(make_dihedral(6, DihedralGens::rotation_reflection));
    check_axioms(make_dihedral(7, DihedralGens::two_reflections));
    check_axioms(make_symmetric(5, SymmetricGens::coxeter));
    check_axioms(make_symmetric(5, SymmetricGens::transposition_cycle));
    check_axioms(make_alternating(5));
    check_axioms(make_affine(7, 6));
    check_axioms(make_sl2(5));
    check_axioms(make_psl2(7));
    check_axioms(make_sl2(7));
    check_axioms(make_direct_product(make_cyclic(3), make_dihedral(3, DihedralGens::rotation_reflection)));
}

TEST_CASE("families") {
    CHECK(parse_family("sl2") == Family::sl2);
    CHECK_FALSE(parse_family("trivial").has_value());
    for (Family f : {Family::cyclic, Family::dihedral, Family::elementary_abelian, Family::affine, Family::dihedral_p2,
                     Family::symmetric, Family::alternating, Family::sl2, Family::psl2})
        CHECK(parse_family(family_name(f)) == f);
    FamilyParams q;
    q.p = 3;
    CHECK(build_family(Family::dihedral_p2, q).group.order() == 18);
    CHECK_THROWS_AS(build_family(Family::affine, q), std::invalid_argument);
    q.p = 4;
    CHECK_THROWS_AS(validate_family_params(Family::sl2, q), std::invalid_argument);
}

TEST_CASE("subgroup check") {
    auto d4 = make_dihedral(4, DihedralGens::rotation_reflection);
    CHECK(is_subgroup(d4.group, {0, 1, 2, 3}));
    CHECK_FALSE(is_subgroup(d4.group, {0, 1}));
    CHECK_FALSE(is_subgroup(d4.group, {}));
}

TEST_CASE("JSON round trip") {
    auto g = make_dihedral(5, DihedralGens::two_reflections);
    auto j = group_to_json(g);
    CHECK(j["order"] == 10);
    auto back = group_from_json(j);
    CHECK(back.group.order() == 10);
    CHECK(back.gens.gens == g.gens.gens);
    for (Elem x = 0; x < 10; ++x)
        for (Elem y = 0; y < 10; ++y) CHECK(back.group.mul(x, y) == g.group.mul(x, y));
    CHECK(group_to_json(back) == j);
    j["mul_table"][0][0] = 3;
    CHECK_THROWS(group_from_json(j));
}

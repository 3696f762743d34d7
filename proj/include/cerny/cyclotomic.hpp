#pragma once

#include <cstddef>
#include <vector>

#include "cerny/qlinalg.hpp"

namespace cerny {

/// Integer polynomial, coefficients from degree 0 upwards.
using IntPoly = std::vector<BigInt>;

/// Φ_n, obtained by dividing x^n - 1 by Φ_d for every proper divisor d.
IntPoly cyclotomic_polynomial(unsigned n);

/// Q(ω_n) as a Q-vector space in the power basis 1, ω, ..., ω^{φ(n)-1}.
struct CyclotomicModule {
    unsigned n = 0;
    std::size_t dim = 0;
    IntPoly phi;
    /// Multiplication by ω_n: the companion matrix of Φ_n.
    QMatrix rotation;
    /// Complex conjugation: column m holds x^{n-m} reduced modulo Φ_n.
    QMatrix conjugation;
};

/// Requires n >= 3.
CyclotomicModule cyclotomic_module(unsigned n);

/// Power-basis coordinates of x^e modulo Φ_n.
QVector reduce_power(unsigned long e, const IntPoly& phi);

struct AffineDecompositionReport {
    bool holds = false;
    /// The trace of the explicit action on Q(ω_p) agrees with the
    /// fixed-point formula for ζ on every element.
    bool traces_agree = false;
    /// The explicit action is multiplicative on all products with a generator.
    bool is_representation = false;
    std::size_t group_order = 0;
    /// θ(e) + k·ζ(e)
    long degree = 0;
};

/// Checks χ_reg = θ + k·ζ on every element of Z_p ⋊ K, |K| = k.
/// Requires p an odd prime, k | p-1 and p·k <= 350.
AffineDecompositionReport verify_affine_decomposition(unsigned p, unsigned k);

struct Dp2DecompositionReport {
    bool holds = false;
    /// R^{p²} = 1, C² = 1 and C·R·C = R^{-1} for both modules.
    bool relations_hold = false;
    /// χ_2 at the reflection s.
    Rational chi2_at_reflection;
    /// χ_1(r^k), χ_2(r^k) for k = 0 .. p²-1.
    std::vector<Rational> chi1_rotations;
    std::vector<Rational> chi2_rotations;
    /// τ(1) + α(1) + 2χ_1(1) + 2χ_2(1)
    long degree = 0;
};

/// Checks τ + α + 2χ_1 + 2χ_2 = χ_reg on D_{p²}. Requires p an odd prime and
/// 2p² <= 350.
Dp2DecompositionReport verify_dp2_decomposition(unsigned p);

}  // namespace cerny

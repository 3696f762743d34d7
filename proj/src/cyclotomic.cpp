#include "cerny/cyclotomic.hpp"

#include <stdexcept>

#include "cerny/group.hpp"

namespace cerny {

namespace {

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("polynomial division: degree too small");
    IntPoly q(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
        const BigInt c = num[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t j = 0; j < dd; ++j)
        if (num[j] != 0) throw std::logic_error("polynomial division: nonzero remainder");
    return q;
}

unsigned long mod_pow(unsigned long b, unsigned long e, unsigned long m) {
    unsigned long r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

IntPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic polynomial: n must be positive");
    IntPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(std::move(p), cyclotomic_polynomial(d));
    return p;
}

QVector reduce_power(unsigned long e, const IntPoly& phi) {
    const std::size_t d = phi.size() - 1;
    QVector v(d);
    if (d == 0) return v;
    v[0] = 1;
    for (unsigned long step = 0; step < e; ++step) {
        const Rational top = v[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) v[i] = v[i - 1];
        v[0] = 0;
        if (sgn(top) != 0)
            for (std::size_t i = 0; i < d; ++i) v[i] -= top * Rational(phi[i]);
    }
    return v;
}

CyclotomicModule cyclotomic_module(unsigned n) {
    if (n < 3) throw std::invalid_argument("cyclotomic module: n must be at least 3");
    CyclotomicModule m;
    m.n = n;
    m.phi = cyclotomic_polynomial(n);
    m.dim = m.phi.size() - 1;
    m.rotation = QMatrix(m.dim, m.dim);
    m.conjugation = QMatrix(m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        const QVector up = reduce_power(i + 1, m.phi);
        const QVector conj = reduce_power(n - i, m.phi);
        for (std::size_t j = 0; j < m.dim; ++j) {
            m.rotation(j, i) = up[j];
            m.conjugation(j, i) = conj[j];
        }
    }
    return m;
}

AffineDecompositionReport verify_affine_decomposition(unsigned p, unsigned k) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("affine decomposition: p must be an odd prime");
    if (k == 0 || (p - 1) % k != 0) throw std::invalid_argument("affine decomposition: k must divide p-1");
    if (static_cast<unsigned long>(p) * k > 350) throw std::invalid_argument("affine decomposition: p*k exceeds 350");

    // K = {s : s^k = 1}, the order-k subgroup of the units.
    std::vector<unsigned> K;
    for (unsigned s = 1; s < p; ++s)
        if (mod_pow(s, k, p) == 1) K.push_back(s);
    if (K.size() != k) throw std::logic_error("affine decomposition: wrong subgroup order");
    unsigned kgen = 1;
    for (unsigned s : K) {
        unsigned ord = 1;
        while (mod_pow(s, ord, p) != 1) ++ord;
        if (ord == k) {
            kgen = s;
            break;
        }
    }

    const std::size_t d = p - 1;
    // Action of x -> s x + r on Q(ω_p), sending ω^t to ω^{st+r}.
    auto action = [&](unsigned r, unsigned s) {
        QMatrix m(d, d);
        for (std::size_t t = 0; t < d; ++t) {
            const std::size_t e = (static_cast<std::size_t>(s) * t + r) % p;
            if (e < d) {
                m(e, t) = 1;
            } else {
                for (std::size_t i = 0; i < d; ++i) m(i, t) = -1;
            }
        }
        return m;
    };

    AffineDecompositionReport rep;
    rep.group_order = static_cast<std::size_t>(p) * k;
    rep.holds = true;
    rep.traces_agree = true;
    rep.is_representation = true;
    const QMatrix trans = action(1, 1), mult = action(0, kgen);
    for (unsigned s : K)
        for (unsigned r = 0; r < p; ++r) {
            const bool identity = s == 1 && r == 0;
            const long regular = identity ? static_cast<long>(rep.group_order) : 0;
            long theta = 0;
            for (unsigned x : K)
                if (x * s % p == x) ++theta;
            long fixed = 0;
            for (unsigned t = 0; t < p; ++t)
                if ((static_cast<unsigned long>(s) * t + r) % p == t) ++fixed;
            const long zeta = fixed - 1;
            const QMatrix m = action(r, s);
            if (m.trace() != zeta) rep.traces_agree = false;
            if (theta + static_cast<long>(k) * zeta != regular) rep.holds = false;
            if (identity) rep.degree = theta + static_cast<long>(k) * zeta;
            // g followed by a translation, and g followed by the K generator.
            if (!(action((r + 1) % p, s) == trans * m)) rep.is_representation = false;
            if (!(action(static_cast<unsigned>(static_cast<unsigned long>(kgen) * r % p),
                         static_cast<unsigned>(static_cast<unsigned long>(kgen) * s % p)) == mult * m))
                rep.is_representation = false;
        }
    rep.holds = rep.holds && rep.traces_agree && rep.is_representation;
    return rep;
}

Dp2DecompositionReport verify_dp2_decomposition(unsigned p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("dp2 decomposition: p must be an odd prime");
    if (2ul * p * p > 350) throw std::invalid_argument("dp2 decomposition: 2p^2 exceeds 350");
    const unsigned N = p * p;
    const CyclotomicModule m1 = cyclotomic_module(p), m2 = cyclotomic_module(N);

    Dp2DecompositionReport rep;
    auto relations = [N](const CyclotomicModule& m) {
        const QMatrix id = QMatrix::identity(m.dim);
        return m.rotation.power(N) == id && m.conjugation * m.conjugation == id &&
               m.conjugation * m.rotation * m.conjugation * m.rotation == id;
    };
    rep.relations_hold = relations(m1) && relations(m2);

    // trace(C·M) without forming the product.
    auto trace_after = [](const QMatrix& c, const QMatrix& m) {
        Rational t = 0;
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j)
                if (sgn(c(i, j)) != 0) t += c(i, j) * m(j, i);
        return t;
    };

    bool holds = true;
    QMatrix r1 = QMatrix::identity(m1.dim), r2 = QMatrix::identity(m2.dim);
    for (unsigned k = 0; k < N; ++k) {
        for (int f = 0; f < 2; ++f) {
            const Rational chi1 = f ? trace_after(m1.conjugation, r1) : r1.trace();
            const Rational chi2 = f ? trace_after(m2.conjugation, r2) : r2.trace();
            const long tau = 1, alpha = f ? -1 : 1;
            const Rational total = Rational(tau + alpha) + 2 * chi1 + 2 * chi2;
            const long regular = (f == 0 && k == 0) ? 2l * N : 0;
            if (total != regular) holds = false;
            if (f == 0) {
                rep.chi1_rotations.push_back(chi1);
                rep.chi2_rotations.push_back(chi2);
                if (k == 0) rep.degree = total.get_num().get_si();
            } else if (k == 0) {
                rep.chi2_at_reflection = chi2;
            }
        }
        r1 = m1.rotation * r1;
        r2 = m2.rotation * r2;
    }
    rep.holds = holds && rep.relations_hold && rep.chi2_at_reflection == 0;
    return rep;
}

}  // namespace cerny

#include <doctest.h>

#include <algorithm>
#include <random>

#include "cerny/qlinalg.hpp"
#include "cerny/rng.hpp"

using namespace cerny;

namespace {

QVector vec(std::initializer_list<long> xs) {
    QVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

QVector random_vector(std::mt19937_64& rng, std::size_t d) {
    QVector v(d);
    for (auto& x : v) {
        x = Rational(static_cast<long>(uniform_below(rng, 7)) - 3, 1 + static_cast<long>(uniform_below(rng, 3)));
        x.canonicalize();
    }
    return v;
}

// Rank and null space of the columns of m by plain Gauss-Jordan elimination.
struct Elim {
    std::size_t rank = 0;
    std::vector<QVector> kernel;
};

Elim eliminate(std::vector<QVector> cols) {
    const std::size_t k = cols.size(), d = cols.empty() ? 0 : cols[0].size();
    std::vector<QVector> a(d, QVector(k));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < d; ++r) a[r][c] = cols[c][r];
    std::vector<long> pivot_of_col(k, -1);
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < d; ++c) {
        std::size_t p = row;
        while (p < d && a[p][c] == 0) ++p;
        if (p == d) continue;
        std::swap(a[p], a[row]);
        const Rational lead = a[row][c];
        for (auto& x : a[row]) x /= lead;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == row || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t j = 0; j < k; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_of_col[c] = static_cast<long>(row++);
    }
    Elim e;
    e.rank = row;
    for (std::size_t free = 0; free < k; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        QVector v(k);
        v[free] = 1;
        for (std::size_t c = 0; c < k; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -a[pivot_of_col[c]][free];
        e.kernel.push_back(v);
    }
    return e;
}

}  // namespace

TEST_CASE("rationals are canonical and round-trip") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(to_string(parse_rational("-0")) == "0");
    CHECK(to_string(parse_rational("+3")) == "3");
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        Rational q(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 999));
        q.canonicalize();
        CHECK(parse_rational(to_string(q)) == q);
        CHECK(to_string(parse_rational(to_string(q))) == to_string(q));
        CHECK(q.get_den() > 0);
    }
    // No rounding on large intermediates.
    Rational big = 1;
    for (int i = 0; i < 40; ++i) big *= Rational(1, 3);
    big *= BigInt("12157665459056928801");
    CHECK(big == 1);
}

TEST_CASE("rref insertion") {
    QSubspace s(3);
    auto [s1, grew0] = rref_insert(s, zero_vector(3));
    CHECK_FALSE(grew0);
    CHECK(dim(s1) == 0);
    auto [s2, grew1] = rref_insert(s1, vec({0, 2, 4}));
    CHECK(grew1);
    CHECK(dim(s2) == 1);
    auto [s3, grew2] = rref_insert(s2, vec({0, -1, -2}));
    CHECK_FALSE(grew2);
    CHECK(s3.basis()[0] == vec({0, 1, 2}));
    CHECK(contains(s3, zero_vector(3)));
    CHECK_THROWS_AS(s3.insert(vec({1, 2})), std::invalid_argument);
}

TEST_CASE("rref form invariants and uniqueness") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 1 + uniform_below(rng, 8), k = uniform_below(rng, 6);
        std::vector<QVector> vs;
        for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vector(rng, d));
        QSubspace a = span(d, vs);
        // Same span, different order and scaling.
        std::vector<QVector> ws = vs;
        std::reverse(ws.begin(), ws.end());
        for (auto& w : ws)
            for (auto& x : w) x *= Rational(-5, 3);
        if (ws.size() >= 2)
            for (std::size_t c = 0; c < d; ++c) ws[0][c] += ws[1][c];
        QSubspace b = span(d, ws);
        CHECK(a == b);
        CHECK(a.dim() == eliminate(vs).rank);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const std::size_t p = a.pivots()[i];
            if (i > 0) CHECK(a.pivots()[i - 1] < p);
            CHECK(a.basis()[i][p] == 1);
            CHECK_FALSE(is_zero(a.basis()[i]));
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (j != i) CHECK(a.basis()[j][p] == 0);
        }
        for (const auto& v : vs) CHECK(a.contains(v));
    }
}

TEST_CASE("sum dimension via the intersection computed from a kernel") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 2 + uniform_below(rng, 6);
        std::vector<QVector> av, bv;
        for (std::size_t i = uniform_below(rng, d + 1); i > 0; --i) av.push_back(random_vector(rng, d));
        // Share some vectors so intersections are nontrivial.
        for (std::size_t i = uniform_below(rng, d + 1); i > 0; --i)
            bv.push_back(!av.empty() && uniform_below(rng, 2) ? av[uniform_below(rng, av.size())]
                                                             : random_vector(rng, d));
        QSubspace a = span(d, av), b = span(d, bv);
        // Columns [basis(A) | -basis(B)]; each kernel vector gives an element of A ∩ B.
        std::vector<QVector> cols = a.basis();
        for (auto v : b.basis()) {
            for (auto& x : v) x = -x;
            cols.push_back(v);
        }
        std::vector<QVector> meet;
        if (!cols.empty())
            for (const auto& k : eliminate(cols).kernel) {
                QVector x(d);
                for (std::size_t i = 0; i < a.dim(); ++i)
                    for (std::size_t c = 0; c < d; ++c) x[c] += k[i] * a.basis()[i][c];
                CHECK(a.contains(x));
                CHECK(b.contains(x));
                meet.push_back(x);
            }
        const std::size_t inter = span(d, meet).dim();
        CHECK(dim(sum(a, b)) == a.dim() + b.dim() - inter);
        CHECK(sum(a, a) == a);
        CHECK(sum(a, b).contains(a));
        CHECK(sum(a, b).contains(b));
    }
}

TEST_CASE("matrices") {
    QMatrix m(2, 2);
    m(0, 1) = 1;
    m(1, 0) = -1;
    CHECK(m.power(4) == QMatrix::identity(2));
    CHECK_FALSE(m.power(2) == QMatrix::identity(2));
    CHECK(m.trace() == 0);
    CHECK(m * vec({1, 2}) == vec({2, -1}));
    QMatrix h = QMatrix::identity(2);
    h *= Rational(1, 2);
    h += h;
    CHECK(h == QMatrix::identity(2));
    CHECK(dot(vec({1, 2, 3}), vec({4, 5, 6})) == 32);
    CHECK_THROWS_AS(m * vec({1, 2, 3}), std::invalid_argument);
    CHECK(constant_vector(3, Rational(2, 3))[2] == Rational(2, 3));
}

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cerny {

/// Exact rational; always canonical (reduced, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

std::string to_string(const Rational& q);
/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input or b = 0.
Rational parse_rational(std::string_view text);

using QVector = std::vector<Rational>;

QVector zero_vector(std::size_t dim);
QVector constant_vector(std::size_t dim, const Rational& value);
bool is_zero(const QVector& v);
Rational dot(const QVector& a, const QVector& b);

/// Dense matrix over Q, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVector operator*(const QVector& v) const;
    QMatrix operator*(const QMatrix& m) const;
    QMatrix& operator+=(const QMatrix& m);
    QMatrix& operator*=(const Rational& s);
    Rational trace() const;
    QMatrix power(std::size_t k) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Subspace of Q^d kept as a reduced-row-echelon basis.
///
/// Rows are nonzero, pivots strictly increase, each pivot entry is 1 and
/// every other entry of a pivot column is 0. Equal spans therefore have
/// identical bases.
class QSubspace {
public:
    explicit QSubspace(std::size_t ambient = 0) : ambient_(ambient) {}

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<QVector>& basis() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Adds v to the span; returns whether the dimension grew.
    bool insert(const QVector& v);
    bool contains(const QVector& v) const;
    /// v minus its reduction against the basis (zero iff v is in the span).
    QVector residual(QVector v) const;
    bool contains(const QSubspace& other) const;

    friend bool operator==(const QSubspace&, const QSubspace&) = default;

private:
    void check_dim(const QVector& v) const;

    std::size_t ambient_;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Functional form of QSubspace::insert.
std::pair<QSubspace, bool> rref_insert(QSubspace sub, const QVector& v);
std::size_t dim(const QSubspace& s);
bool contains(const QSubspace& s, const QVector& v);
QSubspace sum(const QSubspace& a, const QSubspace& b);
QSubspace span(std::size_t ambient, const std::vector<QVector>& vectors);

}  // namespace cerny

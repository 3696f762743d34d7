#include "cerny/qlinalg.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cerny {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    std::string n(num.front() == '+' ? num.substr(1) : num);
    BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational q(BigInt(n, 10), d);
    q.canonicalize();
    return q;
}

QVector zero_vector(std::size_t dim) { return QVector(dim); }

QVector constant_vector(std::size_t dim, const Rational& value) { return QVector(dim, value); }

bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QVector QMatrix::operator*(const QVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector: dimension mismatch");
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(data_[r * cols_ + c]) != 0 && sgn(v[c]) != 0) out[r] += data_[r * cols_ + c] * v[c];
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& m) const {
    if (cols_ != m.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    QMatrix out(rows_, m.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < m.cols_; ++c)
                if (sgn(m(k, c)) != 0) out(r, c) += a * m(k, c);
        }
    return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& m) {
    if (rows_ != m.rows_ || cols_ != m.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += m.data_[i];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Rational QMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

QMatrix QMatrix::power(std::size_t k) const {
    if (rows_ != cols_) throw std::invalid_argument("matrix power: not square");
    QMatrix result = identity(rows_), base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

void QSubspace::check_dim(const QVector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
}

QVector QSubspace::residual(QVector v) const {
    check_dim(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (sgn(v[p]) == 0) continue;
        const Rational f = v[p];
        const QVector& row = rows_[i];
        for (std::size_t c = p; c < ambient_; ++c)
            if (sgn(row[c]) != 0) v[c] -= f * row[c];
    }
    return v;
}

bool QSubspace::contains(const QVector& v) const { return is_zero(residual(v)); }

bool QSubspace::contains(const QSubspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const QVector& r) { return contains(r); });
}

bool QSubspace::insert(const QVector& v) {
    QVector r = residual(v);
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return sgn(x) != 0; });
    if (it == r.end()) return false;
    const auto p = static_cast<std::size_t>(it - r.begin());
    const Rational lead = r[p];
    for (std::size_t c = p; c < ambient_; ++c)
        if (sgn(r[c]) != 0) r[c] /= lead;
    // Clear the new pivot column from the existing rows.
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        const Rational f = row[p];
        for (std::size_t c = p; c < ambient_; ++c)
            if (sgn(r[c]) != 0) row[c] -= f * r[c];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

std::pair<QSubspace, bool> rref_insert(QSubspace sub, const QVector& v) {
    bool grew = sub.insert(v);
    return {std::move(sub), grew};
}

std::size_t dim(const QSubspace& s) { return s.dim(); }

bool contains(const QSubspace& s, const QVector& v) { return s.contains(v); }

QSubspace sum(const QSubspace& a, const QSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace sum: dimension mismatch");
    QSubspace out = a;
    for (const auto& r : b.basis()) out.insert(r);
    return out;
}

QSubspace span(std::size_t ambient, const std::vector<QVector>& vectors) {
    QSubspace out(ambient);
    for (const auto& v : vectors) out.insert(v);
    return out;
}

}  // namespace cerny

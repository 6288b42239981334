#include "bsp/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "bsp/errors.hpp"

namespace bsp {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  mpq_class q;
  q.get_num() = parse_integer(num_text);
  if (slash == std::string_view::npos) {
    q.get_den() = 1;
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+') {
      throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    q.get_den() = parse_integer(den_text);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

QVector QVector::unit(std::size_t dim, std::size_t i) {
  QVector v(dim);
  v[i] = 1;
  return v;
}

QVector QVector::from_mask(std::size_t dim, unsigned long long mask) {
  QVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if ((mask >> i) & 1ULL) v[i] = 1;
  }
  return v;
}

bool QVector::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string QVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out + ")";
}

QVector& QVector::operator+=(const QVector& o) {
  if (o.dim() != dim()) throw DimensionMismatch("QVector +: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  if (o.dim() != dim()) throw DimensionMismatch("QVector -: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

QVector QVector::operator-() const {
  QVector out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("dot: dimension mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i].value() * b[i].value();
  return Rational(std::move(acc));
}

bool colex_less(const QVector& a, const QVector& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = a.dim(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const QVector& v) { return os << v.str(); }

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(std::span<const QVector> rows) {
  if (rows.empty()) return {};
  QMatrix m(rows.size(), rows[0].dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != m.cols()) throw DimensionMismatch("QMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(std::span<const QVector> cols) { return from_rows(cols).transpose(); }

QVector QMatrix::row(std::size_t r) const {
  QVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

QVector QMatrix::col(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("QMatrix *: shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpq_class acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k).value() * b(k, j).value();
      out(i, j) = Rational(std::move(acc));
    }
  return out;
}

QVector operator*(const QMatrix& a, const QVector& x) {
  if (a.cols() != x.dim()) throw DimensionMismatch("QMatrix * QVector: shape mismatch");
  QVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpq_class acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k).value() * x[k].value();
    out[i] = Rational(std::move(acc));
  }
  return out;
}

}  // namespace bsp

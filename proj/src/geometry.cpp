#include "helly/geometry.hpp"

#include <string>

#include "helly/errors.hpp"

namespace helly {

namespace {

void require_dimension(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw InvalidInput("dimension mismatch: expected " + std::to_string(expected) +
                       ", got " + std::to_string(got));
}

Side classify(const Rational &lhs, const Rational &rhs) {
  int c = cmp(lhs, rhs);
  if (c < 0)
    return Side::StrictlySatisfied;
  return c == 0 ? Side::Tight : Side::Violated;
}

} // namespace

RatVector to_rational(const IntPoint &p) {
  RatVector out;
  out.reserve(p.size());
  for (auto v : p)
    out.push_back(to_rational(v));
  return out;
}

Rational dot(const RatVector &a, const RatVector &b) {
  require_dimension(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
      s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector &a, const IntPoint &p) {
  require_dimension(a.size(), p.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (p[i] != 0 && sgn(a[i]) != 0)
      s += a[i] * to_rational(p[i]);
  return s;
}

LinearInequality::LinearInequality(RatVector normal, Rational rhs)
    : normal_(std::move(normal)), rhs_(std::move(rhs)) {
  bool nonzero = false;
  for (auto &v : normal_) {
    v.canonicalize();
    nonzero = nonzero || sgn(v) != 0;
  }
  rhs_.canonicalize();
  if (!nonzero)
    throw InvalidInput("inequality with zero normal vector");
}

Rational LinearInequality::lhs(const RatVector &p) const { return dot(normal_, p); }
Rational LinearInequality::lhs(const IntPoint &p) const { return dot(normal_, p); }

Side LinearInequality::evaluate(const RatVector &p) const { return classify(lhs(p), rhs_); }
Side LinearInequality::evaluate(const IntPoint &p) const { return classify(lhs(p), rhs_); }

LinearInequality LinearInequality::negated(Rational rhs) const {
  RatVector a = normal_;
  for (auto &v : a)
    v = -v;
  return LinearInequality(std::move(a), std::move(rhs));
}

LinearInequality LinearInequality::integer_scaled() const {
  Integer scale = rhs_.get_den();
  for (const auto &v : normal_)
    scale = lcm(scale, v.get_den());
  RatVector a = normal_;
  for (auto &v : a)
    v *= scale;
  return LinearInequality(std::move(a), rhs_ * scale);
}

Side evaluate(const LinearInequality &ineq, const RatVector &p) { return ineq.evaluate(p); }

Polyhedron::Polyhedron(std::size_t dimension, std::vector<LinearInequality> rows)
    : n_(dimension), rows_(std::move(rows)) {
  if (n_ == 0)
    throw InvalidInput("polyhedron dimension must be at least 1");
  for (const auto &r : rows_)
    require_dimension(n_, r.dimension());
}

Polyhedron Polyhedron::subsystem(std::span<const std::size_t> indices) const {
  std::vector<LinearInequality> rows;
  rows.reserve(indices.size());
  for (auto i : indices) {
    if (i >= rows_.size())
      throw InvalidInput("constraint index " + std::to_string(i) + " out of range");
    rows.push_back(rows_[i]);
  }
  return Polyhedron(n_, std::move(rows));
}

Polyhedron Polyhedron::without(std::size_t index) const {
  if (index >= rows_.size())
    throw InvalidInput("constraint index " + std::to_string(index) + " out of range");
  std::vector<LinearInequality> rows;
  rows.reserve(rows_.size() - 1);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (i != index)
      rows.push_back(rows_[i]);
  return Polyhedron(n_, std::move(rows));
}

Polyhedron Polyhedron::with_row(LinearInequality row) const {
  auto rows = rows_;
  rows.push_back(std::move(row));
  return Polyhedron(n_, std::move(rows));
}

bool Polyhedron::contains(const IntPoint &p) const {
  for (const auto &r : rows_)
    if (r.evaluate(p) == Side::Violated)
      return false;
  return true;
}

bool Polyhedron::contains(const RatVector &p) const {
  for (const auto &r : rows_)
    if (r.evaluate(p) == Side::Violated)
      return false;
  return true;
}

bool Polyhedron::strictly_contains(const IntPoint &p) const {
  for (const auto &r : rows_)
    if (r.evaluate(p) != Side::StrictlySatisfied)
      return false;
  return true;
}

Polyhedron Polyhedron::integer_interior() const {
  std::vector<LinearInequality> rows;
  rows.reserve(rows_.size());
  for (const auto &r : rows_) {
    auto s = r.integer_scaled();
    rows.emplace_back(s.normal(), Rational(ceil(s.rhs()) - 1));
  }
  return Polyhedron(n_, std::move(rows));
}

Polyhedron Polyhedron::integer_rounded() const {
  std::vector<LinearInequality> rows;
  rows.reserve(rows_.size());
  for (const auto &r : rows_) {
    auto s = r.integer_scaled();
    Integer g = 0;
    for (const auto &v : s.normal())
      g = gcd(g, v.get_num());
    RatVector a;
    for (const auto &v : s.normal())
      a.emplace_back(v.get_num() / g);
    rows.emplace_back(std::move(a), Rational(floor(s.rhs() / g)));
  }
  return Polyhedron(n_, std::move(rows));
}

IntegerBox::IntegerBox(IntPoint lo, IntPoint hi) : lower(std::move(lo)), upper(std::move(hi)) {
  require_dimension(lower.size(), upper.size());
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i])
      throw InvalidInput("integer box with lower > upper in coordinate " + std::to_string(i));
}

bool IntegerBox::contains(const IntPoint &p) const {
  require_dimension(lower.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < lower[i] || p[i] > upper[i])
      return false;
  return true;
}

std::uint64_t IntegerBox::volume(std::uint64_t limit) const {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    auto side = static_cast<std::uint64_t>(upper[i] - lower[i]) + 1;
    if (side != 0 && v > limit / side)
      return limit;
    v *= side;
  }
  return v < limit ? v : limit;
}

} // namespace helly

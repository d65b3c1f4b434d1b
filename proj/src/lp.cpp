#include "helly/lp.hpp"

#include <string>

#include "helly/errors.hpp"

namespace helly {

namespace lp {

namespace {

class Tableau {
public:
  Tableau(const StandardForm &sf)
      : rows_(sf.rows), cols_(sf.cols), width_(sf.cols + sf.rows),
        t_(rows_ * width_), rhs_(rows_), sign_(rows_, 1), basis_(rows_), d_(width_) {
    for (std::size_t r = 0; r < rows_; ++r) {
      sign_[r] = sgn(sf.g[r]) < 0 ? -1 : 1;
      for (std::size_t c = 0; c < cols_; ++c) {
        const Rational &v = sf.at(r, c);
        if (sgn(v) != 0)
          at(r, c) = sign_[r] < 0 ? Rational(-v) : v;
      }
      at(r, cols_ + r) = 1;
      rhs_[r] = sign_[r] < 0 ? Rational(-sf.g[r]) : sf.g[r];
      basis_[r] = cols_ + r;
    }
  }

  StandardResult run(const StandardForm &sf, bool phase_one_only) {
    StandardResult out{};
    // Phase 1: minimise the sum of artificials.
    for (std::size_t c = 0; c < width_; ++c)
      d_[c] = 0;
    neg_z_ = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(at(r, c)) != 0)
          d_[c] -= at(r, c);
      neg_z_ -= rhs_[r];
    }
    iterate(/*stop_at_zero=*/true);
    if (sgn(neg_z_) != 0) {
      out.status = StandardResult::Status::Infeasible;
      out.pi.resize(rows_);
      for (std::size_t r = 0; r < rows_; ++r) {
        Rational p = 1 - d_[cols_ + r];
        out.pi[r] = sign_[r] < 0 ? Rational(-p) : p;
      }
      out.value = -neg_z_;
      out.pivots = pivots_;
      return out;
    }
    drive_out_artificials();
    if (phase_one_only) {
      out.status = StandardResult::Status::Optimal;
      out.y = primal();
      out.pivots = pivots_;
      return out;
    }

    // Phase 2 with the true costs; artificial columns cost zero and never
    // re-enter the basis.
    for (std::size_t c = 0; c < width_; ++c)
      d_[c] = c < cols_ ? sf.f[c] : Rational(0);
    neg_z_ = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      std::size_t b = basis_[r];
      if (b >= cols_ || sgn(sf.f[b]) == 0)
        continue;
      const Rational &cost = sf.f[b];
      for (std::size_t c = 0; c < width_; ++c)
        if (sgn(at(r, c)) != 0)
          d_[c] -= cost * at(r, c);
      neg_z_ -= cost * rhs_[r];
    }
    if (!iterate(/*stop_at_zero=*/false)) {
      out.status = StandardResult::Status::Unbounded;
      out.pivots = pivots_;
      return out;
    }
    out.status = StandardResult::Status::Optimal;
    out.y = primal();
    out.value = -neg_z_;
    out.pi.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Rational p = -d_[cols_ + r];
      out.pi[r] = sign_[r] < 0 ? Rational(-p) : p;
    }
    out.pivots = pivots_;
    return out;
  }

private:
  Rational &at(std::size_t r, std::size_t c) { return t_[r * width_ + c]; }

  RatVector primal() const {
    RatVector y(cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      if (basis_[r] < cols_)
        y[basis_[r]] = rhs_[r];
    return y;
  }

  // Bland's rule. Returns false when an entering column has no positive
  // entry (objective unbounded below).
  bool iterate(bool stop_at_zero) {
    while (true) {
      if (stop_at_zero && sgn(neg_z_) == 0)
        return true;
      std::size_t q = width_;
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(d_[c]) < 0) {
          q = c;
          break;
        }
      if (q == width_)
        return true;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Rational &e = at(r, q);
        if (sgn(e) <= 0)
          continue;
        Rational ratio = rhs_[r] / e;
        if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == rows_)
        return false;
      pivot(leave, q);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < cols_)
        continue;
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(at(r, c)) != 0) {
          pivot(r, c);
          break;
        }
      // A row with no nonzero original entry is redundant; its artificial
      // stays basic at level zero.
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    ++pivots_;
    Rational inv = 1 / at(r, q);
    nz_.clear();
    for (std::size_t c = 0; c < width_; ++c)
      if (sgn(at(r, c)) != 0) {
        at(r, c) *= inv;
        nz_.push_back(c);
      }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(at(i, q)) == 0)
        continue;
      factor_ = at(i, q);
      for (auto c : nz_)
        submul(at(i, c), factor_, at(r, c));
      if (sgn(rhs_[r]) != 0)
        submul(rhs_[i], factor_, rhs_[r]);
    }
    if (sgn(d_[q]) != 0) {
      factor_ = d_[q];
      for (auto c : nz_)
        submul(d_[c], factor_, at(r, c));
      submul(neg_z_, factor_, rhs_[r]);
    }
    basis_[r] = q;
  }

  std::size_t rows_, cols_, width_;
  std::vector<Rational> t_;
  RatVector rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  RatVector d_;
  Rational neg_z_;
  std::vector<std::size_t> nz_;
  std::size_t pivots_ = 0;
  Rational factor_, scratch_;

  // target -= a * b without temporaries.
  void submul(Rational &target, const Rational &a, const Rational &b) {
    mpq_mul(scratch_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_sub(target.get_mpq_t(), target.get_mpq_t(), scratch_.get_mpq_t());
  }
};

StandardForm dual_form(const InequalitySystem &sys) {
  StandardForm sf;
  sf.rows = sys.n;
  sf.cols = sys.rows();
  sf.M.resize(sf.rows * sf.cols);
  for (std::size_t j = 0; j < sf.cols; ++j)
    for (std::size_t i = 0; i < sf.rows; ++i)
      sf.at(i, j) = sys.a[j][i];
  sf.f = sys.b;
  sf.g.assign(sf.rows, Rational(0));
  return sf;
}

void check_system(const InequalitySystem &sys) {
  if (sys.a.size() != sys.b.size())
    throw InvalidInput("inequality system has mismatched row counts");
  for (const auto &row : sys.a)
    if (row.size() != sys.n)
      throw InvalidInput("inequality system row has wrong dimension");
}

} // namespace

StandardResult solve_standard(const StandardForm &sf, bool phase_one_only) {
  if (sf.M.size() != sf.rows * sf.cols || sf.g.size() != sf.rows ||
      (!phase_one_only && sf.f.size() != sf.cols))
    throw InvalidInput("standard form has inconsistent sizes");
  Tableau t(sf);
  return t.run(sf, phase_one_only);
}

InequalitySystem system_of(const Polyhedron &P) {
  InequalitySystem sys;
  sys.n = P.dimension();
  sys.a.reserve(P.size());
  sys.b.reserve(P.size());
  for (const auto &row : P.rows())
    sys.add(row.normal(), row.rhs());
  return sys;
}

std::optional<RatVector> feasible_point(const InequalitySystem &sys) {
  check_system(sys);
  // min b.y s.t. A^T y = 0, y >= 0 is bounded iff the system is feasible,
  // and then its multipliers form a feasible point.
  StandardForm sf = dual_form(sys);
  auto res = solve_standard(sf);
  if (res.status != StandardResult::Status::Optimal)
    return std::nullopt;
  return res.pi;
}

LPResult solve(const InequalitySystem &sys, const RatVector &objective, Sense sense) {
  check_system(sys);
  if (objective.size() != sys.n)
    throw InvalidInput("objective has wrong dimension");
  StandardForm sf = dual_form(sys);
  for (std::size_t i = 0; i < sys.n; ++i)
    sf.g[i] = sense == Sense::Minimize ? Rational(-objective[i]) : objective[i];
  auto res = solve_standard(sf);
  switch (res.status) {
  case StandardResult::Status::Optimal: {
    RatVector x = std::move(res.pi);
    Rational value = dot(objective, x);
    return LPOptimal{std::move(value), std::move(x)};
  }
  case StandardResult::Status::Unbounded:
    return LPInfeasible{};
  case StandardResult::Status::Infeasible:
    break;
  }
  // Dual infeasible: the Farkas multipliers are an improving recession
  // direction, provided the primal has a point at all.
  if (!feasible_point(sys))
    return LPInfeasible{};
  return LPUnbounded{std::move(res.pi)};
}

} // namespace lp

LPResult lp_solve(const Polyhedron &P, const RatVector &objective, Sense sense) {
  return lp::solve(lp::system_of(P), objective, sense);
}

std::optional<RatVector> feasible_point(const Polyhedron &P) {
  return lp::feasible_point(lp::system_of(P));
}

BoxResult bounding_box(const Polyhedron &P) {
  const std::size_t n = P.dimension();
  auto sys = lp::system_of(P);
  if (!lp::feasible_point(sys))
    return BoxInfeasible{};
  IntPoint lo(n), hi(n);
  std::optional<std::size_t> empty_coordinate;
  std::optional<BoxUnbounded> unbounded;
  for (std::size_t i = 0; i < n && !unbounded; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    for (Sense sense : {Sense::Minimize, Sense::Maximize}) {
      auto res = lp::solve(sys, e, sense);
      if (auto *u = std::get_if<LPUnbounded>(&res)) {
        unbounded = BoxUnbounded{i, std::move(u->ray)};
        break;
      }
      if (std::holds_alternative<LPInfeasible>(res))
        return BoxInfeasible{};
      const auto &opt = std::get<LPOptimal>(res);
      if (sense == Sense::Minimize)
        lo[i] = to_int64(ceil(opt.value));
      else
        hi[i] = to_int64(floor(opt.value));
    }
    if (!unbounded && lo[i] > hi[i] && !empty_coordinate)
      empty_coordinate = i;
  }
  if (unbounded)
    return *unbounded;
  if (empty_coordinate)
    return BoxNoIntegers{*empty_coordinate};
  return IntegerBox(std::move(lo), std::move(hi));
}

bool hull_membership(const RatVector &q, const std::vector<RatVector> &X) {
  if (X.empty())
    throw InvalidInput("hull membership against an empty point set");
  const std::size_t n = q.size();
  lp::StandardForm sf;
  sf.rows = n + 1;
  sf.cols = X.size();
  sf.M.resize(sf.rows * sf.cols);
  for (std::size_t j = 0; j < X.size(); ++j) {
    if (X[j].size() != n)
      throw InvalidInput("hull membership: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i)
      sf.at(i, j) = X[j][i];
    sf.at(n, j) = 1;
  }
  sf.g = q;
  sf.g.emplace_back(1);
  return lp::solve_standard(sf, /*phase_one_only=*/true).status ==
         lp::StandardResult::Status::Optimal;
}

bool hull_membership(const IntPoint &q, const std::vector<IntPoint> &X) {
  std::vector<RatVector> pts;
  pts.reserve(X.size());
  for (const auto &x : X)
    pts.push_back(to_rational(x));
  return hull_membership(to_rational(q), pts);
}

} // namespace helly

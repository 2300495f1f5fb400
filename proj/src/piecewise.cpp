#include "innervol/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "innervol/error.hpp"

namespace innervol {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<double> coeffs, double trim) : coeffs_(std::move(coeffs)) {
  double biggest = 0.0;
  for (double c : coeffs_) biggest = std::max(biggest, std::abs(c));
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= trim * biggest) coeffs_.pop_back();
}

double Polynomial::operator()(double r) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
  return acc;
}

double Polynomial::derivative_at(int k, double r) const {
  Polynomial p = *this;
  for (int i = 0; i < k; ++i) p = p.derivative();
  return p(r);
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<double> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(out), 0.0);
}

Polynomial Polynomial::antiderivative(double c0) const {
  std::vector<double> out(coeffs_.size() + 1, 0.0);
  out[0] = c0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
  return Polynomial(std::move(out), 0.0);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<double> out(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coeff(k) + o.coeff(k);
  return Polynomial(std::move(out), 0.0);
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(double s) const {
  std::vector<double> out(coeffs_);
  for (double& c : out) c *= s;
  return Polynomial(std::move(out), 0.0);
}

// ------------------------------------------------------------- PiecewisePoly

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Segments view: polys[i] lives on [bounds[i], bounds[i+1]]; infinite bounds mark tails.
struct Segments {
  std::vector<double> bounds;
  std::vector<Polynomial> polys;
};

Segments to_segments(const PiecewisePoly& f) {
  Segments s;
  if (f.breakpoints().empty()) {
    s.bounds = {-kInf, kInf};
    s.polys = {f.right_tail().value_or(Polynomial())};
    return s;
  }
  if (f.left_tail()) {
    s.bounds.push_back(-kInf);
    s.polys.push_back(*f.left_tail());
  }
  s.bounds.insert(s.bounds.end(), f.breakpoints().begin(), f.breakpoints().end());
  s.polys.insert(s.polys.end(), f.pieces().begin(), f.pieces().end());
  if (f.right_tail()) {
    s.bounds.push_back(kInf);
    s.polys.push_back(*f.right_tail());
  }
  return s;
}

PiecewisePoly from_segments(int degree, const Segments& s) {
  if (s.bounds.front() == -kInf && s.bounds.back() == kInf && s.polys.size() == 1)
    return PiecewisePoly::global(degree, s.polys.front());
  std::vector<double> bps;
  std::vector<Polynomial> pieces;
  std::optional<Polynomial> left, right;
  for (std::size_t i = 0; i < s.polys.size(); ++i) {
    const bool lt = s.bounds[i] == -kInf;
    const bool rt = s.bounds[i + 1] == kInf;
    if (lt) left = s.polys[i];
    else if (rt) right = s.polys[i];
    else pieces.push_back(s.polys[i]);
  }
  for (double b : s.bounds)
    if (std::isfinite(b)) bps.push_back(b);
  return PiecewisePoly(degree, std::move(bps), std::move(pieces), std::move(left), std::move(right));
}

// max over the abscissae of interest of |p(r) - q(r)| bounded coefficientwise.
double coefficient_gap(const Polynomial& p, const Polynomial& q, double abscissa) {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  double gap = 0.0, pow = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    gap += std::abs(p.coeff(k) - q.coeff(k)) * pow;
    pow *= abscissa;
  }
  return gap;
}

double abscissa_scale(const PiecewisePoly& f) {
  double a = f.length_scale();
  for (double b : f.breakpoints()) a = std::max(a, std::abs(b));
  return a;
}

}  // namespace

PiecewisePoly::PiecewisePoly(int degree, std::vector<double> breakpoints, std::vector<Polynomial> pieces,
                             std::optional<Polynomial> left_tail, std::optional<Polynomial> right_tail)
    : degree_(degree),
      breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      left_tail_(std::move(left_tail)),
      right_tail_(std::move(right_tail)) {
  if (breakpoints_.empty()) {
    if (!left_tail_ || !right_tail_)
      throw Error(ErrorCode::InvalidArgument, "a function without breakpoints needs both tails");
  } else if (pieces_.size() + 1 != breakpoints_.size()) {
    throw Error(ErrorCode::InvalidArgument, "piece count must be one less than breakpoint count");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "breakpoints must be strictly increasing");
  auto check = [&](const Polynomial& p) {
    if (p.degree() > degree_) throw Error(ErrorCode::InvalidArgument, "piece degree exceeds declared degree");
  };
  for (const auto& p : pieces_) check(p);
  if (left_tail_) check(*left_tail_);
  if (right_tail_) check(*right_tail_);
}

PiecewisePoly PiecewisePoly::global(int degree, Polynomial p) {
  return PiecewisePoly(degree, {}, {}, p, p);
}

bool PiecewisePoly::in_domain(double r) const { return piece_at(r) != nullptr; }

const Polynomial* PiecewisePoly::piece_at(double r) const {
  if (std::isnan(r)) return nullptr;
  if (breakpoints_.empty()) return &*right_tail_;
  if (r < breakpoints_.front()) return left_tail_ ? &*left_tail_ : nullptr;
  if (r > breakpoints_.back()) return right_tail_ ? &*right_tail_ : nullptr;
  if (r == breakpoints_.back()) {
    if (right_tail_) return &*right_tail_;
    if (!pieces_.empty()) return &pieces_.back();
    return left_tail_ ? &*left_tail_ : nullptr;
  }
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), r);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return &pieces_[i];
}

double PiecewisePoly::evaluate(double r) const {
  const Polynomial* p = piece_at(r);
  if (!p) throw Error(ErrorCode::OutOfDomain, "evaluation point outside the function's domain");
  return (*p)(r);
}

std::size_t PiecewisePoly::phase_count() const {
  if (breakpoints_.empty()) return 1;
  return pieces_.size() + (left_tail_ ? 1 : 0) + (right_tail_ ? 1 : 0);
}

double PiecewisePoly::value_scale() const {
  double s = 0.0;
  const Segments seg = to_segments(*this);
  for (std::size_t i = 0; i < seg.polys.size(); ++i)
    for (double b : {seg.bounds[i], seg.bounds[i + 1]})
      if (std::isfinite(b)) s = std::max(s, std::abs(seg.polys[i](b)));
  if (breakpoints_.empty()) s = std::max(s, std::abs(right_tail_->coeff(0)));
  return std::max(s, 1e-300);
}

double PiecewisePoly::length_scale() const {
  if (breakpoints_.size() < 2) return 1.0;
  const double span = breakpoints_.back() - breakpoints_.front();
  return span > 0 ? span : 1.0;
}

PiecewisePoly PiecewisePoly::derivative() const {
  Segments s = to_segments(*this);
  for (auto& p : s.polys) p = p.derivative();
  return from_segments(std::max(degree_ - 1, 0), s);
}

PiecewisePoly PiecewisePoly::antiderivative_anchored(double anchor_r, double anchor_value) const {
  if (!in_domain(anchor_r)) throw Error(ErrorCode::OutOfDomain, "anchor outside the function's domain");
  Segments s = to_segments(*this);
  // Integrate left to right, matching values at each finite junction.
  for (std::size_t i = 0; i < s.polys.size(); ++i) {
    Polynomial prim = s.polys[i].antiderivative();
    if (i == 0) {
      const double at = std::isfinite(s.bounds[1]) ? s.bounds[1] : (std::isfinite(s.bounds[0]) ? s.bounds[0] : 0.0);
      const double base = std::isfinite(s.bounds[0]) ? s.bounds[0] : at;
      prim = prim - Polynomial::constant(prim(base));
    } else {
      const double b = s.bounds[i];
      prim = prim + Polynomial::constant(s.polys[i - 1](b) - prim(b));
    }
    s.polys[i] = prim;
  }
  PiecewisePoly out = from_segments(degree_ + 1, s);
  const double shift = anchor_value - out.evaluate(anchor_r);
  for (auto& p : s.polys) p = p + Polynomial::constant(shift);
  return from_segments(degree_ + 1, s);
}

PiecewisePoly PiecewisePoly::normalized(const Tolerances& tol) const {
  Segments s = to_segments(*this);
  const double vscale = value_scale();
  const double abscissa = abscissa_scale(*this);
  std::size_t i = 0;
  while (i + 1 < s.polys.size()) {
    if (coefficient_gap(s.polys[i], s.polys[i + 1], abscissa) <= tol.coalesce * vscale) {
      const bool next_is_tail = !std::isfinite(s.bounds[i + 2]);
      const bool this_is_tail = !std::isfinite(s.bounds[i]);
      Polynomial keep = s.polys[i];
      if (next_is_tail && !this_is_tail) keep = s.polys[i + 1];
      else if (!this_is_tail && s.polys[i + 1].degree() < keep.degree()) keep = s.polys[i + 1];
      s.polys[i] = keep;
      s.polys.erase(s.polys.begin() + static_cast<std::ptrdiff_t>(i + 1));
      s.bounds.erase(s.bounds.begin() + static_cast<std::ptrdiff_t>(i + 1));
    } else {
      ++i;
    }
  }
  for (auto& p : s.polys) p = Polynomial(p.coeffs(), tol.coeff);
  return from_segments(degree_, s);
}

bool PiecewisePoly::is_continuous(const Tolerances& tol) const {
  const Segments s = to_segments(*this);
  const double eps = tol.cont * value_scale();
  for (std::size_t i = 1; i < s.polys.size(); ++i) {
    const double b = s.bounds[i];
    if (std::abs(s.polys[i - 1](b) - s.polys[i](b)) > eps) return false;
  }
  return true;
}

SmoothnessClass PiecewisePoly::smoothness_class(const Tolerances& tol) const {
  const PiecewisePoly f = normalized(tol);
  const Segments s = to_segments(f);
  if (s.polys.size() <= 1) return SmoothnessClass::infinity();
  const double vscale = value_scale();
  const double lscale = length_scale();
  int max_order = 0;
  for (const auto& p : s.polys) max_order = std::max(max_order, p.degree());
  for (int k = 0; k <= max_order; ++k) {
    const double eps = tol.smooth * vscale / std::pow(lscale, k);
    for (std::size_t i = 1; i < s.polys.size(); ++i) {
      const double b = s.bounds[i];
      if (std::abs(s.polys[i - 1].derivative_at(k, b) - s.polys[i].derivative_at(k, b)) > eps)
        return {false, k - 1};
    }
  }
  return SmoothnessClass::infinity();
}

double PiecewisePoly::max_relative_jump(int k, const Tolerances& tol) const {
  const Segments s = to_segments(normalized(tol));
  const double unit = value_scale() / std::pow(length_scale(), k);
  double jump = 0.0;
  for (std::size_t i = 1; i < s.polys.size(); ++i) {
    const double b = s.bounds[i];
    jump = std::max(jump, std::abs(s.polys[i - 1].derivative_at(k, b) - s.polys[i].derivative_at(k, b)));
  }
  return jump / unit;
}

bool PiecewisePoly::approx_equal(const PiecewisePoly& other, double rel_tol) const {
  const PiecewisePoly a = normalized();
  const PiecewisePoly b = other.normalized();
  if (a.breakpoints_.size() != b.breakpoints_.size()) return false;
  if (a.left_tail_.has_value() != b.left_tail_.has_value()) return false;
  if (a.right_tail_.has_value() != b.right_tail_.has_value()) return false;
  const double lscale = std::max(a.length_scale(), b.length_scale());
  for (std::size_t i = 0; i < a.breakpoints_.size(); ++i)
    if (std::abs(a.breakpoints_[i] - b.breakpoints_[i]) > rel_tol * lscale) return false;
  const double vscale = std::max(a.value_scale(), b.value_scale());
  const double abscissa = std::max(abscissa_scale(a), abscissa_scale(b));
  const Segments sa = to_segments(a), sb = to_segments(b);
  for (std::size_t i = 0; i < sa.polys.size(); ++i)
    if (coefficient_gap(sa.polys[i], sb.polys[i], abscissa) > rel_tol * vscale) return false;
  return true;
}

PiecewisePoly PiecewisePoly::combine(int degree, const std::vector<std::pair<double, const PiecewisePoly*>>& terms,
                                     double lo, double hi, const Tolerances& tol) {
  if (!(hi > lo)) throw Error(ErrorCode::InvalidArgument, "combine needs a non-degenerate interval");
  std::vector<double> cand{lo, hi};
  for (const auto& [w, f] : terms)
    for (double b : f->breakpoints())
      if (b > lo && b < hi) cand.push_back(b);
  std::vector<double> bps = merge_breakpoints(std::move(cand), tol.breakpoint * (hi - lo));
  bps.front() = lo;
  bps.back() = hi;
  if (bps.size() < 2) bps = {lo, hi};
  std::vector<Polynomial> pieces;
  pieces.reserve(bps.size() - 1);
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const double mid = 0.5 * (bps[i] + bps[i + 1]);
    Polynomial acc;
    for (const auto& [w, f] : terms)
      if (const Polynomial* p = f->piece_at(mid)) acc = acc + (*p) * w;
    pieces.emplace_back(acc.coeffs(), 0.0);
  }
  return PiecewisePoly(degree, std::move(bps), std::move(pieces));
}

std::vector<double> merge_breakpoints(std::vector<double> candidates, double tol) {
  std::sort(candidates.begin(), candidates.end());
  std::vector<double> out;
  for (double c : candidates) {
    if (!out.empty() && c - out.back() <= tol) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace innervol

#include "excalc/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace excalc {

QuadratureRule::QuadratureRule(int order) {
  if (order < 1) throw DomainError("quadrature order must be positive");
  nodes_.resize(order);
  weights_.resize(order);
  const long double pi = 3.14159265358979323846264338327950288L;
  // Newton iteration on the Legendre polynomial, nodes on [-1,1], then
  // mapped to [0,1].
  for (int i = 0; i < order; ++i) {
    long double x = std::cos(pi * (i + 0.75L) / (order + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = x;
      for (int n = 2; n <= order; ++n) {
        long double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0L);
      long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    const long double weight = 2.0L / ((1.0L - x * x) * dp * dp);
    nodes_[i] = static_cast<double>((x + 1.0L) / 2.0L);
    weights_[i] = static_cast<double>(weight / 2.0L);
  }
  std::sort(nodes_.begin(), nodes_.end());
}

namespace {

std::vector<std::complex<double>> slot_coordinates(const Form& w,
                                                   std::span<const GaussRat> point) {
  if (static_cast<int>(point.size()) != w.dim()) throw DomainError("point arity mismatch");
  std::vector<std::complex<double>> x;
  x.reserve(w.slots());
  for (const auto& p : point) x.push_back(p.to_complex());
  if (w.mode() == Mode::Complex) {
    for (const auto& p : point) x.push_back(std::conj(p.to_complex()));
  }
  return x;
}

std::vector<std::complex<double>> slot_base(const Form& w) {
  std::vector<std::complex<double>> x0;
  x0.reserve(w.slots());
  for (const auto& b : w.base()) x0.push_back(b.to_complex());
  if (w.mode() == Mode::Complex) {
    for (const auto& b : w.base()) x0.push_back(std::conj(b.to_complex()));
  }
  return x0;
}

}  // namespace

int required_order(const Form& w) {
  int max_deg = 0;
  for (const auto& [t, p] : w.terms()) max_deg = std::max(max_deg, p.total_degree());
  return (max_deg + w.degree() + 1) / 2;
}

std::map<BasisTerm, std::complex<double>> quad_H_at(const Form& w,
                                                    std::span<const GaussRat> point,
                                                    const QuadratureRule& rule,
                                                    ContractPart part) {
  if (part != ContractPart::Full && w.mode() != Mode::Complex)
    throw DomainError("split contraction requires complex mode");
  std::map<BasisTerm, std::complex<double>> out;
  const int k = w.degree();
  if (k == 0 || w.is_zero()) return out;
  if (rule.order() < required_order(w))
    throw UnderResolvedError("quadrature rule order " + std::to_string(rule.order()) +
                             " cannot resolve integrand; need >= " +
                             std::to_string(required_order(w)));

  const auto x = slot_coordinates(w, point);
  const auto x0 = slot_base(w);
  std::vector<std::complex<double>> radial(x.size());
  for (std::size_t s = 0; s < x.size(); ++s) radial[s] = x[s] - x0[s];

  std::vector<std::complex<double>> u(x.size());
  for (int q = 0; q < rule.order(); ++q) {
    const double t = rule.nodes()[q];
    const double weight = rule.weights()[q] * std::pow(t, k - 1);
    for (std::size_t s = 0; s < u.size(); ++s) u[s] = t * radial[s];
    for (const auto& [term, p] : w.terms()) {
      const std::complex<double> value = p.eval_shifted(std::span<const std::complex<double>>(u));
      for (std::size_t j = 0; j < term.labels.size(); ++j) {
        Label l = term.labels[j];
        if (!part_contains(part, l, w.dim())) continue;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        out[erase_index(term, j)] += weight * sign * radial[l] * value;
      }
    }
  }
  return out;
}

double fd_d_at(const Form& w, std::span<const GaussRat> point, double step) {
  if (w.mode() != Mode::Real) throw DomainError("finite differences run in real mode");
  if (step <= 0) throw DomainError("step must be positive");
  if (static_cast<int>(point.size()) != w.dim()) throw DomainError("point arity mismatch");

  std::vector<std::complex<double>> u(w.dim());
  for (int s = 0; s < w.dim(); ++s) u[s] = point[s].to_complex() - w.base()[s].to_complex();

  double residual = 0.0;
  auto up = u, um = u;
  for (int s = 0; s < w.dim(); ++s) {
    up[s] += step;
    um[s] -= step;
    for (const auto& [term, p] : w.terms()) {
      const std::complex<double> fd =
          (p.eval_shifted(std::span<const std::complex<double>>(up)) -
           p.eval_shifted(std::span<const std::complex<double>>(um))) /
          (2.0 * step);
      const std::complex<double> exact =
          p.partial(s).eval_shifted(std::span<const std::complex<double>>(u));
      residual = std::max(residual, std::abs(fd - exact));
    }
    up[s] = u[s];
    um[s] = u[s];
  }
  return residual;
}

}  // namespace excalc

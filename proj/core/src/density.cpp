// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/density.hpp"

#include <cmath>
#include <set>

#include "pgrade/combinatorics.hpp"
#include "pgrade/errors.hpp"
#include "pgrade/fock.hpp"

namespace pgrade {

namespace {

constexpr double kStateTol = 1e-12;

void check_range(const MixedState& state, int p, int lo, const char* op) {
  if (p < lo || p > state.particles()) {
    throw DomainError(std::string(op) + ": p = " + std::to_string(p) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(state.particles()) + "]");
  }
}

struct Factorized {
  Frame rows;
  Eigen::MatrixXcd columns;  // D^p = columns * columns†
};

// Columns are sqrt(c_i) (Ψ_i ↪ Ω) for every (n-p)-determinant Ω inside some term of Ψ_i.
Factorized factorize(const MixedState& state, int p) {
  const int n = state.particles();
  const int dim = state.dim();
  std::vector<StateVector> cols;
  for (const auto& [weight, psi] : state.components()) {
    std::set<Occupation> omegas;
    for (const auto& [occ, c] : psi.terms()) {
      for (const auto& t : split_determinant(occ, 1.0, n - p)) omegas.insert(t.left);
    }
    const double scale = std::sqrt(weight);
    for (const auto& omega : omegas) {
      StateVector v = interior_right(psi, StateVector::determinant(dim, omega));
      if (v.is_zero()) continue;
      v *= scale;
      cols.push_back(std::move(v));
    }
  }
  Factorized f{Frame::covering(cols), {}};
  f.columns = f.rows.columns(cols);
  return f;
}

}  // namespace

MixedState::MixedState(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("mixed state needs at least one component");
  double total = 0.0;
  const int n = components_.front().state.particles();
  const int dim = components_.front().state.dim();
  for (const auto& [w, psi] : components_) {
    if (!(w > 0.0)) throw DomainError("mixture weights must be positive");
    if (psi.particles() != n || psi.dim() != dim) {
      throw ShapeError("mixture components must share particle number and basis");
    }
    if (std::abs(psi.norm() - 1.0) > kStateTol) {
      throw DomainError("mixture components must be normalized");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kStateTol) throw DomainError("mixture weights must sum to 1");
}

MixedState MixedState::pure(const StateVector& psi) {
  return MixedState({{1.0, psi.normalized()}});
}

Complex RdmMatrix::element(const Occupation& a, const Occupation& b) const {
  auto i = rows.index_of(a);
  auto j = rows.index_of(b);
  if (!i || !j) return {};
  return matrix(*i, *j);
}

void check_sector_ceiling(int dim, int p, std::uint64_t ceiling) {
  const std::uint64_t size = binomial(dim, p);
  if (size > ceiling) {
    throw ResourceCeilingError("the " + std::to_string(p) + "-particle sector over " +
                               std::to_string(dim) + " orbitals has " + std::to_string(size) +
                               " determinants, above the ceiling of " + std::to_string(ceiling));
  }
}

RdmMatrix rdm(const MixedState& state, int p, const DensityOptions& opts) {
  check_range(state, p, 0, "rdm");
  check_sector_ceiling(state.dim(), p, opts.sector_ceiling);
  Factorized f = factorize(state, p);
  RdmMatrix out;
  out.dim = state.dim();
  out.sector = p;
  out.rows = std::move(f.rows);
  out.matrix = f.columns * f.columns.adjoint();
  return out;
}

Subspace internal_space(const MixedState& state, int p, const DensityOptions& opts) {
  check_range(state, p, 1, "internal_space");
  const RdmMatrix d = rdm(state, p, opts);
  Subspace empty(state.dim(), p);
  if (d.rows.size() == 0) return empty;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(d.matrix);
  const auto& values = eig.eigenvalues();
  const double top = values(values.size() - 1);
  if (top <= 0.0) return empty;
  std::vector<StateVector> basis;
  for (Eigen::Index k = values.size(); k-- > 0;) {
    if (values(k) <= opts.rank_tol * top) break;
    basis.push_back(d.rows.vector(eig.eigenvectors().col(k), state.dim(), p));
  }
  return Subspace(state.dim(), p, std::move(basis));
}

Subspace external_space(const MixedState& state, int p, const DensityOptions& opts) {
  check_range(state, p, 1, "external_space");
  const RdmMatrix d = rdm(state, p, opts);
  std::vector<StateVector> basis;
  for (const auto& occ : sector_determinants(state.dim(), p)) {
    if (!d.rows.index_of(occ)) basis.push_back(StateVector::determinant(state.dim(), occ));
  }
  if (d.rows.size() > 0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(d.matrix);
    const auto& values = eig.eigenvalues();
    const double top = std::max(values(values.size() - 1), 0.0);
    for (Eigen::Index k = 0; k < values.size(); ++k) {
      if (values(k) > opts.rank_tol * top) break;
      basis.push_back(d.rows.vector(eig.eigenvectors().col(k), state.dim(), p));
    }
  }
  return Subspace(state.dim(), p, std::move(basis));
}

std::vector<Occupation> sector_determinants(int dim, int p) {
  std::vector<Occupation> out;
  out.reserve(binomial(dim, p));
  for_each_combination(dim, p, [&](std::span<const int> pos) {
    Occupation occ;
    for (int i : pos) occ.insert(i + 1);
    out.push_back(std::move(occ));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pgrade

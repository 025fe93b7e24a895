// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "pgrade/errors.hpp"
#include "pgrade/fock.hpp"

namespace pgrade {

Frame::Frame(std::vector<Occupation> occupations) : occupations_(std::move(occupations)) {
  std::sort(occupations_.begin(), occupations_.end());
  occupations_.erase(std::unique(occupations_.begin(), occupations_.end()), occupations_.end());
  index_.reserve(occupations_.size());
  for (std::size_t i = 0; i < occupations_.size(); ++i) {
    index_.emplace(occupations_[i], static_cast<Eigen::Index>(i));
  }
}

Frame Frame::covering(std::span<const StateVector> vectors) {
  std::vector<Occupation> occs;
  for (const auto& v : vectors) {
    for (const auto& [occ, c] : v.terms()) occs.push_back(occ);
  }
  return Frame(std::move(occs));
}

std::optional<Eigen::Index> Frame::index_of(const Occupation& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Eigen::VectorXcd Frame::coordinates(const StateVector& v) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(size());
  for (const auto& [occ, c] : v.terms()) {
    auto i = index_of(occ);
    if (!i) throw ShapeError("vector has support outside the coordinate frame: " + occ.to_string());
    out(*i) = c;
  }
  return out;
}

Eigen::MatrixXcd Frame::columns(std::span<const StateVector> vectors) const {
  Eigen::MatrixXcd out(size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) = coordinates(vectors[j]);
  }
  return out;
}

StateVector Frame::vector(const Eigen::Ref<const Eigen::VectorXcd>& coords, int dim,
                          int particles) const {
  StateVector out(dim, particles);
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    out.add(occupations_[static_cast<std::size_t>(i)], coords(i));
  }
  out.prune();
  return out;
}

Subspace::Subspace(int dim, int sector) : dim_(dim), sector_(sector) {}

Subspace::Subspace(int dim, int sector, std::vector<StateVector> orthonormal_basis)
    : dim_(dim), sector_(sector), basis_(std::move(orthonormal_basis)) {
  for (const auto& v : basis_) {
    if (v.dim() != dim || v.particles() != sector) {
      throw ShapeError("subspace basis vector outside the declared sector");
    }
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i; j < basis_.size(); ++j) {
      const Complex g = inner(basis_[i], basis_[j]);
      const Complex expected = i == j ? 1.0 : 0.0;
      if (std::abs(g - expected) > kOrthonormalityTol) {
        throw DomainError("subspace basis is not orthonormal");
      }
    }
  }
}

Subspace Subspace::span(int dim, int sector, std::span<const StateVector> vectors,
                        double rel_tol) {
  Subspace out(dim, sector);
  if (vectors.empty()) return out;
  for (const auto& v : vectors) {
    if (v.dim() != dim || v.particles() != sector) {
      throw ShapeError("span: vector outside the declared sector");
    }
  }
  const Frame frame = Frame::covering(vectors);
  if (frame.size() == 0) return out;
  const Eigen::MatrixXcd m = frame.columns(vectors);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return out;
  const double cutoff = rel_tol * sv(0);
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= cutoff) break;
    out.basis_.push_back(frame.vector(svd.matrixU().col(k), dim, sector));
  }
  return out;
}

StateVector Subspace::project(const StateVector& v) const {
  StateVector out(v.dim(), v.particles());
  for (const auto& b : basis_) out += inner(b, v) * b;
  return out;
}

double Subspace::residual(const StateVector& v) const {
  StateVector r = v;
  r -= project(v);
  return r.norm();
}

Eigen::MatrixXcd cross_gram(const Subspace& a, const Subspace& b) {
  Eigen::MatrixXcd g(a.dimension(), b.dimension());
  for (int i = 0; i < a.dimension(); ++i) {
    for (int j = 0; j < b.dimension(); ++j) {
      g(i, j) = inner(a.basis()[static_cast<std::size_t>(i)], b.basis()[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

double projector_distance(const Subspace& a, const Subspace& b) {
  // ||P_a - P_b||_F^2 = ||A - B B†A||^2 + ||B - A A†B||^2, summed from residuals
  // rather than as dim a + dim b - 2 ||A†B||^2, which cancels badly near zero.
  if (a.dim() != b.dim() || a.sector() != b.sector()) {
    throw ShapeError("projector_distance: subspaces live in different sectors");
  }
  std::vector<StateVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  const Frame frame = Frame::covering(all);
  const Eigen::MatrixXcd ma = frame.columns(a.basis());
  const Eigen::MatrixXcd mb = frame.columns(b.basis());
  const Eigen::MatrixXcd ab = ma.adjoint() * mb;
  const double ra = (ma - mb * ab.adjoint()).squaredNorm();
  const double rb = (mb - ma * ab).squaredNorm();
  return std::sqrt(ra + rb);
}

bool contained_in(const Subspace& a, const Subspace& b, double tol) {
  for (const auto& v : a.basis()) {
    if (b.residual(v) > tol) return false;
  }
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  std::vector<StateVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.dim(), a.sector(), all);
}

Subspace direct_sum(std::span<const Subspace> pieces, int dim, int sector) {
  std::vector<StateVector> all;
  for (const auto& s : pieces) all.insert(all.end(), s.basis().begin(), s.basis().end());
  return Subspace(dim, sector, std::move(all));
}

}  // namespace pgrade

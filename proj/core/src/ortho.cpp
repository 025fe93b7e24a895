// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/ortho.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pgrade/errors.hpp"

namespace pgrade {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_p(const MixedState& s1, const MixedState& s2, int p, const char* op) {
  if (s1.dim() != s2.dim()) throw ShapeError(std::string(op) + ": orbital basis mismatch");
  const int top = std::min(s1.particles(), s2.particles());
  if (p < 1 || p > top) {
    throw DomainError(std::string(op) + ": p = " + std::to_string(p) + " outside [1, " +
                      std::to_string(top) + "]");
  }
}

void check_pair(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim() || a.sector() != b.sector()) {
    throw ShapeError("subspaces live in different sectors");
  }
  if (a.empty() || b.empty()) {
    throw DomainError("Araki angles need two non-empty internal spaces");
  }
}

// Orthonormal E basis and the coordinates of both input bases in it.
struct EFrame {
  Subspace e;
  Frame frame;
  Eigen::MatrixXcd q;   // E basis in frame coordinates
  Eigen::MatrixXcd a1;  // Q† B1
  Eigen::MatrixXcd a2;  // Q† B2
};

EFrame build_e(const Subspace& i1, const Subspace& i2) {
  EFrame f{sum(i1, i2), {}, {}, {}, {}};
  std::vector<StateVector> all = i1.basis();
  all.insert(all.end(), i2.basis().begin(), i2.basis().end());
  f.frame = Frame::covering(all);
  f.q = f.frame.columns(f.e.basis());
  f.a1 = f.q.adjoint() * f.frame.columns(i1.basis());
  f.a2 = f.q.adjoint() * f.frame.columns(i2.basis());
  return f;
}

ArakiOperators operators_on(const EFrame& f) {
  ArakiOperators ops;
  ops.e = f.e;
  ops.p1 = f.a1 * f.a1.adjoint();
  ops.p2 = f.a2 * f.a2.adjoint();
  const Eigen::Index d = ops.p1.rows();
  const Eigen::MatrixXcd c = ops.p1 + ops.p2 - Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd s = ops.p1 - ops.p2;
  ops.cos2 = c * c;
  ops.sin2 = s * s;
  return ops;
}

Subspace lift(const EFrame& f, const Eigen::MatrixXcd& coords, int dim, int sector) {
  const Eigen::MatrixXcd full = f.q * coords;
  std::vector<StateVector> basis;
  for (Eigen::Index k = 0; k < full.cols(); ++k) {
    basis.push_back(f.frame.vector(full.col(k), dim, sector));
  }
  return Subspace(dim, sector, std::move(basis));
}

// Orthonormal basis (E coordinates) of range(P_V A) where A spans a subspace that
// splits along V; singular values are ~1 on the intersection and ~0 elsewhere.
Eigen::MatrixXcd intersect_with_block(const Eigen::MatrixXcd& v, const Eigen::MatrixXcd& a) {
  const Eigen::MatrixXcd projected = v * (v.adjoint() * a);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(projected, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index keep = 0;
  while (keep < sv.size() && sv(keep) > 0.5) ++keep;
  return svd.matrixU().leftCols(keep);
}

struct Eigenpairs {
  Eigen::VectorXd lambda;   // ascending
  Eigen::MatrixXcd vectors;
  std::vector<double> theta;
};

Eigenpairs diagonalize(const ArakiOperators& ops) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(ops.cos2);
  Eigenpairs out{eig.eigenvalues(), eig.eigenvectors(), {}};
  const Eigen::Index d = ops.cos2.rows();
  const Eigen::MatrixXcd c = ops.p1 + ops.p2 - Eigen::MatrixXcd::Identity(d, d);
  const Eigen::MatrixXcd s = ops.p1 - ops.p2;
  // θ = arccos √λ, evaluated as atan2(|SINΘ v|, |COSΘ v|) so both ends stay accurate.
  for (Eigen::Index k = 0; k < d; ++k) {
    const double cosine = (c * out.vectors.col(k)).norm();
    const double sine = (s * out.vectors.col(k)).norm();
    out.theta.push_back(std::atan2(sine, cosine));
  }
  return out;
}

// Index ranges [begin, end) of eigenvalues grouped within `bin` of their neighbour.
std::vector<std::pair<Eigen::Index, Eigen::Index>> bins(const Eigen::VectorXd& lambda, double bin) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  Eigen::Index start = 0;
  for (Eigen::Index k = 1; k <= lambda.size(); ++k) {
    if (k == lambda.size() || lambda(k) - lambda(k - 1) > bin) {
      out.emplace_back(start, k);
      start = k;
    }
  }
  // Largest λ first, i.e. smallest θ first.
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

double max_cross_overlap(const Subspace& a, const Subspace& b) {
  if (a.empty() || b.empty()) return 0.0;
  return cross_gram(a, b).cwiseAbs().maxCoeff();
}

bool is_p_orthogonal(const MixedState& s1, const MixedState& s2, int p, const OrthoOptions& opts) {
  check_p(s1, s2, p, "is_p_orthogonal");
  return max_cross_overlap(internal_space(s1, p, opts.density), internal_space(s2, p, opts.density)) <
         opts.tol;
}

bool is_strongly_orthogonal(const MixedState& s1, const MixedState& s2, const OrthoOptions& opts) {
  return is_p_orthogonal(s1, s2, 1, opts);
}

bool GradeReport::is_monotone() const noexcept {
  bool seen = false;
  for (bool v : orthogonal) {
    if (seen && !v) return false;
    seen = seen || v;
  }
  return true;
}

GradeReport grade(const MixedState& s1, const MixedState& s2, const OrthoOptions& opts) {
  if (s1.dim() != s2.dim()) throw ShapeError("grade: orbital basis mismatch");
  const int top = std::min(s1.particles(), s2.particles());
  if (top < 1) throw DomainError("grade: both states need at least one particle");
  GradeReport report;
  for (int p = 1; p <= top; ++p) {
    const double overlap = max_cross_overlap(internal_space(s1, p, opts.density),
                                             internal_space(s2, p, opts.density));
    const bool orth = overlap < opts.tol;
    report.orthogonal.push_back(orth);
    report.max_overlap.push_back(overlap);
    if (orth && !report.grade) report.grade = p;
  }
  return report;
}

std::optional<int> grade_bisect(const MixedState& s1, const MixedState& s2,
                                const OrthoOptions& opts) {
  if (s1.dim() != s2.dim()) throw ShapeError("grade: orbital basis mismatch");
  const int top = std::min(s1.particles(), s2.particles());
  if (top < 1) throw DomainError("grade: both states need at least one particle");
  if (!is_p_orthogonal(s1, s2, top, opts)) return std::nullopt;
  int lo = 1, hi = top;  // invariant: orthogonal at hi
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (is_p_orthogonal(s1, s2, mid, opts)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

std::vector<double> principal_angles(const Subspace& a, const Subspace& b) {
  check_pair(a, b);
  const bool a_small = a.dimension() <= b.dimension();
  const Subspace& small = a_small ? a : b;
  const Subspace& big = a_small ? b : a;

  std::vector<StateVector> all = small.basis();
  all.insert(all.end(), big.basis().begin(), big.basis().end());
  const Frame frame = Frame::covering(all);
  const Eigen::MatrixXcd bs = frame.columns(small.basis());
  const Eigen::MatrixXcd bb = frame.columns(big.basis());
  const Eigen::MatrixXcd m = bb.adjoint() * bs;

  Eigen::BDCSVD<Eigen::MatrixXcd> cos_svd(m);
  Eigen::VectorXd cosines = cos_svd.singularValues();  // descending
  const Eigen::MatrixXcd residual = bs - bb * m;
  Eigen::BDCSVD<Eigen::MatrixXcd> sin_svd(residual);
  Eigen::VectorXd sines = sin_svd.singularValues();  // descending
  std::reverse(sines.data(), sines.data() + sines.size());

  std::vector<double> angles;
  for (Eigen::Index k = 0; k < cosines.size(); ++k) {
    const double c = std::clamp(cosines(k), 0.0, 1.0);
    const double s = std::clamp(k < sines.size() ? sines(k) : 0.0, 0.0, 1.0);
    angles.push_back(c >= std::numbers::sqrt2 / 2.0 ? std::asin(s) : std::acos(c));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

std::vector<double> expand_to_operator_angles(const std::vector<double>& principal, int dim1,
                                              int dim2, int shared) {
  std::vector<double> out;
  for (std::size_t k = 0; k < principal.size(); ++k) {
    out.push_back(principal[k]);
    if (static_cast<int>(k) >= shared) out.push_back(principal[k]);
  }
  for (int k = std::min(dim1, dim2); k < std::max(dim1, dim2); ++k) out.push_back(kHalfPi);
  std::sort(out.begin(), out.end());
  return out;
}

ArakiOperators araki_operators(const Subspace& i1, const Subspace& i2) {
  check_pair(i1, i2);
  return operators_on(build_e(i1, i2));
}

std::vector<double> operator_angles(const Subspace& i1, const Subspace& i2) {
  std::vector<double> theta = diagonalize(araki_operators(i1, i2)).theta;
  std::sort(theta.begin(), theta.end());
  return theta;
}

AngleSpectrum araki_angles(const Subspace& i1, const Subspace& i2, const OrthoOptions& opts) {
  const ArakiOperators ops = araki_operators(i1, i2);
  const Eigenpairs eig = diagonalize(ops);
  AngleSpectrum out;
  out.p = i1.sector();
  out.dim1 = i1.dimension();
  out.dim2 = i2.dimension();
  out.dim_e = ops.e.dimension();
  out.principal = principal_angles(i1, i2);
  for (auto [begin, end] : bins(eig.lambda, opts.angle_bin)) {
    double theta = 0.0;
    for (Eigen::Index k = begin; k < end; ++k) theta += eig.theta[static_cast<std::size_t>(k)];
    theta /= static_cast<double>(end - begin);
    out.blocks.push_back({theta, static_cast<int>(end - begin)});
  }
  return out;
}

std::vector<AngleComponent> araki_decomposition(const Subspace& i1, const Subspace& i2,
                                                const OrthoOptions& opts) {
  check_pair(i1, i2);
  const EFrame f = build_e(i1, i2);
  const Eigenpairs eig = diagonalize(operators_on(f));

  const int dim = i1.dim();
  const int sector = i1.sector();
  std::vector<AngleComponent> out;
  for (auto [begin, end] : bins(eig.lambda, opts.angle_bin)) {
    const Eigen::MatrixXcd v = eig.vectors.middleCols(begin, end - begin);
    double theta = 0.0;
    for (Eigen::Index k = begin; k < end; ++k) theta += eig.theta[static_cast<std::size_t>(k)];
    theta /= static_cast<double>(end - begin);
    out.push_back({theta, lift(f, v, dim, sector), lift(f, intersect_with_block(v, f.a1), dim, sector),
                   lift(f, intersect_with_block(v, f.a2), dim, sector)});
  }
  return out;
}

AngleSpectrum araki_angles(const MixedState& s1, const MixedState& s2, int p,
                           const OrthoOptions& opts) {
  check_p(s1, s2, p, "araki_angles");
  return araki_angles(internal_space(s1, p, opts.density), internal_space(s2, p, opts.density),
                      opts);
}

std::vector<AngleComponent> araki_decomposition(const MixedState& s1, const MixedState& s2, int p,
                                                const OrthoOptions& opts) {
  check_p(s1, s2, p, "araki_decomposition");
  return araki_decomposition(internal_space(s1, p, opts.density),
                             internal_space(s2, p, opts.density), opts);
}

}  // namespace pgrade

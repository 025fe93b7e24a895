// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade/groupfn.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <thread>

#include "pgrade/combinatorics.hpp"
#include "pgrade/errors.hpp"
#include "pgrade/fock.hpp"

namespace pgrade {

namespace {

int parity(long long exponent) { return (exponent & 1) ? -1 : 1; }

// Receives the plan lengths and the piece sizes.
using KeepFn = std::function<bool(std::span<const int>, std::span<const int>)>;

// One index-sequence plan: per-piece lengths, per-piece position subsets, and its ρ.
struct Plan {
  std::vector<int> lengths;
  std::vector<std::vector<int>> positions;
  int rho;
};

std::vector<Plan> enumerate_plans(std::span<const int> caps, int total, const KeepFn* keep) {
  std::vector<Plan> plans;
  for_each_composition(caps, total, [&](std::span<const int> lengths) {
    if (keep && !(*keep)(lengths, caps)) return;
    std::vector<int> signs;
    for (std::size_t j = 0; j < caps.size(); ++j) {
      signs.push_back(lengths[j]);
      signs.push_back(caps[j] - lengths[j]);
    }
    const int rho = rho_sign(signs);
    std::vector<std::vector<std::vector<int>>> choices;
    for (std::size_t j = 0; j < caps.size(); ++j) choices.push_back(combinations(caps[j], lengths[j]));
    std::vector<std::size_t> odometer(caps.size(), 0);
    while (true) {
      Plan plan{{lengths.begin(), lengths.end()}, {}, rho};
      for (std::size_t j = 0; j < caps.size(); ++j) plan.positions.push_back(choices[j][odometer[j]]);
      plans.push_back(std::move(plan));
      std::size_t j = caps.size();
      while (j-- > 0) {
        if (++odometer[j] < choices[j].size()) break;
        odometer[j] = 0;
      }
      if (j == static_cast<std::size_t>(-1)) break;
    }
  });
  return plans;
}

struct PieceTerm {
  std::vector<int> orbitals;
  Complex coefficient;
};

std::vector<std::vector<PieceTerm>> decompose(std::span<const StateVector> pieces) {
  std::vector<std::vector<PieceTerm>> out;
  for (const auto& piece : pieces) {
    std::vector<PieceTerm> terms;
    for (const auto& [occ, c] : piece.terms()) terms.push_back({occ.indices(), c});
    out.push_back(std::move(terms));
  }
  return out;
}

struct SplitPiece {
  Occupation left;
  Occupation right;
  Complex weight;  // coefficient times ρ(I, Ī)
};

// Residual ket Z = Σ conj(<B0|left>) · right over the plans in [begin, end).
StateVector active_residual(const StateVector& active_bra,
                            const std::vector<std::vector<PieceTerm>>& pieces,
                            std::span<const Plan> plans, int dim, int rest) {
  StateVector z(dim, rest);
  std::vector<std::vector<SplitPiece>> parts(pieces.size());
  for (const Plan& plan : plans) {
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      parts[j].clear();
      for (const auto& term : pieces[j]) {
        Occupation left, right;
        const auto& chosen = plan.positions[j];
        std::size_t c = 0;
        for (std::size_t pos = 0; pos < term.orbitals.size(); ++pos) {
          if (c < chosen.size() && chosen[c] == static_cast<int>(pos)) {
            left.insert(term.orbitals[pos]);
            ++c;
          } else {
            right.insert(term.orbitals[pos]);
          }
        }
        const int sign = wedge_sign(left, right);
        parts[j].push_back({std::move(left), std::move(right), static_cast<double>(sign) * term.coefficient});
      }
    }
    std::function<void(std::size_t, const Occupation&, const Occupation&, Complex)> walk =
        [&](std::size_t j, const Occupation& l, const Occupation& r, Complex w) {
          if (j == parts.size()) {
            const Complex b = active_bra.coefficient(l);
            if (b != Complex{}) z.add(r, std::conj(b) * w);
            return;
          }
          for (const auto& part : parts[j]) {
            const int sl = wedge_sign(l, part.left);
            if (sl == 0) continue;
            const int sr = wedge_sign(r, part.right);
            if (sr == 0) continue;
            walk(j + 1, l | part.left, r | part.right,
                 w * part.weight * static_cast<double>(sl * sr));
          }
        };
    walk(0, Occupation{}, Occupation{}, static_cast<double>(plan.rho));
  }
  z.prune();
  return z;
}

// Sums f over `count` items split into contiguous chunks, one per worker, in worker order.
Complex reduce_in_chunks(std::size_t count, int threads,
                         const std::function<Complex(std::size_t, std::size_t)>& f) {
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(count, 1));
  if (workers == 1) return f(0, count);
  std::vector<Complex> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          partial[w] = f(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return std::accumulate(partial.begin(), partial.end(), Complex{});
}

/**
 * <B1 ∧ B2 ∧ ... | K1 ∧ ... ∧ KR> for bra factors B and ket pieces K of
 * arbitrary sizes. The first bra factor is contracted against every plan
 * (I1, ..., IR) with Σ|Ij| = |B1|; the residual is paired recursively with
 * the remaining bra factors.
 */
Complex pair_pieces(std::span<const StateVector> bra, std::span<const StateVector> pieces,
                    const KeepFn* keep, int threads, PlanStats* stats) {
  const int dim = bra.front().dim();
  if (bra.size() == 1) return inner(bra.front(), wedge_all(pieces, dim));

  std::vector<int> caps;
  int total = 0;
  for (const auto& p : pieces) {
    caps.push_back(p.particles());
    total += p.particles();
  }
  const int active = bra.front().particles();
  const std::vector<Plan> plans = enumerate_plans(caps, active, keep);
  if (stats) stats->plans += plans.size();
  const auto terms = decompose(pieces);
  const auto rest_bra = bra.subspan(1);
  return reduce_in_chunks(plans.size(), threads, [&](std::size_t begin, std::size_t end) {
    const StateVector z = active_residual(bra.front(), terms,
                                          std::span<const Plan>(plans).subspan(begin, end - begin),
                                          dim, total - active);
    if (z.is_zero()) return Complex{};
    return pair_pieces(rest_bra, std::span<const StateVector>(&z, 1), nullptr, 1, nullptr);
  });
}

void check_pairing(const GroupProduct& bra, const GroupProduct& ket) {
  if (bra.dim() != ket.dim()) throw ShapeError("bra and ket use different orbital bases");
  if (bra.factor_sizes() != ket.factor_sizes()) {
    throw ShapeError("bra and ket factor sizes must match position by position");
  }
}

void check_q(const GroupProduct& bra, int q) {
  const int n1 = bra.factor(0).particles();
  if (q < 1 || q > n1) {
    throw DomainError("declared orthogonality grade q = " + std::to_string(q) + " outside [1, " +
                      std::to_string(n1) + "]");
  }
}

using LeftTuple = std::vector<Occupation>;

// Groups the terms of H[ket] by the tuple of spectator-side left parts (J1, ..., Jr);
// each entry carries the summed operator image of the complementary parts.
std::map<LeftTuple, StateVector> operator_images(const QOperator& op, const GroupProduct& ket,
                                                 PlanStats* stats) {
  const int s = op.rank();
  const int n = ket.particles();
  const int dim = ket.dim();
  if (s > n) {
    throw DomainError("operator rank " + std::to_string(s) + " exceeds particle number " +
                      std::to_string(n));
  }
  if (op.max_orbital() > dim) throw ShapeError("operator references orbitals beyond the basis");

  const std::vector<int> caps = ket.factor_sizes();
  const std::vector<Plan> plans = enumerate_plans(caps, n - s, nullptr);
  if (stats) stats->operator_plans += plans.size();
  const auto terms = decompose(ket.factors());

  std::map<Occupation, StateVector> image_cache;
  auto image_of = [&](const Occupation& w) -> const StateVector& {
    auto it = image_cache.find(w);
    if (it == image_cache.end()) {
      it = image_cache.emplace(w, op.apply(StateVector::determinant(dim, w))).first;
    }
    return it->second;
  };

  std::map<LeftTuple, StateVector> out;
  std::vector<std::vector<SplitPiece>> parts(terms.size());
  for (const Plan& plan : plans) {
    for (std::size_t j = 0; j < terms.size(); ++j) {
      parts[j].clear();
      for (const auto& term : terms[j]) {
        Occupation left, right;
        const auto& chosen = plan.positions[j];
        std::size_t c = 0;
        for (std::size_t pos = 0; pos < term.orbitals.size(); ++pos) {
          if (c < chosen.size() && chosen[c] == static_cast<int>(pos)) {
            left.insert(term.orbitals[pos]);
            ++c;
          } else {
            right.insert(term.orbitals[pos]);
          }
        }
        const int sign = wedge_sign(left, right);
        parts[j].push_back({std::move(left), std::move(right), static_cast<double>(sign) * term.coefficient});
      }
    }
    LeftTuple lefts(terms.size());
    std::function<void(std::size_t, const Occupation&, Complex)> walk =
        [&](std::size_t j, const Occupation& r, Complex w) {
          if (j == parts.size()) {
            const StateVector& img = image_of(r);
            if (img.is_zero()) return;
            auto [it, fresh] = out.try_emplace(lefts, dim, s);
            for (const auto& [occ, c] : img.terms()) it->second.add(occ, w * c);
            return;
          }
          for (const auto& part : parts[j]) {
            const int sr = wedge_sign(r, part.right);
            if (sr == 0) continue;
            lefts[j] = part.left;
            walk(j + 1, r | part.right, w * part.weight * static_cast<double>(sr));
          }
        };
    walk(0, Occupation{}, static_cast<double>(plan.rho));
  }
  for (auto& [key, img] : out) img.prune();
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::vector<StateVector> pieces_for(const LeftTuple& lefts, const StateVector& image, int dim) {
  std::vector<StateVector> pieces;
  for (const auto& l : lefts) pieces.push_back(StateVector::determinant(dim, l));
  pieces.push_back(image);
  return pieces;
}

Evaluation matelem_impl(const GroupProduct& bra, const QOperator& op, const GroupProduct& ket,
                        const KeepFn* keep, int threads) {
  check_pairing(bra, ket);
  Evaluation out{};
  const auto images = operator_images(op, ket, &out.stats);
  std::vector<const std::pair<const LeftTuple, StateVector>*> entries;
  for (const auto& kv : images) entries.push_back(&kv);
  std::vector<PlanStats> per_entry(entries.size());
  out.value = reduce_in_chunks(entries.size(), threads, [&](std::size_t begin, std::size_t end) {
    Complex acc{};
    for (std::size_t i = begin; i < end; ++i) {
      const auto pieces = pieces_for(entries[i]->first, entries[i]->second, ket.dim());
      acc += pair_pieces(bra.factors(), pieces, keep, 1, &per_entry[i]);
    }
    return acc;
  });
  for (const auto& st : per_entry) out.stats.plans += st.plans;
  return out;
}

}  // namespace

GroupProduct::GroupProduct(std::vector<StateVector> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("a group product needs at least one factor");
  for (const auto& f : factors_) {
    if (f.particles() < 1) throw DomainError("group factors must carry at least one particle");
    if (f.dim() != factors_.front().dim()) throw ShapeError("group factors use different bases");
  }
}

int GroupProduct::particles() const noexcept {
  int n = 0;
  for (const auto& f : factors_) n += f.particles();
  return n;
}

std::vector<int> GroupProduct::factor_sizes() const {
  std::vector<int> out;
  for (const auto& f : factors_) out.push_back(f.particles());
  return out;
}

std::pair<int, GroupProduct> GroupProduct::with_active(std::size_t k) const {
  if (k >= factors_.size()) throw DomainError("with_active: factor index out of range");
  std::vector<StateVector> reordered{factors_[k]};
  int before = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j == k) continue;
    if (j < k) before += factors_[j].particles();
    reordered.push_back(factors_[j]);
  }
  return {parity(static_cast<long long>(factors_[k].particles()) * before),
          GroupProduct(std::move(reordered))};
}

int rho_sign(std::span<const int> lengths) {
  if (lengths.size() % 2 != 0) throw DomainError("rho_sign expects (|I_j|, n_j - |I_j|) pairs");
  long long exponent = 0;
  long long complement_so_far = 0;
  for (std::size_t j = 0; j < lengths.size(); j += 2) {
    exponent += static_cast<long long>(lengths[j]) * complement_so_far;
    complement_so_far += lengths[j + 1];
  }
  return parity(exponent);
}

int rho_twist(const std::vector<std::vector<int>>& columns) {
  long long exponent = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t l = j + 1; l < columns.size(); ++l) {
      const auto& cj = columns[j];
      const auto& cl = columns[l];
      for (std::size_t i = 0; i < cj.size(); ++i) {
        for (std::size_t k = 0; k < i && k < cl.size(); ++k) {
          exponent += static_cast<long long>(cl[k]) * cj[i];
        }
      }
    }
  }
  return parity(exponent);
}

TermCount term_count(int n, int n1, int q) {
  if (!(1 <= q && q <= n1 && n1 <= n)) {
    throw DomainError("term_count requires 1 <= q <= n1 <= n");
  }
  TermCount out{0, 0};
  for (int i = 0; i <= n1; ++i) {
    const std::uint64_t t = binomial(n1, i) * binomial(n - n1, n1 - i);
    out.total += t;
    if (i >= n1 - q + 1) out.pruned += t;
  }
  return out;
}

Evaluation overlap_group(const GroupProduct& bra, const GroupProduct& ket,
                         const EvalOptions& opts) {
  check_pairing(bra, ket);
  Evaluation out{};
  out.value = pair_pieces(bra.factors(), ket.factors(), nullptr, opts.threads, &out.stats);
  return out;
}

Evaluation overlap_group_pruned(const GroupProduct& bra, const GroupProduct& ket, int q,
                                const EvalOptions& opts) {
  check_pairing(bra, ket);
  check_q(bra, q);
  if (opts.verify) verify_active_orthogonality(bra, ket, q, opts.ortho);
  const int floor = bra.factor(0).particles() - q + 1;
  const KeepFn keep = [floor](std::span<const int> lengths, std::span<const int>) {
    return lengths[0] >= floor;
  };
  Evaluation out{};
  out.value = pair_pieces(bra.factors(), ket.factors(), &keep, opts.threads, &out.stats);
  return out;
}

StateVector apply_operator(const QOperator& op, const GroupProduct& ket) {
  StateVector out(ket.dim(), ket.particles());
  for (const auto& [lefts, image] : operator_images(op, ket, nullptr)) {
    const auto pieces = pieces_for(lefts, image, ket.dim());
    out += wedge_all(pieces, ket.dim());
  }
  return out;
}

Evaluation matelem(const GroupProduct& bra, const QOperator& op, const GroupProduct& ket,
                   const EvalOptions& opts) {
  return matelem_impl(bra, op, ket, nullptr, opts.threads);
}

Evaluation matelem_pruned(const GroupProduct& bra, const QOperator& op, const GroupProduct& ket,
                          int q, const EvalOptions& opts) {
  check_pairing(bra, ket);
  check_q(bra, q);
  if (opts.verify) verify_active_orthogonality(bra, ket, q, opts.ortho);
  const int n1 = bra.factor(0).particles();
  const std::size_t image = ket.size();
  KeepFn keep;
  if (opts.image_bound == ImageBound::spectator_degree) {
    keep = [n1, q, image](std::span<const int> lengths, std::span<const int>) {
      return lengths[0] + lengths[image] >= n1 - q + 1;
    };
  } else {
    keep = [q](std::span<const int> lengths, std::span<const int> caps) {
      return lengths[0] >= caps[0] - q + 1;
    };
  }
  return matelem_impl(bra, op, ket, &keep, opts.threads);
}

void verify_active_orthogonality(const GroupProduct& bra, const GroupProduct& ket, int q,
                                 const OrthoOptions& opts) {
  if (ket.size() < 2) return;
  const std::vector<StateVector> rest(ket.factors().begin() + 1, ket.factors().end());
  const StateVector spectators = wedge_all(rest, ket.dim());
  const StateVector& active = bra.factor(0);
  if (spectators.is_zero()) return;
  if (q > std::min(active.particles(), spectators.particles())) return;
  const auto s1 = MixedState::pure(active);
  const auto s2 = MixedState::pure(spectators);
  if (!is_p_orthogonal(s1, s2, q, opts)) {
    const auto report = grade(s1, s2, opts);
    throw VerificationError(
        "active bra group is not " + std::to_string(q) +
            "-orthogonal to the ket spectator product (violating p = " + std::to_string(q) +
            ", actual grade " + (report.grade ? std::to_string(*report.grade) : "none") + ")",
        q);
  }
}

}  // namespace pgrade

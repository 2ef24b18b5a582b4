#include "fredkin/zeno.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "fredkin/catalogue.hpp"

namespace fredkin {

ClosedSubspace::ClosedSubspace(std::vector<std::size_t> members, int n_max)
    : members_(std::move(members)), n_max_(n_max) {
  check_n_max(n_max);
}

std::optional<std::size_t> ClosedSubspace::local_index(const BasisState& s) const {
  const std::size_t full = index_of(s, n_max_);
  const auto it = std::find(members_.begin(), members_.end(), full);
  if (it == members_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

Eigen::MatrixXcd ClosedSubspace::restrict(const Eigen::MatrixXcd& full) const {
  const auto n = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      out(i, j) = full(static_cast<Eigen::Index>(members_[i]), static_cast<Eigen::Index>(members_[j]));
  return out;
}

Eigen::VectorXcd ClosedSubspace::restrict(const StateVector& full) const {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(dim()));
  for (std::size_t i = 0; i < dim(); ++i) out(static_cast<Eigen::Index>(i)) = full(static_cast<Eigen::Index>(members_[i]));
  return out;
}

StateVector ClosedSubspace::embed(const Eigen::VectorXcd& local) const {
  if (static_cast<std::size_t>(local.size()) != dim()) {
    throw std::invalid_argument("embed: vector length does not match subspace dimension");
  }
  StateVector out = StateVector::Zero(static_cast<Eigen::Index>(basis_dimension(n_max_)));
  for (std::size_t i = 0; i < dim(); ++i) out(static_cast<Eigen::Index>(members_[i])) = local(static_cast<Eigen::Index>(i));
  return out;
}

double ClosedSubspace::leakage(const Eigen::MatrixXcd& full) const {
  std::vector<bool> inside(static_cast<std::size_t>(full.rows()), false);
  for (std::size_t m : members_) inside[m] = true;
  double worst = 0.0;
  for (std::size_t m : members_) {
    const auto j = static_cast<Eigen::Index>(m);
    for (Eigen::Index i = 0; i < full.rows(); ++i) {
      if (inside[static_cast<std::size_t>(i)]) continue;
      worst = std::max({worst, std::abs(full(i, j)), std::abs(full(j, i))});
    }
  }
  return worst;
}

ClosedSubspace reachable_subspace(const Operator& h, std::span<const std::size_t> seed_indices,
                                  double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("reachable_subspace: tol must be positive");
  const int n_max = n_max_for_dimension(static_cast<std::size_t>(h.dim()));
  const auto dim = static_cast<std::size_t>(h.dim());
  std::vector<bool> seen(dim, false);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue;
  for (std::size_t s : seed_indices) {
    if (s >= dim) throw std::out_of_range("reachable_subspace: seed index out of range");
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const auto j = static_cast<Eigen::Index>(queue.front());
    queue.pop_front();
    for (Eigen::Index i = 0; i < h.dim(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (seen[ui]) continue;
      if (std::abs(h.matrix(i, j)) > tol || std::abs(h.matrix(j, i)) > tol) {
        seen[ui] = true;
        order.push_back(ui);
        queue.push_back(ui);
      }
    }
  }
  return ClosedSubspace(std::move(order), n_max);
}

ClosedSubspace reachable_subspace(const Operator& h, const BasisState& seed, double tol) {
  const int n_max = n_max_for_dimension(static_cast<std::size_t>(h.dim()));
  const std::size_t s = index_of(seed, n_max);
  return reachable_subspace(h, std::span<const std::size_t>(&s, 1), tol);
}

std::size_t ZenoDecomposition::dim() const {
  std::size_t n = 0;
  for (const auto& grp : groups) n += grp.multiplicity();
  return n;
}

const ZenoGroup* ZenoDecomposition::zero_group() const {
  for (const auto& grp : groups) {
    if (std::abs(grp.eigenvalue) <= degeneracy_tolerance) return &grp;
  }
  return nullptr;
}

ZenoDecomposition zeno_decompose(const Eigen::MatrixXcd& hc_restricted, double g,
                                 double degeneracy_tol) {
  if (hermiticity_defect(hc_restricted) > 1e-12) {
    throw std::invalid_argument("zeno_decompose: input is not Hermitian");
  }
  if (!(g > 0.0) || !(degeneracy_tol > 0.0)) {
    throw std::invalid_argument("zeno_decompose: g and degeneracy_tol must be positive");
  }
  ZenoDecomposition out;
  out.degeneracy_tolerance = degeneracy_tol * g;
  const Eigen::Index n = hc_restricted.rows();
  if (n == 0) return out;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hc_restricted);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXcd& vectors = solver.eigenvectors();

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && values(stop) - values(stop - 1) <= out.degeneracy_tolerance) ++stop;
    ZenoGroup grp;
    grp.eigenvalue = values.segment(start, stop - start).mean();
    // Re-orthonormalise inside the degenerate block.
    const Eigen::MatrixXcd block = vectors.middleCols(start, stop - start);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(block);
    grp.basis = qr.householderQ() * Eigen::MatrixXcd::Identity(n, stop - start);
    out.groups.push_back(std::move(grp));
    start = stop;
  }
  return out;
}

SpanCheck zero_subspace_span_check(const ZenoDecomposition& d,
                                   std::span<const Eigen::VectorXcd> candidates, double tol) {
  SpanCheck out;
  out.inside = true;
  const ZenoGroup* zero = d.zero_group();
  for (const Eigen::VectorXcd& v : candidates) {
    if (static_cast<std::size_t>(v.size()) != d.dim()) {
      throw std::invalid_argument("zero_subspace_span_check: candidate has wrong dimension");
    }
    const double norm = v.norm();
    if (norm == 0.0) throw std::invalid_argument("zero_subspace_span_check: zero candidate");
    double r = 1.0;
    if (zero) r = (v - zero->basis * (zero->basis.adjoint() * v)).norm() / norm;
    out.residuals.push_back(r);
    out.max_residual = std::max(out.max_residual, r);
    if (r > tol) out.inside = false;
  }
  return out;
}

StateVector EffectiveModel::lift(const Eigen::VectorXcd& amplitudes) const {
  if (static_cast<std::size_t>(amplitudes.size()) != embedding.size() || embedding.empty()) {
    throw std::invalid_argument("lift: amplitude count does not match the effective basis");
  }
  StateVector out = StateVector::Zero(embedding.front().size());
  for (std::size_t i = 0; i < embedding.size(); ++i) out += amplitudes(static_cast<Eigen::Index>(i)) * embedding[i];
  return out;
}

Eigen::VectorXcd EffectiveModel::lower(const StateVector& full) const {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(embedding.size()));
  for (std::size_t i = 0; i < embedding.size(); ++i) out(static_cast<Eigen::Index>(i)) = embedding[i].dot(full);
  return out;
}

namespace {

constexpr double kDecoupleTol = 1e-12;

// Zero group of the subspace split into vacuum ground states, the bright
// vectors the drive produces from them, and whatever is left.
struct ZeroGroupSplit {
  Eigen::MatrixXcd ground;  // subspace coordinates, one column per state
  std::vector<std::string> ground_labels;
  Eigen::MatrixXcd bright;
  Eigen::MatrixXcd rest;
  Eigen::MatrixXcd p0;
};

Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& m, double tol) {
  if (m.cols() == 0) return Eigen::MatrixXcd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  Eigen::Index rank = 0;
  while (rank < svd.singularValues().size() && svd.singularValues()(rank) > tol) ++rank;
  return svd.matrixU().leftCols(rank);
}

ZeroGroupSplit split_zero_group(const ClosedSubspace& subspace, const ModelParams& p,
                                const Eigen::MatrixXcd& drive) {
  const Operator total = build_total(p);
  if (subspace.leakage(total.matrix) > kDecoupleTol) {
    throw std::invalid_argument("subspace is not closed under the total Hamiltonian");
  }
  const Eigen::MatrixXcd hc = subspace.restrict(build_cavity_coupling(p).matrix);
  const ZenoDecomposition d = zeno_decompose(hc, p.g);
  const ZenoGroup* zero = d.zero_group();
  if (!zero) throw std::invalid_argument("subspace has no zero-eigenvalue Zeno group");

  ZeroGroupSplit split;
  split.p0 = zero->projector();
  const auto n = static_cast<Eigen::Index>(subspace.dim());

  std::vector<Eigen::Index> grounds;
  for (std::size_t i = 0; i < subspace.dim(); ++i) {
    const BasisState s = subspace.member_state(i);
    if (excitation_number(s) == 0) grounds.push_back(static_cast<Eigen::Index>(i));
  }
  if (grounds.empty()) throw std::invalid_argument("subspace holds no vacuum ground state");
  split.ground = Eigen::MatrixXcd::Zero(n, static_cast<Eigen::Index>(grounds.size()));
  for (std::size_t c = 0; c < grounds.size(); ++c) {
    split.ground(grounds[c], static_cast<Eigen::Index>(c)) = 1.0;
    split.ground_labels.push_back(label(subspace.member_state(static_cast<std::size_t>(grounds[c]))));
  }
  if ((split.ground - split.p0 * split.ground).norm() > 1e-10) {
    throw std::logic_error("vacuum ground state outside the zero Zeno group");
  }

  const Eigen::MatrixXcd projected = split.p0 * drive * split.p0;
  const double scale = std::max(1.0, projected.cwiseAbs().maxCoeff());
  Eigen::MatrixXcd candidates = projected * split.ground;
  candidates -= split.ground * (split.ground.adjoint() * candidates);
  split.bright = orthonormal_columns(candidates, 1e-9 * scale);

  // Phase convention: each bright vector couples to the last vacuum ground
  // state it reaches with a real, positive matrix element.
  for (Eigen::Index b = 0; b < split.bright.cols(); ++b) {
    for (Eigen::Index gidx = split.ground.cols() - 1; gidx >= 0; --gidx) {
      const Complex c = split.ground.col(gidx).dot(projected * split.bright.col(b));
      if (std::abs(c) > 1e-9 * scale) {
        split.bright.col(b) *= std::conj(c) / std::abs(c);
        break;
      }
    }
  }

  Eigen::MatrixXcd kept(n, split.ground.cols() + split.bright.cols());
  kept << split.ground, split.bright;
  split.rest = orthonormal_columns(zero->basis - kept * (kept.adjoint() * zero->basis), 1e-8);

  const double cross = (kept.adjoint() * projected * split.rest).cwiseAbs().maxCoeff();
  if (split.rest.cols() > 0 && cross > kDecoupleTol * scale) {
    throw std::logic_error("zero-group remainder couples to the drive");
  }
  return split;
}

EffectiveModel assemble(const ClosedSubspace& subspace, const Eigen::MatrixXcd& basis,
                        Eigen::MatrixXcd h, std::vector<std::string> labels) {
  EffectiveModel model;
  model.h_eff = 0.5 * (h + h.adjoint());
  model.labels = std::move(labels);
  for (Eigen::Index c = 0; c < basis.cols(); ++c) model.embedding.push_back(subspace.embed(basis.col(c)));
  return model;
}

}  // namespace

EffectiveModel effective_resonant(const ClosedSubspace& subspace, const ModelParams& p) {
  if (p.model != ModelKind::resonant) {
    throw std::invalid_argument("effective_resonant requires the resonant model");
  }
  if (subspace.n_max() != p.n_max) throw std::invalid_argument("subspace truncation mismatch");
  const Eigen::MatrixXcd drive = subspace.restrict(build_laser(p).matrix);
  const ZeroGroupSplit split = split_zero_group(subspace, p, drive);

  Eigen::MatrixXcd basis(split.ground.rows(), split.ground.cols() + split.bright.cols());
  basis << split.ground, split.bright;
  std::vector<std::string> labels = split.ground_labels;
  for (Eigen::Index b = 0; b < split.bright.cols(); ++b) labels.push_back("bright" + std::to_string(b));
  const Eigen::MatrixXcd h = basis.adjoint() * split.p0 * drive * split.p0 * basis;
  return assemble(subspace, basis, h, std::move(labels));
}

EffectiveModel effective_detuned(const ClosedSubspace& subspace, const ModelParams& p) {
  if (p.model != ModelKind::detuned) {
    throw std::invalid_argument("effective_detuned requires the detuned model");
  }
  if (subspace.n_max() != p.n_max) throw std::invalid_argument("subspace truncation mismatch");
  const Eigen::MatrixXcd laser = subspace.restrict(build_laser(p).matrix);
  const Eigen::MatrixXcd detuning = subspace.restrict(build_detuning(p).matrix);
  const ZeroGroupSplit split = split_zero_group(subspace, p, laser);

  const Eigen::MatrixXcd k = split.p0 * (laser + detuning) * split.p0;
  const Eigen::MatrixXcd& gs = split.ground;
  const Eigen::MatrixXcd& es = split.bright;
  Eigen::MatrixXcd h = gs.adjoint() * k * gs;
  if (es.cols() > 0) {
    const Eigen::MatrixXcd kee = es.adjoint() * k * es;
    const Eigen::MatrixXcd keg = es.adjoint() * k * gs;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(kee);
    if (!lu.isInvertible()) throw std::invalid_argument("excited block is singular; cannot eliminate");
    h -= keg.adjoint() * lu.solve(keg);
  }
  return assemble(subspace, gs, h, split.ground_labels);
}

StateVector analytic_state(ModelKind model, double t, const ModelParams& p) {
  p.validate();
  const StateVector phi1 = basis_vector(catalogue::swap_input(), p.n_max);
  const StateVector phi14 = basis_vector(catalogue::swap_output(), p.n_max);
  const Complex i_unit(0.0, 1.0);
  if (model == ModelKind::resonant) {
    const double theta = p.omega * t / std::sqrt(3.0);
    return 0.5 * (1.0 + std::cos(theta)) * phi1 + 0.5 * (1.0 - std::cos(theta)) * phi14 +
           i_unit * (std::sin(theta) / std::sqrt(2.0)) * catalogue::swap_bright_excited(p.n_max);
  }
  if (!(p.delta > 0.0)) throw std::invalid_argument("analytic_state: detuned model needs delta > 0");
  const double theta = p.omega * p.omega * t / (3.0 * p.delta);
  const Complex phase = std::exp(i_unit * theta);
  return 0.5 * (1.0 + phase) * phi1 + 0.5 * (1.0 - phase) * phi14;
}

}  // namespace fredkin

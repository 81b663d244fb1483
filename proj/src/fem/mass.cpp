#include "gpmhd/fem/mass.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

namespace gpmhd::fem {

namespace {
using Triplets = std::vector<Eigen::Triplet<double>>;

Triplets mass_triplets(const FeSpace &V) {
  Triplets t;
  const int nl = V.nloc();
  t.reserve(static_cast<size_t>(V.num_cells()) * nl * nl);
  for (int c = 0; c < V.num_cells(); ++c) {
    const int *dofs = V.cell_dofs(c);
    for (int a = 0; a < nl; ++a)
      for (int b = 0; b < nl; ++b) {
        double m = 0.0;
        for (int q = 0; q < V.nq(); ++q) m += V.wdet(c, q) * V.phi(q, a) * V.phi(q, b);
        t.emplace_back(dofs[a], dofs[b], m);
      }
  }
  return t;
}
}  // namespace

Eigen::SparseMatrix<double> consistent_mass(const FeSpace &V) {
  const auto t = mass_triplets(V);
  Eigen::SparseMatrix<double> M(V.num_dofs(), V.num_dofs());
  M.setFromTriplets(t.begin(), t.end());
  return M;
}

Eigen::VectorXd lumped_mass(const FeSpace &V) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(V.num_dofs());
  for (int c = 0; c < V.num_cells(); ++c) {
    const int *dofs = V.cell_dofs(c);
    for (int q = 0; q < V.nq(); ++q)
      for (int a = 0; a < V.nloc(); ++a) d[dofs[a]] += V.wdet(c, q) * V.phi(q, a);
  }
  const double tol = 1e-14 * d.cwiseAbs().maxCoeff();
  for (int i = 0; i < d.size(); ++i)
    if (!(d[i] > tol)) throw std::domain_error("lumped mass: zero or negative lumped entries");
  return d;
}

struct MassOperator::Block {
  std::vector<char> mask;
  Eigen::SparseMatrix<double> A;
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
};

MassOperator::MassOperator(const FeSpace &V, bool lumped, const PinMask &pinned)
    : lumped_(lumped), pinned_(pinned) {
  const int n = V.num_dofs();
  if (pinned_.empty()) pinned_.assign(n, 0);
  if (static_cast<int>(pinned_.size()) != n) throw std::invalid_argument("MassOperator: mask size");
  if (lumped_) {
    diag_ = lumped_mass(V);
    return;
  }
  const auto M = consistent_mass(V);
  diag_ = M * Eigen::VectorXd::Ones(n);
  block_of_component_.assign(kNumVars, -1);
  for (int c = 0; c < kNumVars; ++c) {
    std::vector<char> mask(n);
    for (int i = 0; i < n; ++i) mask[i] = (pinned_[i] >> c) & 1u;
    for (size_t b = 0; b < blocks_.size(); ++b)
      if (blocks_[b]->mask == mask) block_of_component_[c] = static_cast<int>(b);
    if (block_of_component_[c] >= 0) continue;
    auto blk = std::make_unique<Block>();
    blk->mask = mask;
    Triplets t;
    for (int k = 0; k < M.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(M, k); it; ++it)
        if (!mask[it.row()] && !mask[it.col()]) t.emplace_back(it.row(), it.col(), it.value());
    for (int i = 0; i < n; ++i)
      if (mask[i]) t.emplace_back(i, i, 1.0);
    blk->A.resize(n, n);
    blk->A.setFromTriplets(t.begin(), t.end());
    blk->cg.setTolerance(1e-12);
    blk->cg.compute(blk->A);
    block_of_component_[c] = static_cast<int>(blocks_.size());
    blocks_.push_back(std::move(blk));
  }
}

MassOperator::~MassOperator() = default;

void MassOperator::solve(const Field &r, Field &x) const {
  const int n = static_cast<int>(r.size());
  x.resize(n);
  if (lumped_) {
    for (int i = 0; i < n; ++i) {
      const double inv = 1.0 / diag_[i];
      for (int c = 0; c < kNumVars; ++c)
        x[i][c] = ((pinned_[i] >> c) & 1u) ? 0.0 : r[i][c] * inv;
    }
    return;
  }
  Eigen::VectorXd b(n), y(n);
  for (int c = 0; c < kNumVars; ++c) {
    const auto &blk = *blocks_[block_of_component_[c]];
    for (int i = 0; i < n; ++i) b[i] = blk.mask[i] ? 0.0 : r[i][c];
    if (b.lpNorm<Eigen::Infinity>() == 0.0) {
      y.setZero();
    } else {
      y = blk.cg.solve(b);
      if (blk.cg.info() != Eigen::Success)
        throw std::runtime_error("consistent mass: CG did not converge");
    }
    for (int i = 0; i < n; ++i) x[i][c] = blk.mask[i] ? 0.0 : y[i];
  }
}

std::vector<double> mesh_size_field(const FeSpace &V) {
  const int n = V.num_dofs();
  const int d = V.dim();
  const int nl = V.nloc();
  Triplets t = mass_triplets(V);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  for (int c = 0; c < V.num_cells(); ++c) {
    const int *dofs = V.cell_dofs(c);
    const double K = V.cell_volume(c);
    const double wgrad = std::pow(K, 2.0 / d);
    const double src = std::pow(K, 1.0 / d) / V.degree();
    for (int q = 0; q < V.nq(); ++q) {
      const double w = V.wdet(c, q);
      const double *g = V.dphi(c, q);
      for (int a = 0; a < nl; ++a) {
        rhs[dofs[a]] += w * src * V.phi(q, a);
        for (int b = 0; b < nl; ++b) {
          double gg = 0.0;
          for (int i = 0; i < d; ++i) gg += g[a * d + i] * g[b * d + i];
          t.emplace_back(dofs[a], dofs[b], w * wgrad * gg);
        }
      }
    }
  }
  Eigen::SparseMatrix<double> A(n, n);
  A.setFromTriplets(t.begin(), t.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A);
  if (ldlt.info() != Eigen::Success) throw std::runtime_error("mesh size: singular system");
  const Eigen::VectorXd h = ldlt.solve(rhs);
  return std::vector<double>(h.data(), h.data() + n);
}

}  // namespace gpmhd::fem

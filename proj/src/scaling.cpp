#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "parhiggs/kronecker.hpp"

namespace parhiggs {

namespace {

Eigen::MatrixXd to_double(const Matrix<Rat>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

// Inverse square root of a symmetric positive definite matrix; empty result
// if numerically singular.
std::optional<Eigen::MatrixXd> inv_sqrt(const Eigen::MatrixXd& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
  if (eig.info() != Eigen::Success) return std::nullopt;
  const auto& vals = eig.eigenvalues();
  if (vals.minCoeff() < 1e-14 * std::max(1.0, vals.maxCoeff())) return std::nullopt;
  return Eigen::MatrixXd(eig.eigenvectors() * vals.cwiseSqrt().cwiseInverse().asDiagonal() *
                         eig.eigenvectors().transpose());
}

// Largest subspace chain reachable from the joint kernel: U_{t+1} is the
// common preimage of V_t = span A(U_t). Any step with p dim V < q dim U is
// an exactly verified destabilizing pair.
std::optional<std::pair<Subspace<Rat>, Subspace<Rat>>> wong_witness(const MatrixTuple<Rat>& A) {
  auto preimage = [&A](const Subspace<Rat>& v) {
    // Rows annihilating V, then the joint kernel of those rows composed
    // with each arrow.
    Matrix<Rat> ann = kernel_basis(v.basis().transposed(), Rat(1)).transposed();
    Matrix<Rat> stacked(0, A.p);
    for (const auto& m : A.mats) stacked = stacked.vcat(ann * m);
    if (stacked.rows() == 0) return Subspace<Rat>::full(A.p, Rat(1));
    return Subspace<Rat>(A.p, kernel_basis(stacked, Rat(1)));
  };

  std::vector<Subspace<Rat>> candidates;
  candidates.push_back(Subspace<Rat>::full(A.p, Rat(1)));
  Subspace<Rat> u = preimage(Subspace<Rat>::zero(A.q));  // joint kernel
  for (std::size_t guard = 0; guard <= A.p; ++guard) {
    candidates.push_back(u);
    Subspace<Rat> next = preimage(image_span(A, u));
    if (next == u) break;
    u = next;
  }
  for (const auto& cand : candidates) {
    auto v = image_span(A, cand);
    if (A.p * v.dim() < A.q * cand.dim()) return std::make_pair(cand, v);
  }
  return std::nullopt;
}

}  // namespace

ScalingResult king_scaling(const MatrixTuple<Rat>& A, int iters, double tol) {
  A.check();
  ScalingResult res;
  std::vector<Eigen::MatrixXd> b;
  for (const auto& m : A.mats) b.push_back(to_double(m));
  double qd = static_cast<double>(A.q), pd = static_cast<double>(A.p);

  double logcap = 0.0;
  bool singular = false;
  double residual = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < iters; ++it) {
    Eigen::MatrixXd row_gram = Eigen::MatrixXd::Zero(A.q, A.q);
    for (const auto& m : b) row_gram += m * m.transpose();
    auto lw = inv_sqrt(qd * row_gram);
    if (!lw) {
      singular = true;
      break;
    }
    logcap += std::log((qd * row_gram).determinant()) / qd;
    for (auto& m : b) m = (*lw) * m;

    Eigen::MatrixXd col_gram = Eigen::MatrixXd::Zero(A.p, A.p);
    for (const auto& m : b) col_gram += m.transpose() * m;
    auto rw = inv_sqrt(pd * col_gram);
    if (!rw) {
      singular = true;
      break;
    }
    logcap += std::log((pd * col_gram).determinant()) / pd;
    for (auto& m : b) m = m * (*rw);

    Eigen::MatrixXd check = Eigen::MatrixXd::Zero(A.q, A.q);
    for (const auto& m : b) check += m * m.transpose();
    residual = (qd * check - Eigen::MatrixXd::Identity(A.q, A.q)).norm();
    if (residual < tol) break;
  }
  res.residual = singular ? std::numeric_limits<double>::infinity() : residual;
  res.iterations = it;
  res.capacity_estimate = singular ? 0.0 : std::exp(logcap);

  if (!singular && residual < tol) {
    res.status = ScalingStatus::LikelySemistable;
    return res;
  }
  // Convergence failed: only an exactly verified pair may claim instability.
  if (auto w = wong_witness(A)) {
    long g = std::gcd(static_cast<long>(A.p), static_cast<long>(A.q));
    res.status = ScalingStatus::Unstable;
    res.mu_value = Rat((static_cast<long>(A.p) / g) * static_cast<long>(w->second.dim()) -
                       (static_cast<long>(A.q) / g) * static_cast<long>(w->first.dim()));
    res.witness = std::move(w);
    return res;
  }
  res.status = ScalingStatus::Inconclusive;
  return res;
}

}  // namespace parhiggs

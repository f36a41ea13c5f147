#include "parhiggs/kronecker.hpp"

#include <random>

namespace parhiggs {

StabilityVerdict<Fp> king_bruteforce(const MatrixTuple<Fp>& A, std::uint64_t l,
                                     const EnumerationBudget& budget) {
  A.check();
  FpField field{l};
  long g = std::gcd(static_cast<long>(A.p), static_cast<long>(A.q));
  long pp = static_cast<long>(A.p) / g, qp = static_cast<long>(A.q) / g;

  StabilityVerdict<Fp> verdict;
  std::optional<std::pair<Subspace<Fp>, Subspace<Fp>>> equality;
  for (const auto& u : enumerate_all_subspaces(l, A.p, budget)) {
    auto v0 = image_span(A, u);
    std::size_t ud = u.dim(), vd = v0.dim();
    if (A.p * vd < A.q * ud) {
      verdict.status = Stability::Unstable;
      verdict.witness = {u, v0};
      verdict.mu_value = Rat(pp * static_cast<long>(vd) - qp * static_cast<long>(ud));
      return verdict;
    }
    if (!equality && ud > 0 && ud < A.p && (A.q * ud) % A.p == 0) {
      std::size_t vt = A.q * ud / A.p;
      if (vt >= vd) equality = {u, v0.extended_to(vt, field.one())};
    }
  }
  if (equality) {
    verdict.status = Stability::StrictlySemistable;
    verdict.witness = equality;
    verdict.mu_value = Rat(0);
  } else if (A.p == A.q && (A.r == 1 || A.r == 2)) {
    // Square quivers with one or two arrows never have stable points.
    verdict.status = Stability::StrictlySemistable;
  } else {
    verdict.status = Stability::Stable;
  }
  return verdict;
}

BlowupCertificate blowup_semistable_certificate(const MatrixTuple<Fp>& A, std::uint64_t l,
                                                std::size_t max_d, std::uint64_t seed,
                                                int attempts) {
  A.check();
  if (A.p != A.q)
    throw std::invalid_argument("blow-up certificate: only square tuples are supported");
  BlowupCertificate cert;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, l - 1);
  for (std::size_t d = 1; d <= max_d; ++d) {
    for (int attempt = 0; attempt < attempts; ++attempt) {
      std::vector<Matrix<Fp>> coeffs;
      Matrix<Fp> total(d * A.p, d * A.p, Fp(0, l));
      for (std::size_t i = 0; i < A.r; ++i) {
        Matrix<Fp> c(d, d);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) c(a, b) = Fp(dist(rng), l);
        coeffs.push_back(c);
        total = total + kron(A.mats[i], c);
      }
      if (rank(total) == d * A.p) {
        cert.certified = true;
        cert.d = d;
        cert.seed = seed;
        cert.coeffs = std::move(coeffs);
        return cert;
      }
    }
  }
  return cert;
}

ExistenceReport existence(std::size_t p, std::size_t q, std::size_t r) {
  if (p == 0 || q == 0 || r == 0) throw std::invalid_argument("existence: p, q, r positive");
  ExistenceReport rep;
  rep.all_semistable_stable = std::gcd(p, q) == 1;
  Rat slope = rat(static_cast<long>(p), static_cast<long>(q)) +
              rat(static_cast<long>(q), static_cast<long>(p));
  if (p == q && (r == 1 || r == 2))
    rep.cls = ExistenceClass::SpecialSquare;
  else if (slope < Rat(static_cast<long>(r)))
    rep.cls = ExistenceClass::HasStable;
  else
    rep.cls = ExistenceClass::Empty;
  return rep;
}

namespace {

// Coefficients (ascending) of the degree <= n polynomial through the points
// (t, values[t]) for t = 0..n, by Lagrange expansion.
std::vector<Rat> interpolate(const std::vector<Rat>& values) {
  std::size_t n = values.size();
  std::vector<Rat> coeffs(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> basis{Rat(1)};  // product of (x - t) over t != i
    Rat denom(1);
    for (std::size_t t = 0; t < n; ++t) {
      if (t == i) continue;
      basis.push_back(Rat(0));
      for (std::size_t k = basis.size() - 1; k > 0; --k)
        basis[k] = basis[k - 1] - Rat(static_cast<long>(t)) * basis[k];
      basis[0] *= -Rat(static_cast<long>(t));
      denom *= Rat(static_cast<long>(i)) - Rat(static_cast<long>(t));
    }
    Rat w = values[i] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += w * basis[k];
  }
  return coeffs;
}

}  // namespace

PencilResult pencil(const Matrix<Rat>& a1, const Matrix<Rat>& a2) {
  if (a1.rows() != a1.cols() || a2.rows() != a2.cols() || a1.rows() != a2.rows())
    throw std::invalid_argument("pencil: matrices must be square of equal size");
  std::size_t p = a1.rows();

  // det(A1 + t A2) has degree <= p; sample at t = 0..p.
  std::vector<Rat> samples;
  for (std::size_t t = 0; t <= p; ++t)
    samples.push_back(det(a1 + a2.scaled(Rat(static_cast<long>(t)))));
  auto poly = interpolate(samples);  // poly[k] = coefficient of t^k

  PencilResult res;
  res.form.assign(p + 1, Rat(0));
  for (std::size_t k = 0; k <= p && k < poly.size(); ++k) res.form[k] = poly[k];
  auto lead = std::find_if(res.form.begin(), res.form.end(),
                           [](const Rat& c) { return c != 0; });
  if (lead == res.form.end()) {
    res.semistable = false;
    return res;
  }
  res.semistable = true;
  Rat scale = *lead;
  for (auto& c : res.form) c /= scale;
  return res;
}

}  // namespace parhiggs

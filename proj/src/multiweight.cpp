#include "parhiggs/multiweight.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parhiggs {

namespace {

Rat row_sum(const std::vector<Rat>& row) {
  return std::accumulate(row.begin(), row.end(), Rat(0));
}

void check_row(const std::vector<Rat>& row, std::size_t expect, const char* name, std::size_t j,
               std::vector<std::string>& out) {
  if (row.size() != expect) {
    std::ostringstream os;
    os << name << " row at puncture " << (j + 1) << " has " << row.size() << " entries, expected "
       << expect;
    out.push_back(os.str());
    return;
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0 || row[i] >= 1) {
      std::ostringstream os;
      os << name << "_" << (i + 1) << " at puncture " << (j + 1) << " = " << to_string(row[i])
         << " is outside [0,1)";
      out.push_back(os.str());
    }
    if (i > 0 && row[i] < row[i - 1]) {
      std::ostringstream os;
      os << name << " weights at puncture " << (j + 1) << " are not nondecreasing at position "
         << (i + 1);
      out.push_back(os.str());
    }
  }
}

}  // namespace

Rat MultiWeight::alpha_norm() const {
  Rat t(0);
  for (const auto& row : alpha) t += row_sum(row);
  return t;
}

Rat MultiWeight::beta_norm() const {
  Rat t(0);
  for (const auto& row : beta) t += row_sum(row);
  return t;
}

std::vector<std::string> validate(const MultiWeight& mw) {
  std::vector<std::string> out;
  if (mw.p == 0 || mw.q == 0 || mw.s == 0) {
    out.push_back("p, q, s must all be positive");
    return out;
  }
  if (mw.alpha.size() != mw.s || mw.beta.size() != mw.s) {
    std::ostringstream os;
    os << "expected " << mw.s << " weight rows, got " << mw.alpha.size() << " alpha and "
       << mw.beta.size() << " beta rows";
    out.push_back(os.str());
    return out;
  }
  for (std::size_t j = 0; j < mw.s; ++j) {
    check_row(mw.alpha[j], mw.p, "alpha", j, out);
    check_row(mw.beta[j], mw.q, "beta", j, out);
    if (mw.alpha[j].size() == mw.p && mw.beta[j].size() == mw.q) {
      Rat total = row_sum(mw.alpha[j]) + row_sum(mw.beta[j]);
      if (!is_integer(total)) {
        std::ostringstream os;
        os << "weight sum at puncture " << (j + 1) << " = " << to_string(total)
           << " is not an integer";
        out.push_back(os.str());
      }
    }
  }
  return out;
}

void require_valid(const MultiWeight& mw) {
  auto violations = validate(mw);
  if (violations.empty()) return;
  std::string msg = "invalid multiweight:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw std::invalid_argument(msg);
}

CompactnessCertificate certificate(const MultiWeight& mw, long d) {
  require_valid(mw);
  CompactnessCertificate c;
  c.d = d;
  c.epsilon = 0;
  c.cond_separated = true;
  for (std::size_t j = 0; j < mw.s; ++j) {
    c.epsilon += mw.beta[j].back() - mw.alpha[j].front();
    if (!(mw.alpha[j].back() < mw.beta[j].front())) c.cond_separated = false;
  }
  Rat an = mw.alpha_norm(), bn = mw.beta_norm();
  c.j_interval = OpenInterval{bn - an, bn - an + 2 - c.epsilon};
  c.deg_u = -(an + bn - d) / 2;
  c.deg_v = -(an + bn + d) / 2;
  c.toledo = bn - an - d;
  c.cond_epsilon = c.epsilon < 2;
  c.cond_degree = c.j_interval.contains(Rat(d));
  return c;
}

std::vector<std::vector<Rat>> holonomy(const MultiWeight& mw) {
  require_valid(mw);
  std::vector<std::vector<Rat>> phases(mw.s);
  for (std::size_t j = 0; j < mw.s; ++j) {
    phases[j] = mw.alpha[j];
    phases[j].insert(phases[j].end(), mw.beta[j].begin(), mw.beta[j].end());
  }
  return phases;
}

ParabolicLine line_tensor(const ParabolicLine& a, const ParabolicLine& b) {
  if (a.weights.size() != b.weights.size())
    throw std::invalid_argument("line_tensor: puncture count mismatch");
  ParabolicLine out;
  out.degree = a.degree + b.degree;
  out.weights.reserve(a.weights.size());
  for (std::size_t j = 0; j < a.weights.size(); ++j) {
    Rat w = a.weights[j] + b.weights[j];
    mpz_class carry = rat_floor(w);
    out.degree += carry.get_si();
    out.weights.push_back(w - Rat(carry));
  }
  return out;
}

long line_hom_degree(const ParabolicLine& a, const ParabolicLine& b) {
  if (a.weights.size() != b.weights.size())
    throw std::invalid_argument("line_hom_degree: puncture count mismatch");
  long ties = 0;
  for (std::size_t j = 0; j < a.weights.size(); ++j)
    if (a.weights[j] >= b.weights[j]) ++ties;
  return b.degree - a.degree - ties;
}

TwistResult torsion_twist(const std::vector<long>& phi, const MultiWeight& mw, long d) {
  require_valid(mw);
  if (phi.size() != mw.s) throw std::invalid_argument("torsion_twist: need one residue per puncture");
  long n = static_cast<long>(mw.p + mw.q);
  std::vector<long> hat(mw.s);
  long total = 0;
  for (std::size_t j = 0; j < mw.s; ++j) {
    hat[j] = ((phi[j] % n) + n) % n;
    total += hat[j];
  }
  if (total % n != 0)
    throw std::invalid_argument("torsion_twist: residues must sum to 0 mod p+q");

  TwistResult res;
  res.line.degree = -total / n;
  res.line.weights.resize(mw.s);
  for (std::size_t j = 0; j < mw.s; ++j) res.line.weights[j] = rat(hat[j], n);

  res.mw = mw;
  long du_shift = 0, dv_shift = 0;  // carry corrections for the two summands
  for (std::size_t j = 0; j < mw.s; ++j) {
    Rat w = res.line.weights[j];
    for (auto& x : res.mw.alpha[j]) {
      Rat t = x + w;
      du_shift += rat_floor(t).get_si();
      x = rat_frac(t);
    }
    for (auto& x : res.mw.beta[j]) {
      Rat t = x + w;
      dv_shift += rat_floor(t).get_si();
      x = rat_frac(t);
    }
    std::sort(res.mw.alpha[j].begin(), res.mw.alpha[j].end());
    std::sort(res.mw.beta[j].begin(), res.mw.beta[j].end());
  }
  // d tracks deg U - deg V; each summand gains rank * line degree plus its
  // own carries under the tensor.
  res.d = d + (static_cast<long>(mw.p) - static_cast<long>(mw.q)) * res.line.degree + du_shift -
          dv_shift;
  return res;
}

}  // namespace parhiggs

#include "traceclt/ensembles/sampler.hpp"

#include <cmath>
#include <sstream>

namespace traceclt::ensembles {

namespace {

using cd = std::complex<double>;

// Redraw limit for the probability-zero event of a singular Ginibre draw.
constexpr int kMaxRedraws = 16;
constexpr double kPivotFloor = 1e-300;

[[noreturn]] void fail_redraw(Group g, int n, const PhiloxStream& rng) {
  std::ostringstream os;
  os << "repeated rank-deficient Ginibre draw for " << group_tag(g) << "(" << n << "), seed "
     << rng.seed() << " stream " << rng.stream();
  throw IntegrityError(os.str());
}

void require_dimension(int n) {
  if (n < 1) throw std::invalid_argument("group parameter n must be at least 1");
}

MatrixSample wrap(Eigen::MatrixXcd entries, Group g, int n, const PhiloxStream& rng) {
  MatrixSample s;
  s.entries = std::move(entries);
  s.group = g;
  s.n = n;
  s.seed = rng.seed();
  s.stream = rng.stream();
  return s;
}

cd complex_normal(PhiloxStream& rng) {
  const double re = rng.normal();
  return {re, rng.normal()};
}

}  // namespace

std::string MatrixSample::provenance() const {
  std::ostringstream os;
  os << group_tag(group) << "(" << (group == Group::UnitarySymplectic ? 2 * n : n) << ") seed " << seed
     << " stream " << stream;
  return os.str();
}

bool MembershipResiduals::within(Group g, const MembershipTolerance& tol) const {
  if (!(unitarity <= tol.unitarity)) return false;
  switch (g) {
    case Group::SpecialOrthogonal:
      return imaginary == 0.0 && determinant <= tol.determinant;
    case Group::UnitarySymplectic:
      return symplectic <= tol.symplectic;
    case Group::Unitary:
      return true;
  }
  return false;
}

Eigen::MatrixXcd symplectic_form(int n) {
  Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n).setIdentity();
  J.bottomLeftCorner(n, n) = -Eigen::MatrixXcd::Identity(n, n);
  return J;
}

MembershipResiduals membership_residuals(const MatrixSample& m) {
  MembershipResiduals r;
  const Eigen::Index d = m.entries.rows();
  if (m.group == Group::SpecialOrthogonal) {
    r.imaginary = m.entries.imag().cwiseAbs().maxCoeff();
    const Eigen::MatrixXd re = m.entries.real();
    r.unitarity = (re.transpose() * re - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
    r.determinant = std::abs(re.determinant() - 1.0);
    return r;
  }
  r.unitarity =
      (m.entries.adjoint() * m.entries - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (m.group == Group::UnitarySymplectic) {
    const Eigen::MatrixXcd J = symplectic_form(m.n);
    r.symplectic = (m.entries * J * m.entries.transpose() - J).cwiseAbs().maxCoeff();
  }
  return r;
}

void require_membership(const MatrixSample& m, const MembershipTolerance& tol) {
  const MembershipResiduals r = membership_residuals(m);
  if (r.within(m.group, tol)) return;
  std::ostringstream os;
  os.precision(3);
  os << "membership check failed for " << m.provenance() << ": unitarity " << r.unitarity;
  if (m.group == Group::SpecialOrthogonal)
    os << ", imaginary " << r.imaginary << ", det error " << r.determinant;
  if (m.group == Group::UnitarySymplectic) os << ", symplectic " << r.symplectic;
  throw IntegrityError(os.str());
}

MatrixSample sample_unitary(int n, PhiloxStream& rng) {
  require_dimension(n);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Eigen::MatrixXcd G(n, n);
    for (Eigen::Index c = 0; c < n; ++c)
      for (Eigen::Index r = 0; r < n; ++r) G(r, c) = complex_normal(rng);
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
    const auto diag = qr.matrixQR().diagonal();
    if (diag.cwiseAbs().minCoeff() < kPivotFloor) continue;
    Eigen::MatrixXcd Q = qr.householderQ();
    // G = QR with R_kk = |R_kk| e^{i phi_k}; absorbing the phases into Q makes
    // the factorization unique (positive diagonal) and the law of Q Haar.
    for (Eigen::Index k = 0; k < n; ++k) Q.col(k) *= diag(k) / std::abs(diag(k));
    return wrap(std::move(Q), Group::Unitary, n, rng);
  }
  fail_redraw(Group::Unitary, n, rng);
}

MatrixSample sample_special_orthogonal(int n, PhiloxStream& rng) {
  require_dimension(n);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Eigen::MatrixXd G(n, n);
    for (Eigen::Index c = 0; c < n; ++c)
      for (Eigen::Index r = 0; r < n; ++r) G(r, c) = rng.normal();
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
    const auto diag = qr.matrixQR().diagonal();
    if (diag.cwiseAbs().minCoeff() < kPivotFloor) continue;
    Eigen::MatrixXd Q = qr.householderQ();
    for (Eigen::Index k = 0; k < n; ++k)
      if (diag(k) < 0) Q.col(k) = -Q.col(k);
    // Haar on O(n) now; right translation by diag(-1, 1, ..., 1) carries the
    // det = -1 coset onto SO(n) and preserves Haar measure.
    if (Q.determinant() < 0) Q.col(0) = -Q.col(0);
    return wrap(Q.cast<cd>(), Group::SpecialOrthogonal, n, rng);
  }
  fail_redraw(Group::SpecialOrthogonal, n, rng);
}

MatrixSample sample_symplectic(int n, PhiloxStream& rng) {
  require_dimension(n);
  const Eigen::Index d = 2 * static_cast<Eigen::Index>(n);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    // Column k and its quaternionic partner phi(q) = -J conj(q) span one
    // quaternionic line; Gram-Schmidt over these pairs keeps the R factor
    // quaternion-diagonal with positive real entries, which pins Q to Haar.
    Eigen::MatrixXcd Q(d, d);
    bool degenerate = false;
    for (Eigen::Index k = 0; k < n && !degenerate; ++k) {
      Eigen::VectorXcd v(d);
      for (Eigen::Index r = 0; r < d; ++r) v(r) = complex_normal(rng);
      const double initial = v.norm();
      for (int pass = 0; pass < 2 && k > 0; ++pass) {
        v -= Q.leftCols(k) * (Q.leftCols(k).adjoint() * v);
        v -= Q.middleCols(n, k) * (Q.middleCols(n, k).adjoint() * v);
      }
      const double norm = v.norm();
      if (!(norm > 1e-12 * initial)) {
        degenerate = true;
        break;
      }
      v /= norm;
      Q.col(k) = v;
      Q.col(n + k).head(n) = -v.tail(n).conjugate();
      Q.col(n + k).tail(n) = v.head(n).conjugate();
    }
    if (degenerate) continue;
    return wrap(std::move(Q), Group::UnitarySymplectic, n, rng);
  }
  fail_redraw(Group::UnitarySymplectic, n, rng);
}

MatrixSample sample_haar(Group g, int n, PhiloxStream& rng) {
  switch (g) {
    case Group::SpecialOrthogonal:
      return sample_special_orthogonal(n, rng);
    case Group::UnitarySymplectic:
      return sample_symplectic(n, rng);
    case Group::Unitary:
      return sample_unitary(n, rng);
  }
  throw std::invalid_argument("unknown group");
}

}  // namespace traceclt::ensembles

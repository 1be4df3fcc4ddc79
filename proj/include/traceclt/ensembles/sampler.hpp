#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "traceclt/ensembles/rng.hpp"
#include "traceclt/symfunc/group.hpp"

namespace traceclt::ensembles {

/// Raised when a sample or a derived quantity fails a numerical sanity check.
/// The message always carries the seed and stream id needed to replay it.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixSample {
  Eigen::MatrixXcd entries;
  Group group = Group::Unitary;
  int n = 0;  // group parameter; USp(2n) stores 2n x 2n entries
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  int dimension() const { return static_cast<int>(entries.rows()); }
  std::string provenance() const;
};

struct MembershipTolerance {
  double unitarity = 1e-10;
  double determinant = 1e-8;
  double symplectic = 1e-10;
};

/// Max-norm residuals of the defining relations. Fields that do not apply to
/// the sample's group are left at zero.
struct MembershipResiduals {
  double unitarity = 0.0;        // |M*M - I|_max
  double imaginary = 0.0;        // SO: max |Im M_ik|
  double determinant = 0.0;      // SO: |det M - 1|
  double symplectic = 0.0;       // USp: |M J M^t - J|_max

  bool within(Group g, const MembershipTolerance& tol = {}) const;
};

MembershipResiduals membership_residuals(const MatrixSample& m);
/// Throws IntegrityError when a residual exceeds its tolerance.
void require_membership(const MatrixSample& m, const MembershipTolerance& tol = {});

/// The alternating form [[0, I], [-I, 0]] of size 2n.
Eigen::MatrixXcd symplectic_form(int n);

MatrixSample sample_unitary(int n, PhiloxStream& rng);
MatrixSample sample_special_orthogonal(int n, PhiloxStream& rng);
/// Returns the 2n x 2n complex representation [[A, B], [-conj B, conj A]].
MatrixSample sample_symplectic(int n, PhiloxStream& rng);
MatrixSample sample_haar(Group g, int n, PhiloxStream& rng);

}  // namespace traceclt::ensembles

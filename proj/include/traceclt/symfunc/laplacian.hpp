#pragma once

#include <stdexcept>

#include "traceclt/symfunc/power_sum.hpp"

namespace traceclt {

/// Raised when a monomial has no closed-form Laplacian image here. The
/// supported generators are 1, p_j, p_{j,j} and, on U(n), p_j*pbar_j and the
/// conjugates pbar_j, pbar_{j,j}.
class OutsideLaplacianDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedOrder : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Image of a single supported monomial under the group Laplacian.
PowerSumPoly laplacian(const Monomial& m, Group group, int truncation_order = 1);

/// Linear extension over the term map.
PowerSumPoly laplacian(const PowerSumPoly& f);

/// e^{t Delta} f = f + t Delta f + O(t^2). Requires truncation order exactly 1:
/// a second application of Delta would leave the supported domain.
PowerSumPoly heat_first_order(const PowerSumPoly& f);

}  // namespace traceclt

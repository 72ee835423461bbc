// Truncated formal power series over Rat, dense in one variable. Used to
// evaluate the universal ch/td/euler expressions on nilpotent first Chern
// classes; everything is exact, truncation order is the ambient dimension.
#pragma once

#include "rational.hpp"

#include <vector>

namespace orb {

// coeff[k] is the order-k coefficient; all vectors have the same logical
// truncation order n, i.e. size n+1 (shorter inputs are treated as zero-padded).
using Series = std::vector<Rat>;

Series series_mul(const Series& a, const Series& b, int order);
// 1/a, requires a[0] != 0.
Series series_inv(const Series& a, int order);
// log(a), requires a[0] == 1.
Series series_log(const Series& a, int order);
// exp(a), requires a[0] == 0.
Series series_exp(const Series& a, int order);

// (1 - e^{-x})/x = 1 - x/2 + x^2/6 - ...; unit constant term.
Series series_expm1_over_x(int order);
// log(x / (1 - e^{-x})) = x/2 - x^2/24 + ...; zero constant term. The Todd
// series of a line with first Chern class x is exp of this.
Series series_log_todd(int order);
// log(1 + x) = x - x^2/2 + ...
Series series_log1p(int order);

} // namespace orb

#include "lienard/tridiagonal.hpp"

#include <stdexcept>

namespace lienard {

std::vector<double> SymmetricTridiagonal::apply(std::span<const double> x) const {
  const std::size_t n = diag.size();
  if (x.size() != n) throw std::invalid_argument("SymmetricTridiagonal::apply: size mismatch");
  if (n != 0 && off.size() + 1 != n) throw std::logic_error("SymmetricTridiagonal: malformed off-diagonal");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += off[i - 1] * x[i - 1];
    if (i + 1 < n) acc += off[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

}  // namespace lienard

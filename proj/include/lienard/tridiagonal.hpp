#pragma once

#include <span>
#include <vector>

namespace lienard {

/// Symmetric tridiagonal matrix: diag has n entries, off has n − 1 (off[i]
/// couples rows i and i + 1).
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }

  /// y = M x with zero (Dirichlet) ghost values beyond both ends.
  std::vector<double> apply(std::span<const double> x) const;
};

}  // namespace lienard

#pragma once

namespace twopoint {

/// Constraint data of the physical sector: n_a + n_b + 1 = M, j = (M - 1) / 2.
/// Half-integers are carried as doubled integers (two_j = 2j).
class SectorLabel {
 public:
  /// Throws DomainError for M < 1.
  explicit SectorLabel(int mass);

  int mass() const { return two_j_ + 1; }
  int two_j() const { return two_j_; }
  double j() const { return 0.5 * two_j_; }
  int dim() const { return two_j_ + 1; }

  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;

 private:
  int two_j_;
};

}  // namespace twopoint

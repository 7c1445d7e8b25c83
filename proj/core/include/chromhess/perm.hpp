#ifndef CHROMHESS_PERM_HPP
#define CHROMHESS_PERM_HPP

#include <string>
#include <vector>

namespace chromhess {

/// Permutation of {0, ..., n-1}, stored as its image vector.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  static Perm reversal(int n);
  /// All permutations of {0..n-1} in lexicographic order of image vectors.
  static std::vector<Perm> all(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  /// Composition: (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  /// this composed on the right with the transposition (i j):
  /// swaps the images at positions i and j.
  Perm with_positions_swapped(int i, int j) const;

  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  /// Cycle lengths, weakly decreasing.
  std::vector<int> cycle_type() const;
  int fixed_points() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.images_ < b.images_;
  }

  std::string str() const;  // one-line notation, 1-based

private:
  std::vector<int> images_;
};

}  // namespace chromhess

#endif

#include "chromhess/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chromhess/errors.hpp"

namespace chromhess {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= n() || seen[static_cast<size_t>(v)]) {
      throw Error("invalid permutation image vector");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::reversal(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = n - 1 - i;
  return Perm(std::move(img));
}

std::vector<Perm> Perm::all(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < n(); ++i) img[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  return Perm(std::move(img));
}

Perm operator*(const Perm& a, const Perm& b) {
  std::vector<int> img(b.images_.size());
  for (int i = 0; i < b.n(); ++i) img[static_cast<size_t>(i)] = a(b(i));
  return Perm(std::move(img));
}

Perm Perm::with_positions_swapped(int i, int j) const {
  std::vector<int> img = images_;
  std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]);
  return Perm(std::move(img));
}

int Perm::inversions() const {
  int count = 0;
  for (int i = 0; i < n(); ++i) {
    for (int j = i + 1; j < n(); ++j) {
      if ((*this)(i) > (*this)(j)) ++count;
    }
  }
  return count;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int i = 0; i < n(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    int j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      j = (*this)(j);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Perm::fixed_points() const {
  int count = 0;
  for (int i = 0; i < n(); ++i) {
    if ((*this)(i) == i) ++count;
  }
  return count;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n(); ++i) {
    if (i) os << ",";
    os << images_[static_cast<size_t>(i)] + 1;
  }
  os << "]";
  return os.str();
}

}  // namespace chromhess

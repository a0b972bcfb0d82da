#pragma once

#include "hemi/errors.hpp"

#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hemi {

/// A bijection of {0, ..., degree-1} stored as its image array.
/// Products compose right to left: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
      if (x < 0 || x >= degree() || seen[x]) throw error("Permutation: image array is not a bijection");
      seen[x] = 1;
    }
  }

  static Permutation identity(int degree) {
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(degree));
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>> &cycles) {
    Permutation p = identity(degree);
    for (const auto &c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) p.images_[c[i]] = c[(i + 1) % c.size()];
    return Permutation(std::move(p.images_));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int> &images() const { return images_; }
  std::span<const int> span() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (int i = 0; i < degree(); ++i) p.images_[images_[i]] = i;
    return p;
  }

  friend Permutation operator*(const Permutation &a, const Permutation &b) {
    if (a.degree() != b.degree()) throw DegreeMismatch("Permutation: degree mismatch in product");
    Permutation p;
    p.images_.resize(b.images_.size());
    for (int i = 0; i < b.degree(); ++i) p.images_[i] = a.images_[b.images_[i]];
    return p;
  }

  Permutation pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    Permutation result = identity(degree());
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// Least common multiple of the cycle lengths.
  long long order() const {
    std::vector<char> seen(images_.size(), 0);
    long long ord = 1;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<int> c;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::string cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto &c : cs) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

  friend std::ostream &operator<<(std::ostream &os, const Permutation &p) { return os << p.cycle_string(); }

private:
  std::vector<int> images_;
};

inline Permutation commutator(const Permutation &a, const Permutation &b) {
  return a.inverse() * b.inverse() * a * b;
}

} // namespace hemi

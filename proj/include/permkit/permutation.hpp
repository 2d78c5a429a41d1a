#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permkit/errors.hpp"

namespace permkit {

using Cycle = std::vector<int>;

// A permutation of {1,...,n} in one-line notation: the value at position k
// is the image of k. One-indexed throughout; the degree n is part of the
// value, so the identities of S_1 and S_9 are distinct. Instances are
// validated on construction and immutable afterwards, hence safe to share
// across threads.
class Permutation {
 public:
  static Permutation identity(int n) {
    if (n < 1) fail(errc::out_of_range, "degree must be >= 1");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    return Permutation(std::move(img));
  }

  static Permutation from_one_line(std::vector<int> images) {
    if (images.empty()) fail(errc::empty_input, "one-line form must be nonempty");
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : images) {
      if (v < 1 || v > n)
        fail(errc::out_of_range,
             "image " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (seen[v]) fail(errc::duplicate_image, "image " + std::to_string(v) + " repeats");
      seen[v] = 1;
    }
    return Permutation(std::move(images));
  }

  // Accepts cycles in any order and rotation; an element may appear at most
  // once across all cycles. Unlisted elements are fixed points.
  static Permutation from_cycles(int n, const std::vector<Cycle>& cycles) {
    if (n < 1) fail(errc::out_of_range, "degree must be >= 1");
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const Cycle& c : cycles) {
      for (int v : c) {
        if (v < 1 || v > n)
          fail(errc::out_of_range,
               "cycle entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen[v])
          fail(errc::repeated_element, "element " + std::to_string(v) + " appears twice");
        seen[v] = 1;
      }
      for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()];
    }
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(images_.size()); }

  // Image of k, for k in 1..n.
  int operator()(int k) const { return images_[static_cast<std::size_t>(k) - 1]; }

  const std::vector<int>& one_line() const { return images_; }

  // Canonical cycle form: fixed points dropped, each cycle rotated so its
  // minimum comes first, cycles ordered by minimum. Scanning start points in
  // increasing order yields exactly this form.
  std::vector<Cycle> to_cycles() const {
    const int n = degree();
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Cycle> cycles;
    for (int start = 1; start <= n; ++start) {
      if (visited[start] || images_[start - 1] == start) continue;
      Cycle c;
      int v = start;
      do {
        visited[v] = 1;
        c.push_back(v);
        v = images_[v - 1];
      } while (v != start);
      cycles.push_back(std::move(c));
    }
    return cycles;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int k = 1; k <= degree(); ++k) inv[images_[k - 1] - 1] = k;
    return Permutation(std::move(inv));
  }

  // (-1)^(n - c) with c the number of cycles including fixed points.
  int sign() const {
    const int n = degree();
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    int cycle_count = 0;
    for (int start = 1; start <= n; ++start) {
      if (visited[start]) continue;
      ++cycle_count;
      for (int v = start; !visited[v]; v = images_[v - 1]) visited[v] = 1;
    }
    return ((n - cycle_count) % 2 == 0) ? 1 : -1;
  }

  bool is_involution() const {
    for (int k = 1; k <= degree(); ++k)
      if (images_[images_[k - 1] - 1] != k) return false;
    return true;
  }

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// result(k) = p(q(k)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    fail(errc::degree_mismatch, "compose requires equal degrees");
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) img[k - 1] = p(q(k));
  return Permutation::from_one_line(std::move(img));
}

}  // namespace permkit

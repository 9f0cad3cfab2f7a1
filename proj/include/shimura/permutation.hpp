#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shimura {

/// A permutation of {0, ..., degree-1}. Products are functional
/// composition: (a * b)(i) = a(b(i)), so b acts first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Parses cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
  /// "()" is the identity. Throws std::invalid_argument on malformed input.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;

  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace shimura

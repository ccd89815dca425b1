#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cfp {

inline constexpr double kUnitNormTolerance = 1e-9;

/// A real vector with unit Euclidean norm. Construction validates the norm,
/// so every UnitVector in the program satisfies |sum x_j^2 - 1| <= 1e-9.
class UnitVector {
 public:
  /// Throws InvalidArgument if `components` is empty or not unit norm.
  explicit UnitVector(std::vector<double> components);

  std::size_t size() const { return components_.size(); }
  double operator[](std::size_t j) const { return components_[j]; }
  std::span<const double> components() const { return components_; }

  UnitVector operator-() const;

 private:
  std::vector<double> components_;
};

/// Bit string with elements in {0, 1}.
class BinaryString {
 public:
  BinaryString() = default;
  explicit BinaryString(std::vector<std::uint8_t> bits);
  /// Parses '0'/'1' characters; whitespace is skipped, anything else throws.
  static BinaryString parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const BinaryString&, const BinaryString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::size_t hamming_distance(const BinaryString& a, const BinaryString& b);
BinaryString bitwise_xor(const BinaryString& a, const BinaryString& b);
std::size_t hamming_weight(const BinaryString& a);

/// v / ||v||_2. Throws ZeroNormError for the zero vector, InvalidArgument
/// for empty or non-finite input.
UnitVector normalize(std::span<const double> v);

/// sum_j (x_j - y_j)^2, in [0, 4] for unit vectors.
double euclidean_distance_sq(const UnitVector& x, const UnitVector& y);

double inner_product(const UnitVector& x, const UnitVector& y);

/// <x, y> = 1 - d_sq / 2. Requires d_sq in [0, 4].
double inner_product_from_distance(double d_sq);

/// Uniform on the sphere S^{n-1}: normalized standard normals drawn from the
/// counter generator, so the result depends only on (n, seed).
UnitVector random_unit_vector(std::size_t n, std::uint64_t seed);

BinaryString random_binary_string(std::size_t n_bits, std::uint64_t seed);

/// Binary linear code with a pseudorandom full-rank generator matrix.
///
/// Row i of the generator is drawn from the counter generator keyed by the
/// seed; if the drawn matrix is rank deficient it is redrawn under the next
/// derived seed, so encoding is always injective.
class RandomLinearCode {
 public:
  RandomLinearCode(std::size_t n_bits, std::size_t rate_inverse, std::uint64_t seed);

  std::size_t message_bits() const { return n_bits_; }
  std::size_t length() const { return length_; }

  BinaryString encode(const BinaryString& message) const;

  /// Minimum nonzero codeword weight by enumerating all 2^n_bits - 1
  /// messages. Only allowed for n_bits <= 20.
  std::size_t minimum_distance() const;

 private:
  bool full_rank() const;

  std::size_t n_bits_;
  std::size_t length_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> rows_;  // n_bits_ rows, words_per_row_ words each
};

/// Maps bit b to (-1)^b / sqrt(m); equal bits contribute 0 and differing
/// bits 4/m to the squared distance.
UnitVector codeword_to_unit_vector(const BinaryString& codeword);

/// Encodes `s` with RandomLinearCode(s.size(), rate_inverse, seed) and maps
/// the codeword to a unit vector of length rate_inverse * s.size().
UnitVector ecc_encode(const BinaryString& s, std::size_t rate_inverse, std::uint64_t seed);

}  // namespace cfp

#include "cfp/vectors.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>

#include "cfp/errors.h"
#include "cfp/rng.h"

namespace cfp {

namespace {

double sum_of_squares(std::span<const double> v) {
  return std::transform_reduce(v.begin(), v.end(), 0.0, std::plus<>(),
                               [](double a) { return a * a; });
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

}  // namespace

UnitVector::UnitVector(std::vector<double> components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("unit vector must have at least one component");
  const double norm_sq = sum_of_squares(components_);
  if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > kUnitNormTolerance) {
    throw InvalidArgument("vector is not unit norm (sum of squares " + std::to_string(norm_sq) + ")");
  }
}

UnitVector UnitVector::operator-() const {
  std::vector<double> out(components_.size());
  std::transform(components_.begin(), components_.end(), out.begin(), std::negate<>());
  return UnitVector(std::move(out));
}

BinaryString::BinaryString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw InvalidArgument("binary string element outside {0,1}");
  }
}

BinaryString BinaryString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw InvalidArgument(std::string("invalid character in binary string: '") + c + "'");
    }
  }
  return BinaryString(std::move(bits));
}

std::string BinaryString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

std::size_t hamming_distance(const BinaryString& a, const BinaryString& b) {
  require_same_size(a.size(), b.size());
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

BinaryString bitwise_xor(const BinaryString& a, const BinaryString& b) {
  require_same_size(a.size(), b.size());
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return BinaryString(std::move(out));
}

std::size_t hamming_weight(const BinaryString& a) {
  return static_cast<std::size_t>(std::count(a.bits().begin(), a.bits().end(), 1));
}

UnitVector normalize(std::span<const double> v) {
  if (v.empty()) throw InvalidArgument("cannot normalize an empty vector");
  const double norm_sq = sum_of_squares(v);
  if (!std::isfinite(norm_sq)) throw InvalidArgument("vector has non-finite components");
  if (norm_sq == 0.0) throw ZeroNormError();
  const double norm = std::sqrt(norm_sq);
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [norm](double a) { return a / norm; });
  return UnitVector(std::move(out));
}

double euclidean_distance_sq(const UnitVector& x, const UnitVector& y) {
  require_same_size(x.size(), y.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = x[j] - y[j];
    acc += d * d;
  }
  return acc;
}

double inner_product(const UnitVector& x, const UnitVector& y) {
  require_same_size(x.size(), y.size());
  return std::inner_product(x.components().begin(), x.components().end(), y.components().begin(), 0.0);
}

double inner_product_from_distance(double d_sq) {
  if (!(d_sq >= 0.0 && d_sq <= 4.0)) {
    throw InvalidArgument("squared distance between unit vectors must lie in [0, 4]");
  }
  return 1.0 - d_sq / 2.0;
}

UnitVector random_unit_vector(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("dimension must be at least 1");
  const rng::Stream stream(seed, 0);
  std::vector<double> v(n);
  // A zero draw from every normal is impossible in practice, but redraw
  // rather than divide by zero.
  for (std::uint64_t attempt = 0;; ++attempt) {
    for (std::size_t j = 0; j < n; ++j) v[j] = stream.normal(attempt * n + j);
    if (sum_of_squares(v) > 0.0) break;
  }
  return normalize(v);
}

BinaryString random_binary_string(std::size_t n_bits, std::uint64_t seed) {
  const rng::Stream stream(seed, 1);
  std::vector<std::uint8_t> bits(n_bits);
  for (std::size_t i = 0; i < n_bits; ++i) bits[i] = static_cast<std::uint8_t>(stream.bits(i) >> 63);
  return BinaryString(std::move(bits));
}

RandomLinearCode::RandomLinearCode(std::size_t n_bits, std::size_t rate_inverse, std::uint64_t seed)
    : n_bits_(n_bits), length_(n_bits * rate_inverse), words_per_row_((length_ + 63) / 64) {
  if (n_bits == 0) throw InvalidArgument("cannot build a code for empty messages");
  if (rate_inverse < 2) throw InvalidArgument("rate_inverse must be at least 2");

  const std::uint64_t tail_mask =
      (length_ % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (length_ % 64)) - 1);
  rows_.resize(n_bits_ * words_per_row_);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const rng::Stream stream(rng::derive_seed(seed, attempt), 2);
    for (std::size_t w = 0; w < rows_.size(); ++w) rows_[w] = stream.bits(w);
    for (std::size_t i = 0; i < n_bits_; ++i) rows_[i * words_per_row_ + words_per_row_ - 1] &= tail_mask;
    if (full_rank()) break;
  }
}

bool RandomLinearCode::full_rank() const {
  std::vector<std::uint64_t> m = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length_ && rank < n_bits_; ++col) {
    const std::size_t word = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < n_bits_ && !(m[pivot * words_per_row_ + word] & bit)) ++pivot;
    if (pivot == n_bits_) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + pivot * words_per_row_, m.begin() + (pivot + 1) * words_per_row_,
                       m.begin() + rank * words_per_row_);
    }
    for (std::size_t r = 0; r < n_bits_; ++r) {
      if (r != rank && (m[r * words_per_row_ + word] & bit)) {
        for (std::size_t w = 0; w < words_per_row_; ++w) m[r * words_per_row_ + w] ^= m[rank * words_per_row_ + w];
      }
    }
    ++rank;
  }
  return rank == n_bits_;
}

BinaryString RandomLinearCode::encode(const BinaryString& message) const {
  if (message.size() != n_bits_) throw DimensionMismatch(message.size(), n_bits_);
  std::vector<std::uint64_t> acc(words_per_row_, 0);
  for (std::size_t i = 0; i < n_bits_; ++i) {
    if (!message[i]) continue;
    for (std::size_t w = 0; w < words_per_row_; ++w) acc[w] ^= rows_[i * words_per_row_ + w];
  }
  std::vector<std::uint8_t> bits(length_);
  for (std::size_t c = 0; c < length_; ++c) bits[c] = static_cast<std::uint8_t>((acc[c / 64] >> (c % 64)) & 1);
  return BinaryString(std::move(bits));
}

std::size_t RandomLinearCode::minimum_distance() const {
  if (n_bits_ > 20) throw InvalidArgument("exhaustive minimum distance limited to 20 message bits");
  // Gray-code walk: each step flips one message bit, i.e. XORs one row.
  std::vector<std::uint64_t> acc(words_per_row_, 0);
  std::size_t best = length_;
  const std::uint64_t count = std::uint64_t{1} << n_bits_;
  for (std::uint64_t g = 1; g < count; ++g) {
    const auto row = static_cast<std::size_t>(std::countr_zero(g));
    std::size_t weight = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      acc[w] ^= rows_[row * words_per_row_ + w];
      weight += static_cast<std::size_t>(std::popcount(acc[w]));
    }
    best = std::min(best, weight);
  }
  return best;
}

UnitVector codeword_to_unit_vector(const BinaryString& codeword) {
  if (codeword.empty()) throw InvalidArgument("empty codeword");
  const double amp = 1.0 / std::sqrt(static_cast<double>(codeword.size()));
  std::vector<double> v(codeword.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = codeword[i] ? -amp : amp;
  return UnitVector(std::move(v));
}

UnitVector ecc_encode(const BinaryString& s, std::size_t rate_inverse, std::uint64_t seed) {
  if (s.empty()) throw InvalidArgument("cannot encode an empty binary string");
  return codeword_to_unit_vector(RandomLinearCode(s.size(), rate_inverse, seed).encode(s));
}

}  // namespace cfp

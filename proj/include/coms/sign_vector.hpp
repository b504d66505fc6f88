#pragma once

// Sign vectors over {-1, 0, +1} and the primitive operations on them.
// Coordinates are positional; element labels live in GroundSet and only
// matter at the I/O boundary.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coms {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign flipped(Sign s) {
  return static_cast<Sign>(-static_cast<std::int8_t>(s));
}

constexpr int sign_to_int(Sign s) { return static_cast<std::int8_t>(s); }

char sign_to_char(Sign s);
Sign sign_from_char(char c);  // '+', '0', '-'; throws ParseError otherwise
Sign sign_from_int(int v);    // -1, 0, 1; throws ParseError otherwise

class SignVector {
public:
  SignVector() = default;
  explicit SignVector(std::vector<Sign> entries) : entries_(std::move(entries)) {}

  static SignVector zero(std::size_t n) { return SignVector(std::vector<Sign>(n, Sign::Zero)); }
  static SignVector from_string(const std::string& s);   // e.g. "+0-"
  static SignVector from_ints(const std::vector<int>& v);

  std::size_t size() const { return entries_.size(); }
  Sign operator[](std::size_t i) const { return entries_[i]; }
  Sign& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Sign>& entries() const { return entries_; }

  bool is_zero() const;
  std::string to_string() const;

  // Entrywise comparison with Minus < Zero < Plus gives exactly the
  // mixed-radix order used for deterministic storage and output.
  auto operator<=>(const SignVector&) const = default;

private:
  std::vector<Sign> entries_;
};

struct SignVectorHash {
  std::size_t operator()(const SignVector& v) const;
};

// (X o Y)_e = X_e if X_e != 0, else Y_e. Throws DimensionError on length mismatch.
SignVector compose(const SignVector& x, const SignVector& y);

SignVector negate(const SignVector& x);

// S(X, Y) = { e : X_e = -Y_e != 0 }, as sorted coordinate indices.
std::vector<int> separation(const SignVector& x, const SignVector& y);

// X <= Y iff X_e in {0, Y_e} for every e.
bool leq(const SignVector& x, const SignVector& y);

std::vector<int> support(const SignVector& x);
std::vector<int> zero_set(const SignVector& x);  // complement of support

}  // namespace coms

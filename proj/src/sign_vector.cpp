#include "coms/sign_vector.hpp"

#include <algorithm>

#include "coms/errors.hpp"

namespace coms {

char sign_to_char(Sign s) {
  switch (s) {
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
    case Sign::Plus: return '+';
  }
  return '?';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    case '+': return Sign::Plus;
    default:
      throw ParseError(std::string("invalid sign character '") + c + "' (expected '+', '0' or '-')");
  }
}

Sign sign_from_int(int v) {
  if (v < -1 || v > 1) {
    throw ParseError("invalid sign value " + std::to_string(v) + " (expected -1, 0 or 1)");
  }
  return static_cast<Sign>(v);
}

SignVector SignVector::from_string(const std::string& s) {
  std::vector<Sign> entries;
  entries.reserve(s.size());
  for (char c : s) entries.push_back(sign_from_char(c));
  return SignVector(std::move(entries));
}

SignVector SignVector::from_ints(const std::vector<int>& v) {
  std::vector<Sign> entries;
  entries.reserve(v.size());
  for (int x : v) entries.push_back(sign_from_int(x));
  return SignVector(std::move(entries));
}

bool SignVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Sign s) { return s == Sign::Zero; });
}

std::string SignVector::to_string() const {
  std::string out;
  out.reserve(entries_.size());
  for (Sign s : entries_) out.push_back(sign_to_char(s));
  return out;
}

std::size_t SignVectorHash::operator()(const SignVector& v) const {
  // FNV-1a over the entry bytes.
  std::size_t h = 1469598103934665603ull;
  for (Sign s : v.entries()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(s)));
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void require_same_size(const SignVector& x, const SignVector& y, const char* op) {
  if (x.size() != y.size()) {
    throw DimensionError(std::string(op) + ": operands have lengths " +
                         std::to_string(x.size()) + " and " + std::to_string(y.size()));
  }
}

}  // namespace

SignVector compose(const SignVector& x, const SignVector& y) {
  require_same_size(x, y, "compose");
  std::vector<Sign> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] != Sign::Zero ? x[i] : y[i];
  }
  return SignVector(std::move(out));
}

SignVector negate(const SignVector& x) {
  std::vector<Sign> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = flipped(x[i]);
  return SignVector(std::move(out));
}

std::vector<int> separation(const SignVector& x, const SignVector& y) {
  require_same_size(x, y, "separation");
  std::vector<int> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != Sign::Zero && x[i] == flipped(y[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool leq(const SignVector& x, const SignVector& y) {
  require_same_size(x, y, "leq");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != Sign::Zero && x[i] != y[i]) return false;
  }
  return true;
}

std::vector<int> support(const SignVector& x) {
  std::vector<int> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != Sign::Zero) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> zero_set(const SignVector& x) {
  std::vector<int> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == Sign::Zero) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace coms

#include "coms/minors.hpp"

#include <algorithm>

#include "coms/errors.hpp"

namespace coms {

namespace {

std::vector<int> checked_sorted(const SignVector& x, std::vector<int> drop) {
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  for (int i : drop) {
    if (i < 0 || static_cast<std::size_t>(i) >= x.size()) {
      throw DomainError("restriction index " + std::to_string(i) + " out of range");
    }
  }
  return drop;
}

GroundSet remaining_ground(const GroundSet& ground, const std::vector<int>& drop) {
  std::vector<std::string> labels;
  labels.reserve(ground.size() - drop.size());
  std::size_t di = 0;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (di < drop.size() && static_cast<int>(i) == drop[di]) {
      ++di;
      continue;
    }
    labels.push_back(ground.label(i));
  }
  return GroundSet(std::move(labels));
}

bool zero_on_all(const SignVector& x, const std::vector<int>& coords) {
  return std::all_of(coords.begin(), coords.end(),
                     [&](int i) { return x[static_cast<std::size_t>(i)] == Sign::Zero; });
}

}  // namespace

SignVector restricted(const SignVector& x, const std::vector<int>& drop) {
  const std::vector<int> d = checked_sorted(x, drop);
  std::vector<Sign> out;
  out.reserve(x.size() - d.size());
  std::size_t di = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (di < d.size() && static_cast<int>(i) == d[di]) {
      ++di;
      continue;
    }
    out.push_back(x[i]);
  }
  return SignVector(std::move(out));
}

std::vector<int> resolve_labels(const GroundSet& ground, const std::vector<std::string>& labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    const int i = ground.index_of(l);
    if (i < 0) throw DomainError("unknown element label '" + l + "'");
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SignSystem deletion(const SignSystem& s, const std::vector<int>& drop) {
  std::vector<int> d = drop;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  for (int i : d) {
    if (i < 0 || static_cast<std::size_t>(i) >= s.ground().size()) {
      throw DomainError("deletion index " + std::to_string(i) + " out of range");
    }
  }
  std::vector<SignVector> out;
  out.reserve(s.size());
  for (const auto& x : s.covectors()) out.push_back(restricted(x, d));
  return SignSystem(remaining_ground(s.ground(), d), std::move(out));
}

SignSystem deletion(const SignSystem& s, const std::vector<std::string>& labels) {
  return deletion(s, resolve_labels(s.ground(), labels));
}

SignSystem contraction(const SignSystem& s, const std::vector<int>& drop) {
  std::vector<int> d = drop;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  for (int i : d) {
    if (i < 0 || static_cast<std::size_t>(i) >= s.ground().size()) {
      throw DomainError("contraction index " + std::to_string(i) + " out of range");
    }
  }
  std::vector<SignVector> out;
  for (const auto& x : s.covectors()) {
    if (zero_on_all(x, d)) out.push_back(restricted(x, d));
  }
  return SignSystem(remaining_ground(s.ground(), d), std::move(out));
}

SignSystem contraction(const SignSystem& s, const std::vector<std::string>& labels) {
  return contraction(s, resolve_labels(s.ground(), labels));
}

}  // namespace coms

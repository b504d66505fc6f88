#include "coms/sign_system.hpp"

#include <algorithm>
#include <unordered_set>

#include "coms/errors.hpp"

namespace coms {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw DomainError("ground set labels must be nonempty");
    if (!seen.insert(l).second) throw DomainError("duplicate ground set label '" + l + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return GroundSet(std::move(labels));
}

int GroundSet::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

SignSystem::SignSystem(GroundSet ground, std::vector<SignVector> covectors)
    : ground_(std::move(ground)), covectors_(std::move(covectors)) {
  for (const auto& v : covectors_) {
    if (v.size() != ground_.size()) {
      throw DimensionError("covector of length " + std::to_string(v.size()) +
                           " does not fit a ground set of size " + std::to_string(ground_.size()));
    }
  }
  std::sort(covectors_.begin(), covectors_.end());
  covectors_.erase(std::unique(covectors_.begin(), covectors_.end()), covectors_.end());
}

bool SignSystem::contains(const SignVector& x) const {
  return std::binary_search(covectors_.begin(), covectors_.end(), x);
}

bool validate_topes(const SignSystem& s) {
  if (s.empty()) return false;
  const std::vector<int> first = support(s.covectors().front());
  for (const auto& v : s.covectors()) {
    if (support(v) != first) return false;
  }
  return true;
}

}  // namespace coms

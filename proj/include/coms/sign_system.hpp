#pragma once

// Ground sets (ordered, distinct element labels) and finite sign systems.

#include <cstddef>
#include <string>
#include <vector>

#include "coms/sign_vector.hpp"

namespace coms {

class GroundSet {
public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);  // throws DomainError on duplicates/empties
  static GroundSet numbered(std::size_t n);             // e1, e2, ..., en

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 if absent

  bool operator==(const GroundSet&) const = default;

private:
  std::vector<std::string> labels_;
};

// A set of sign vectors over a common ground set. Set semantics: covectors are
// kept sorted in mixed-radix order and deduplicated, which makes iteration
// (and therefore witnesses and output) deterministic.
class SignSystem {
public:
  SignSystem() = default;
  SignSystem(GroundSet ground, std::vector<SignVector> covectors);

  const GroundSet& ground() const { return ground_; }
  const std::vector<SignVector>& covectors() const { return covectors_; }
  std::size_t size() const { return covectors_.size(); }
  bool empty() const { return covectors_.empty(); }
  bool contains(const SignVector& x) const;

  bool operator==(const SignSystem&) const = default;

private:
  GroundSet ground_;
  std::vector<SignVector> covectors_;
};

// True iff the system is nonempty and all members share one support.
// This is the precondition a set of topes must satisfy.
bool validate_topes(const SignSystem& s);

}  // namespace coms

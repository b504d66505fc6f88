#pragma once

// Deletion and contraction. Both take a set of element labels (or coordinate
// indices), both inherit the remaining labels in original order, and both are
// closed on conditional oriented matroids.

#include <string>
#include <vector>

#include "coms/sign_system.hpp"

namespace coms {

// Drops the given coordinates (sorted unique indices) from X.
SignVector restricted(const SignVector& x, const std::vector<int>& drop);

// L \ A = { X restricted to E - A : X in L }, deduplicated.
SignSystem deletion(const SignSystem& s, const std::vector<int>& drop);
SignSystem deletion(const SignSystem& s, const std::vector<std::string>& labels);

// L / A = { X restricted to E - A : X in L, X zero on all of A }.
// The result may be empty; that is not an error.
SignSystem contraction(const SignSystem& s, const std::vector<int>& drop);
SignSystem contraction(const SignSystem& s, const std::vector<std::string>& labels);

// Resolves labels to coordinate indices; throws DomainError on unknown labels.
std::vector<int> resolve_labels(const GroundSet& ground, const std::vector<std::string>& labels);

}  // namespace coms

#pragma once

// Covector reconstruction from topes.
//
// For a conditional oriented matroid the covector set is exactly
//   { X : X o -T is a tope for every tope T },
// and for an oriented matroid the same holds with X o T. Candidates outside
// the common tope support are hopeless (a coordinate where every tope is zero
// forces the candidate to zero there), so enumeration runs over the
// 3^|common support| grid in mixed-radix order (-1 < 0 < +1) and leaves the
// remaining coordinates zero.

#include <vector>

#include "coms/sign_system.hpp"

namespace coms {

// Refuse to enumerate supports larger than this without force: 3^21 candidate
// vectors is past the point of a deliberate decision.
inline constexpr int kMaxSupportWithoutForce = 20;

// A validated set of topes: nonempty, all over one ground set, all sharing a
// common support. Build through create() or topes_of().
struct TopeSet {
  GroundSet ground;
  std::vector<SignVector> topes;     // sorted, deduplicated
  std::vector<int> common_support;   // sorted coordinate indices

  static TopeSet create(GroundSet ground, std::vector<SignVector> topes);
};

// The maximal covectors of s under the partial order X <= Y iff X_e in {0, Y_e}.
// Throws DomainError on the empty system, and when the maximal elements do not
// share a support (then they are not the topes of any conditional oriented matroid).
TopeSet topes_of(const SignSystem& s);

struct ReconstructOptions {
  bool force = false;  // lift the support-size guard
};

SignSystem reconstruct_com(const TopeSet& t, const ReconstructOptions& opts = {});
SignSystem reconstruct_om(const TopeSet& t, const ReconstructOptions& opts = {});

// Post-hoc check used by --verify: the reconstruction should be a conditional
// oriented matroid whose topes are exactly the input.
struct ReconstructionAudit {
  bool result_is_com = false;
  bool topes_match = false;
};

ReconstructionAudit audit_reconstruction(const TopeSet& input, const SignSystem& result);

}  // namespace coms

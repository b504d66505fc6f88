#include "coms/reconstruction.hpp"

#include <algorithm>
#include <unordered_set>

#include "coms/axioms.hpp"
#include "coms/errors.hpp"

namespace coms {

TopeSet TopeSet::create(GroundSet ground, std::vector<SignVector> topes) {
  for (const auto& t : topes) {
    if (t.size() != ground.size()) {
      throw DimensionError("tope of length " + std::to_string(t.size()) +
                           " does not fit a ground set of size " + std::to_string(ground.size()));
    }
  }
  std::sort(topes.begin(), topes.end());
  topes.erase(std::unique(topes.begin(), topes.end()), topes.end());
  if (topes.empty()) throw DomainError("tope set is empty");

  const std::vector<int> common = support(topes.front());
  for (const auto& t : topes) {
    if (support(t) != common) {
      throw DomainError("invalid tope set: rows " + topes.front().to_string() + " and " +
                        t.to_string() +
                        " have different supports; topes of a conditional oriented matroid "
                        "share a common support");
    }
  }
  TopeSet out;
  out.ground = std::move(ground);
  out.topes = std::move(topes);
  out.common_support = common;
  return out;
}

TopeSet topes_of(const SignSystem& s) {
  if (s.empty()) throw DomainError("cannot extract topes from an empty system");
  const auto& l = s.covectors();
  std::vector<SignVector> maximal;
  for (std::size_t i = 0; i < l.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (i != j && leq(l[i], l[j]) && l[i] != l[j]) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(l[i]);
  }
  return TopeSet::create(s.ground(), std::move(maximal));
}

namespace {

// Enumerates candidates over the common support in mixed-radix order and keeps
// those whose composition with every (possibly negated) tope is again a tope.
SignSystem reconstruct(const TopeSet& t, bool negate_topes, const ReconstructOptions& opts) {
  const std::size_t n = t.ground.size();
  const std::vector<int>& sup = t.common_support;

  if (static_cast<int>(sup.size()) > kMaxSupportWithoutForce && !opts.force) {
    throw SizeLimitError("common support has " + std::to_string(sup.size()) +
                         " elements; enumerating 3^" + std::to_string(sup.size()) +
                         " candidates needs force");
  }

  std::unordered_set<SignVector, SignVectorHash> members(t.topes.begin(), t.topes.end());
  std::vector<SignVector> compose_with;
  compose_with.reserve(t.topes.size());
  for (const auto& tope : t.topes) compose_with.push_back(negate_topes ? negate(tope) : tope);

  std::vector<SignVector> found;
  SignVector candidate = SignVector::zero(n);
  SignVector scratch = SignVector::zero(n);
  // Odometer over the support coordinates, least significant last, so
  // candidates come out in ascending mixed-radix order already.
  std::vector<int> digit(sup.size(), 0);  // 0 -> Minus, 1 -> Zero, 2 -> Plus
  for (std::size_t i = 0; i < sup.size(); ++i) candidate[sup[i]] = Sign::Minus;

  while (true) {
    bool ok = true;
    for (const auto& u : compose_with) {
      for (std::size_t i = 0; i < n; ++i) {
        scratch[i] = candidate[i] != Sign::Zero ? candidate[i] : u[i];
      }
      if (!members.count(scratch)) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(candidate);

    // Advance the odometer.
    std::size_t k = sup.size();
    while (k > 0) {
      --k;
      if (digit[k] < 2) {
        ++digit[k];
        candidate[sup[k]] = static_cast<Sign>(digit[k] - 1);
        break;
      }
      digit[k] = 0;
      candidate[sup[k]] = Sign::Minus;
      if (k == 0) return SignSystem(t.ground, std::move(found));
    }
    if (sup.empty()) break;  // single candidate: the zero vector
  }
  return SignSystem(t.ground, std::move(found));
}

}  // namespace

SignSystem reconstruct_com(const TopeSet& t, const ReconstructOptions& opts) {
  return reconstruct(t, true, opts);
}

SignSystem reconstruct_om(const TopeSet& t, const ReconstructOptions& opts) {
  return reconstruct(t, false, opts);
}

ReconstructionAudit audit_reconstruction(const TopeSet& input, const SignSystem& result) {
  ReconstructionAudit audit;
  audit.result_is_com = is_com(result);
  try {
    audit.topes_match = !result.empty() && topes_of(result).topes == input.topes;
  } catch (const DomainError&) {
    audit.topes_match = false;  // maximal elements with mixed supports
  }
  return audit;
}

}  // namespace coms

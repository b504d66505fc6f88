#pragma once

// The covector poset under X <= Y iff X_e in {0, Y_e}: Hasse diagram,
// longest-chain ranks, and the f-polynomial counting covectors by corank.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coms/sign_system.hpp"

namespace coms {

struct CovectorPoset {
  std::vector<SignVector> elements;          // sorted in mixed-radix order
  std::vector<std::pair<int, int>> hasse;    // (covered, covering) index pairs, sorted
  std::vector<int> ranks;                    // longest chain strictly below, per element
  int system_rank = 0;                       // max over ranks

  int index_of(const SignVector& x) const;   // -1 if absent
};

// Throws DomainError on the empty system.
CovectorPoset build_poset(const SignSystem& s);

// Rank of one element; throws DomainError if x is not in the poset.
int rank_of(const CovectorPoset& p, const SignVector& x);

// f(x) = sum over covectors X of x^(length of the longest cover-chain above X),
// so maximal covectors supply the constant term and the degree equals the
// system rank. Nonnegative integer coefficients, indexed by exponent;
// f(1) = number of covectors.
struct FPolynomial {
  std::vector<std::int64_t> coefficients;  // coefficients[k] multiplies x^k

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  std::int64_t at(int exponent) const;
  std::int64_t sum() const;
};

FPolynomial f_polynomial(const SignSystem& s);

// Descending degree, zero terms omitted, unit coefficients unadorned:
// "3*x^2 + 11*x + 9", "x + 2", "1".
std::string render_polynomial(const FPolynomial& f);

// Hasse diagram in DOT, edges pointing from covered to covering element.
std::string to_dot(const CovectorPoset& p);

}  // namespace coms

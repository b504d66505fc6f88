#pragma once

// Brute-force axiom checks for sign systems. Quadratic/cubic scans are the
// intended design: systems here are desk-scale and the checks double as the
// reference semantics everything else is tested against.

#include <optional>
#include <vector>

#include "coms/sign_system.hpp"

namespace coms {

// Concrete violating data for a failed axiom. vectors holds (X) for Sym,
// (X, Y) for FS/C, (X, Y) plus the separating coordinate for SE. For Z the
// vector stored is the absent zero vector itself.
struct AxiomWitness {
  std::vector<SignVector> vectors;
  int element = -1;  // SE only: the coordinate whose elimination failed
};

struct AxiomCheck {
  bool holds = true;
  std::optional<AxiomWitness> witness;
};

// (FS)  X o -Y in L for all X, Y.
AxiomCheck check_fs(const SignSystem& s);

// (SE)  for each X, Y and each e in S(X, Y) there is Z in L with Z_e = 0 and
//       Z_f = (X o Y)_f for all f outside S(X, Y). The existential over Z is
//       a scan of the system, not a construction.
AxiomCheck check_se(const SignSystem& s);

// (C)   X o Y in L for all X, Y.
AxiomCheck check_c(const SignSystem& s);

// (Sym) -X in L for all X.
AxiomCheck check_sym(const SignSystem& s);

// (Z)   the all-zero vector is a member.
AxiomCheck check_z(const SignSystem& s);

struct AxiomReport {
  AxiomCheck fs, se, c, sym, z;
  bool com = false;
  bool om = false;
};

AxiomReport check_axioms(const SignSystem& s);

// FS and SE. The empty system passes vacuously.
bool is_com(const SignSystem& s);

// Computed both as (nonempty and C and Sym and SE) and as (is_com and Z);
// disagreement would be an implementation bug and throws std::logic_error.
// The nonemptiness guard reflects the classical covector axiom 0 in L, without
// which the equivalence of the two routes fails on the empty system.
bool is_om(const SignSystem& s);

}  // namespace coms

#include "coms/axioms.hpp"

#include <stdexcept>

namespace coms {

namespace {

AxiomCheck fail(std::vector<SignVector> vectors, int element = -1) {
  AxiomCheck c;
  c.holds = false;
  c.witness = AxiomWitness{std::move(vectors), element};
  return c;
}

// Shared closure scan for FS (negate = true) and C (negate = false).
AxiomCheck check_closure(const SignSystem& s, bool negate_second) {
  const auto& l = s.covectors();
  for (const auto& x : l) {
    for (const auto& y : l) {
      const SignVector target = negate_second ? compose(x, negate(y)) : compose(x, y);
      if (!s.contains(target)) return fail({x, y});
    }
  }
  return {};
}

}  // namespace

AxiomCheck check_fs(const SignSystem& s) { return check_closure(s, true); }

AxiomCheck check_c(const SignSystem& s) { return check_closure(s, false); }

AxiomCheck check_se(const SignSystem& s) {
  const auto& l = s.covectors();
  const std::size_t n = s.ground().size();

  // Candidates for the eliminating Z, bucketed by the coordinate they zero.
  std::vector<std::vector<int>> zero_at(n);
  for (std::size_t k = 0; k < l.size(); ++k) {
    for (std::size_t e = 0; e < n; ++e) {
      if (l[k][e] == Sign::Zero) zero_at[e].push_back(static_cast<int>(k));
    }
  }

  for (const auto& x : l) {
    for (const auto& y : l) {
      const std::vector<int> sep = separation(x, y);
      if (sep.empty()) continue;
      const SignVector xy = compose(x, y);
      for (int e : sep) {
        bool found = false;
        for (int k : zero_at[e]) {
          const SignVector& z = l[k];
          bool matches = true;
          std::size_t si = 0;
          for (std::size_t f = 0; f < n; ++f) {
            if (si < sep.size() && static_cast<int>(f) == sep[si]) {
              ++si;  // f is separating: Z_f unconstrained
              continue;
            }
            if (z[f] != xy[f]) {
              matches = false;
              break;
            }
          }
          if (matches) {
            found = true;
            break;
          }
        }
        if (!found) return fail({x, y}, e);
      }
    }
  }
  return {};
}

AxiomCheck check_sym(const SignSystem& s) {
  for (const auto& x : s.covectors()) {
    if (!s.contains(negate(x))) return fail({x});
  }
  return {};
}

AxiomCheck check_z(const SignSystem& s) {
  const SignVector zero = SignVector::zero(s.ground().size());
  if (s.contains(zero)) return {};
  return fail({zero});
}

bool is_com(const SignSystem& s) { return check_fs(s).holds && check_se(s).holds; }

bool is_om(const SignSystem& s) {
  const bool se = check_se(s).holds;
  const bool via_axioms = !s.empty() && check_c(s).holds && check_sym(s).holds && se;
  const bool via_com = check_fs(s).holds && se && check_z(s).holds;
  if (via_axioms != via_com) {
    throw std::logic_error("is_om: axiomatic route and COM+Z route disagree");
  }
  return via_axioms;
}

AxiomReport check_axioms(const SignSystem& s) {
  AxiomReport r;
  r.fs = check_fs(s);
  r.se = check_se(s);
  r.c = check_c(s);
  r.sym = check_sym(s);
  r.z = check_z(s);
  r.com = r.fs.holds && r.se.holds;
  const bool via_axioms = !s.empty() && r.c.holds && r.sym.holds && r.se.holds;
  const bool via_com = r.com && r.z.holds;
  if (via_axioms != via_com) {
    throw std::logic_error("check_axioms: axiomatic route and COM+Z route disagree");
  }
  r.om = via_axioms;
  return r;
}

}  // namespace coms

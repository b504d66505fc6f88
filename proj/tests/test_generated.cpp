#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "coms/arrangement.hpp"
#include "coms/axioms.hpp"
#include "coms/minors.hpp"
#include "coms/poset.hpp"
#include "coms/reconstruction.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace coms;

namespace {

const char* kind_name(gen::Kind k) {
  switch (k) {
    case gen::Kind::Full: return "full";
    case gen::Kind::Central: return "central";
    default: return "halfplane";
  }
}

// The full battery of cross-checks every generated system must satisfy.
void check_instance(const gen::Instance& inst, gen::Kind kind) {
  const Arrangement& a = inst.arrangement;
  const TopeSet t = topes_from_points(a, inst.points);
  // Sample points avoid every hyperplane, so all topes carry full support.
  REQUIRE(t.common_support.size() == a.hyperplanes.size());

  const SignSystem l = reconstruct_com(t);
  REQUIRE(is_com(l));

  // Reconstruction round trip and agreement with the unpruned scan.
  CHECK(topes_of(l).topes == t.topes);
  CHECK(reconstruct_com(topes_of(l)).covectors() == l.covectors());
  CHECK(l.covectors() == oracles::reconstruct_unpruned(t, false).covectors());
  CHECK(oracles::maximal_naive(l.covectors()) == t.topes);

  // Poset structure against the brute-force order oracles.
  const CovectorPoset p = build_poset(l);
  CHECK(p.hasse == oracles::hasse_naive(p.elements));
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    CHECK(p.ranks[i] == oracles::longest_below(p.elements, static_cast<int>(i)));
  }

  // Face-count polynomial: counts longest rising chains, totals the system,
  // puts one tope on the constant term, tops out at the system rank.
  const FPolynomial f = f_polynomial(l);
  CHECK(f.sum() == static_cast<std::int64_t>(l.covectors().size()));
  CHECK(f.at(0) == static_cast<std::int64_t>(t.topes.size()));
  CHECK(f.degree() == p.system_rank);
  std::map<int, std::int64_t> heights;
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    heights[oracles::longest_above(p.elements, static_cast<int>(i))] += 1;
  }
  for (int k = 0; k <= f.degree(); ++k) CHECK(f.at(k) == heights[k]);

  // Single-element minors stay conditional oriented matroids; contraction
  // embeds in deletion; contracting a supported element costs at least one
  // rank level when anything survives.
  for (int e = 0; e < static_cast<int>(a.hyperplanes.size()); ++e) {
    CAPTURE(e);
    const SignSystem del = deletion(l, std::vector<int>{e});
    const SignSystem con = contraction(l, std::vector<int>{e});
    CHECK(is_com(del));
    CHECK(is_com(con));
    CHECK(std::includes(del.covectors().begin(), del.covectors().end(),
                        con.covectors().begin(), con.covectors().end()));
    if (!con.empty()) {
      CHECK(build_poset(con).system_rank <= p.system_rank - 1);
    }
  }

  if (kind == gen::Kind::Central) {
    // All offsets are zero: the tope set is symmetric and the system is a
    // full oriented matroid containing the zero covector.
    CHECK(l.contains(SignVector(std::vector<Sign>(a.hyperplanes.size(), Sign::Zero))));
    CHECK(check_axioms(l).sym.holds);
    CHECK(is_om(l));
    CHECK(reconstruct_om(t).covectors() == l.covectors());
  }

  if (kind == gen::Kind::Halfplane) {
    // Every sample point sits strictly on the plus side of the first
    // hyperplane, so its coordinate is constant and droppable.
    for (const auto& tope : t.topes) CHECK(tope[0] == Sign::Plus);
    for (const auto& x : l.covectors()) CHECK(x[0] == Sign::Plus);
    const SignSystem dropped = drop_constant_coordinates(l);
    const auto labels = dropped.ground().labels();
    CHECK(std::find(labels.begin(), labels.end(), "h1") == labels.end());
    CHECK(is_com(dropped));
  }
}

}  // namespace

TEST_CASE("randomly generated arrangements satisfy every structural invariant") {
  std::mt19937 rng(20240816);
  const std::vector<std::pair<int, int>> sizes = {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}};
  for (const gen::Kind kind : {gen::Kind::Full, gen::Kind::Central, gen::Kind::Halfplane}) {
    for (const auto& [n, m] : sizes) {
      for (int trial = 0; trial < 2; ++trial) {
        CAPTURE(kind_name(kind));
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(trial);
        check_instance(gen::make_instance(rng, n, m, kind), kind);
      }
    }
  }
}

TEST_CASE("the chamber generator itself is sound") {
  const Arrangement a = testutil::reference_arrangement();

  SUBCASE("feasible pattern: a witness lands in the requested chamber") {
    std::vector<gen::StrictIneq> sys;
    for (const auto& h : a.hyperplanes) sys.push_back({h.coeffs, h.offset});  // all plus
    const auto w = gen::strict_feasible(sys, a.dimension);
    REQUIRE(w.has_value());
    CHECK(arrangement_sign(a, Point{*w}) == testutil::sv("+++++"));
  }

  SUBCASE("infeasible pattern: above the top line and below the bottom one") {
    std::vector<gen::StrictIneq> sys;
    sys.push_back({a.hyperplanes[3].coeffs, a.hyperplanes[3].offset});  // x2 > 3
    gen::StrictIneq below{a.hyperplanes[4].coeffs, a.hyperplanes[4].offset};
    for (auto& c : below.c) c = -c;  // x2 < -2
    below.d = -below.d;
    sys.push_back(std::move(below));
    CHECK_FALSE(gen::strict_feasible(sys, a.dimension).has_value());
  }

  SUBCASE("chamber_points hits every chamber exactly once") {
    const auto pts = gen::chamber_points(a);
    CHECK(pts.size() == 13);  // 1 + 5 lines + 7 vertices
    std::vector<SignVector> signs;
    for (const auto& p : pts) {
      const SignVector sv = arrangement_sign(a, p);
      for (std::size_t e = 0; e < sv.size(); ++e) CHECK(sv[e] != Sign::Zero);
      signs.push_back(sv);
    }
    std::sort(signs.begin(), signs.end());
    CHECK(std::adjacent_find(signs.begin(), signs.end()) == signs.end());

    SUBCASE("the nine fixture chambers are among them") {
      for (const auto& tope : testutil::kReferenceTopes) {
        CHECK(std::binary_search(signs.begin(), signs.end(), testutil::sv(tope)));
      }
    }

    SUBCASE("perturbed intersection points discover no further chambers") {
      for (const auto& p : gen::perturbed_intersections(a)) {
        CHECK(std::binary_search(signs.begin(), signs.end(), arrangement_sign(a, p)));
      }
    }
  }

  SUBCASE("solve_square inverts and flags singular systems") {
    using R = Rational;
    const auto x = gen::solve_square({{R(0), R(1)}, {R(1), R(-1)}}, {R(0), R(0)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == R(0));
    CHECK((*x)[1] == R(0));
    CHECK_FALSE(gen::solve_square({{R(1), R(1)}, {R(2), R(2)}}, {R(0), R(1)}).has_value());
  }
}

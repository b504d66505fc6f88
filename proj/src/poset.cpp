#include "coms/poset.hpp"

#include <algorithm>
#include <numeric>

#include "coms/errors.hpp"

namespace coms {

int CovectorPoset::index_of(const SignVector& x) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), x);
  if (it == elements.end() || *it != x) return -1;
  return static_cast<int>(it - elements.begin());
}

CovectorPoset build_poset(const SignSystem& s) {
  if (s.empty()) throw DomainError("cannot build the poset of an empty system");

  CovectorPoset p;
  p.elements = s.covectors();  // already sorted
  const std::size_t n = p.elements.size();

  // X < Y forces |support(X)| < |support(Y)|, so support size ascending is a
  // topological order.
  std::vector<int> supsize(n);
  for (std::size_t i = 0; i < n; ++i) {
    supsize[i] = static_cast<int>(support(p.elements[i]).size());
  }
  std::vector<int> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) { return supsize[a] < supsize[b]; });

  // Strict dominators of each element.
  std::vector<std::vector<int>> above(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || supsize[i] >= supsize[j]) continue;
      if (leq(p.elements[i], p.elements[j])) above[i].push_back(static_cast<int>(j));
    }
  }

  // Hasse edge i -> j iff j dominates i with nothing strictly between.
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : above[i]) less[i][j] = true;
  }
  std::vector<std::vector<int>> covers_in(n);  // Hasse predecessors per element
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : above[i]) {
      bool direct = true;
      for (int k : above[i]) {
        if (k != j && less[k][j]) {
          direct = false;
          break;
        }
      }
      if (direct) {
        p.hasse.emplace_back(static_cast<int>(i), j);
        covers_in[j].push_back(static_cast<int>(i));
      }
    }
  }
  std::sort(p.hasse.begin(), p.hasse.end());

  // Longest chain strictly below each element, along cover edges in
  // topological order.
  p.ranks.assign(n, 0);
  for (int j : topo) {
    for (int i : covers_in[j]) {
      p.ranks[j] = std::max(p.ranks[j], p.ranks[i] + 1);
    }
  }
  p.system_rank = *std::max_element(p.ranks.begin(), p.ranks.end());
  return p;
}

int rank_of(const CovectorPoset& p, const SignVector& x) {
  const int i = p.index_of(x);
  if (i < 0) throw DomainError("covector " + x.to_string() + " is not in the poset");
  return p.ranks[i];
}

std::int64_t FPolynomial::at(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coefficients.size())) return 0;
  return coefficients[exponent];
}

std::int64_t FPolynomial::sum() const {
  return std::accumulate(coefficients.begin(), coefficients.end(), std::int64_t{0});
}

FPolynomial f_polynomial(const SignSystem& s) {
  const CovectorPoset p = build_poset(s);
  const std::size_t n = p.elements.size();

  // The exponent of a covector is the longest cover-chain rising from it, not
  // systemRank minus its rank: the poset need not be graded, and on realizable
  // systems the chain above a face measures its codimension. Topes (maximal
  // covectors) land on the constant term.
  std::vector<std::vector<int>> covers_out(n);
  for (const auto& [i, j] : p.hasse) covers_out[i].push_back(j);

  std::vector<int> supsize(n);
  for (std::size_t i = 0; i < n; ++i) {
    supsize[i] = static_cast<int>(support(p.elements[i]).size());
  }
  std::vector<int> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::stable_sort(topo.begin(), topo.end(), [&](int a, int b) { return supsize[a] > supsize[b]; });

  std::vector<int> up(n, 0);
  int degree = 0;
  for (int i : topo) {
    for (int j : covers_out[i]) up[i] = std::max(up[i], up[j] + 1);
    degree = std::max(degree, up[i]);
  }

  FPolynomial f;
  f.coefficients.assign(degree + 1, 0);
  for (int h : up) f.coefficients[h] += 1;
  return f;
}

std::string render_polynomial(const FPolynomial& f) {
  std::string out;
  for (int k = static_cast<int>(f.coefficients.size()) - 1; k >= 0; --k) {
    const std::int64_t c = f.coefficients[k];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_dot(const CovectorPoset& p) {
  std::string out = "digraph covectors {\n  rankdir=BT;\n";
  for (const auto& e : p.elements) {
    out += "  \"" + e.to_string() + "\";\n";
  }
  for (const auto& [i, j] : p.hasse) {
    out += "  \"" + p.elements[i].to_string() + "\" -> \"" + p.elements[j].to_string() + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace coms

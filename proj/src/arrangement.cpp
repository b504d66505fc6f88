#include "coms/arrangement.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <istream>
#include <unordered_set>

#include "coms/errors.hpp"
#include "coms/minors.hpp"

namespace coms {

namespace {

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& q : v) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

}  // namespace

Hyperplane::Hyperplane(std::vector<Rational> coeffs_in, Rational offset_in, std::string label_in)
    : coeffs(std::move(coeffs_in)), offset(std::move(offset_in)), label(std::move(label_in)) {
  if (coeffs.empty() || all_zero(coeffs)) {
    throw DomainError("hyperplane '" + label + "' has an all-zero normal vector");
  }
}

Arrangement::Arrangement(int dimension_in, std::vector<Hyperplane> hyperplanes_in)
    : dimension(dimension_in), hyperplanes(std::move(hyperplanes_in)) {
  if (dimension <= 0) throw DomainError("arrangement dimension must be positive");
  if (hyperplanes.empty()) throw DomainError("arrangement has no hyperplanes");
  std::unordered_set<std::string> seen;
  for (const auto& h : hyperplanes) {
    if (h.coeffs.size() != static_cast<std::size_t>(dimension)) {
      throw DimensionError("hyperplane '" + h.label + "' has " + std::to_string(h.coeffs.size()) +
                           " coefficients in a " + std::to_string(dimension) +
                           "-dimensional arrangement");
    }
    if (!seen.insert(h.label).second) {
      throw DomainError("duplicate hyperplane label '" + h.label + "'");
    }
  }
}

GroundSet Arrangement::ground() const {
  std::vector<std::string> labels;
  labels.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) labels.push_back(h.label);
  return GroundSet(std::move(labels));
}

Rational evaluate(const Hyperplane& h, const Point& v) {
  if (v.coords.size() != h.coeffs.size()) {
    throw DimensionError("point of dimension " + std::to_string(v.coords.size()) +
                         " evaluated against hyperplane '" + h.label + "' of dimension " +
                         std::to_string(h.coeffs.size()));
  }
  Rational acc = -h.offset;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i) acc += h.coeffs[i] * v.coords[i];
  return acc;
}

Sign sign_map(const Hyperplane& h, const Point& v, const SignPolicy& policy) {
  const Rational r = evaluate(h, v);
  if (policy.exact) {
    const int s = sgn(r);
    return s < 0 ? Sign::Minus : s > 0 ? Sign::Plus : Sign::Zero;
  }
  const double d = r.get_d();
  if (std::abs(d) <= policy.epsilon) return Sign::Zero;
  return d < 0 ? Sign::Minus : Sign::Plus;
}

SignVector arrangement_sign(const Arrangement& a, const Point& v, const SignPolicy& policy) {
  std::vector<Sign> out;
  out.reserve(a.hyperplanes.size());
  for (const auto& h : a.hyperplanes) out.push_back(sign_map(h, v, policy));
  return SignVector(std::move(out));
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string point_to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ", ";
    out += rational_to_string(p.coords[i]);
  }
  return out + ")";
}

}  // namespace

TopeSet topes_from_points(const Arrangement& a, const std::vector<Point>& points,
                          const SignPolicy& policy) {
  if (points.empty()) throw DomainError("no sample points given");
  std::vector<SignVector> topes;
  topes.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const SignVector sv = arrangement_sign(a, points[k], policy);
    for (std::size_t e = 0; e < a.hyperplanes.size(); ++e) {
      if (sv[e] == Sign::Zero) {
        throw OnHyperplaneError("point " + std::to_string(k + 1) + " " +
                                point_to_string(points[k]) + " lies on hyperplane '" +
                                a.hyperplanes[e].label +
                                "'; sample points must avoid every hyperplane");
      }
    }
    topes.push_back(sv);
  }
  return TopeSet::create(a.ground(), std::move(topes));
}

SignSystem apartment_to_com(const Arrangement& a, const std::vector<Point>& points,
                            const SignPolicy& policy, const ReconstructOptions& opts) {
  return reconstruct_com(topes_from_points(a, points, policy), opts);
}

SignSystem drop_constant_coordinates(const SignSystem& s) {
  if (s.empty()) return s;
  std::vector<int> constant;
  const auto& l = s.covectors();
  for (std::size_t e = 0; e < s.ground().size(); ++e) {
    const Sign first = l.front()[e];
    if (first == Sign::Zero) continue;
    bool same = true;
    for (const auto& x : l) {
      if (x[e] != first) {
        same = false;
        break;
      }
    }
    if (same) constant.push_back(static_cast<int>(e));
  }
  if (constant.empty()) return s;
  return deletion(s, constant);
}

namespace {

using nlohmann::json;

// Parses "p/q", "-3", "1.5" style strings exactly.
Rational rational_from_string(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body[0] == '+') body.erase(0, 1);  // GMP rejects a leading plus
  if (body.empty()) throw ParseError("empty number string");

  if (body.find('/') != std::string::npos) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), body.c_str(), 10) != 0 || q.get_den() == 0) {
      throw ParseError("cannot parse rational '" + text + "'");
    }
    q.canonicalize();
    return q;
  }

  std::size_t frac_len = 0;
  const auto dot = body.find('.');
  if (dot != std::string::npos) {
    frac_len = body.size() - dot - 1;
    const std::size_t int_start = body[0] == '-' ? 1 : 0;
    if (frac_len == 0 || dot == int_start) {
      throw ParseError("cannot parse decimal '" + text + "'");
    }
    body.erase(dot, 1);
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), body.c_str(), 10) != 0) {
    throw ParseError("cannot parse number '" + text + "'");
  }
  for (std::size_t i = 0; i < frac_len; ++i) q /= 10;
  q.canonicalize();
  return q;
}

Rational scalar_from_json(const json& j, bool& exact, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (!std::isfinite(d)) throw ParseError(where + ": non-finite number");
    exact = false;  // floating input switches the zero test to the epsilon band
    return Rational(d);
  }
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw ParseError(where + ": expected a number, decimal string or rational string");
}

}  // namespace

ArrangementInput read_arrangement_json(std::istream& in) {
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("arrangement file must be a JSON object");
  if (!root.contains("dimension") || !root["dimension"].is_number_integer()) {
    throw ParseError("arrangement needs an integer \"dimension\"");
  }
  const int dim = root["dimension"].get<int>();
  if (!root.contains("hyperplanes") || !root["hyperplanes"].is_array()) {
    throw ParseError("arrangement needs a \"hyperplanes\" array");
  }

  bool exact = true;
  std::vector<Hyperplane> planes;
  int index = 0;
  for (const auto& hj : root["hyperplanes"]) {
    ++index;
    const std::string where = "hyperplane " + std::to_string(index);
    if (!hj.is_object()) throw ParseError(where + ": expected an object");
    std::string label = "h" + std::to_string(index);
    if (hj.contains("label")) {
      if (!hj["label"].is_string()) throw ParseError(where + ": \"label\" must be a string");
      label = hj["label"].get<std::string>();
    }
    if (!hj.contains("coeffs") || !hj["coeffs"].is_array()) {
      throw ParseError(where + ": needs a \"coeffs\" array");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : hj["coeffs"]) coeffs.push_back(scalar_from_json(c, exact, where));
    if (!hj.contains("offset")) throw ParseError(where + ": needs an \"offset\"");
    Rational offset = scalar_from_json(hj["offset"], exact, where);
    try {
      planes.emplace_back(std::move(coeffs), std::move(offset), std::move(label));
    } catch (const DomainError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }

  std::vector<Point> points;
  if (root.contains("points")) {
    if (!root["points"].is_array()) throw ParseError("\"points\" must be an array");
    int pindex = 0;
    for (const auto& pj : root["points"]) {
      ++pindex;
      const std::string where = "point " + std::to_string(pindex);
      if (!pj.is_array()) throw ParseError(where + ": expected an array of coordinates");
      Point p;
      for (const auto& c : pj) p.coords.push_back(scalar_from_json(c, exact, where));
      if (p.coords.size() != static_cast<std::size_t>(dim)) {
        throw ParseError(where + ": has " + std::to_string(p.coords.size()) +
                         " coordinates, expected " + std::to_string(dim));
      }
      points.push_back(std::move(p));
    }
  }

  try {
    return ArrangementInput{Arrangement(dim, std::move(planes)), std::move(points), exact};
  } catch (const DomainError& e) {
    throw ParseError(e.what());  // malformed file, not a semantic failure
  }
}

}  // namespace coms

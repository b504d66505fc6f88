#include "coms/io.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coms/errors.hpp"

namespace coms {

namespace {

std::string trimmed(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    const std::string label = trimmed(item);
    if (label.empty()) throw ParseError("empty element label in header");
    out.push_back(label);
  }
  return out;
}

}  // namespace

SignSystem read_covectors_text(std::istream& in) {
  constexpr const char* kHeader = "elements:";
  std::vector<std::string> labels;
  bool have_header = false;
  bool header_possible = true;
  std::vector<SignVector> covectors;
  long expected = -1;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trimmed(raw);
    if (!line.empty() && line[0] == '#') continue;
    if (header_possible && line.rfind(kHeader, 0) == 0) {
      const std::string rest = trimmed(line.substr(std::string(kHeader).size()));
      if (!rest.empty()) labels = split_labels(rest);
      have_header = true;
      header_possible = false;
      expected = static_cast<long>(labels.size());
      continue;
    }
    if (line.empty()) {
      // Only a declared empty ground set makes a blank line meaningful.
      if (have_header && expected == 0) covectors.push_back(SignVector());
      continue;
    }
    header_possible = false;
    if (expected >= 0 && static_cast<long>(line.size()) != expected) {
      throw ParseError("line " + std::to_string(lineno) + ": covector '" + line + "' has " +
                       std::to_string(line.size()) + " entries, expected " +
                       std::to_string(expected));
    }
    SignVector v;
    try {
      v = SignVector::from_string(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    expected = static_cast<long>(v.size());
    covectors.push_back(std::move(v));
  }

  if (expected < 0) throw ParseError("no covectors and no header in input");
  try {
    GroundSet ground = have_header ? GroundSet(labels) : GroundSet::numbered(expected);
    return SignSystem(std::move(ground), std::move(covectors));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

SignSystem read_covectors_json(std::istream& in) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("covectors") || !root["covectors"].is_array()) {
    throw ParseError("covector JSON needs a \"covectors\" array");
  }

  std::vector<SignVector> covectors;
  long expected = -1;
  for (const auto& cj : root["covectors"]) {
    if (!cj.is_array()) throw ParseError("each covector must be an array of -1/0/1");
    std::vector<int> ints;
    for (const auto& e : cj) {
      if (!e.is_number_integer()) throw ParseError("covector entries must be integers -1/0/1");
      ints.push_back(e.get<int>());
    }
    if (expected >= 0 && static_cast<long>(ints.size()) != expected) {
      throw ParseError("covectors of differing lengths in input");
    }
    expected = static_cast<long>(ints.size());
    covectors.push_back(SignVector::from_ints(ints));
  }

  GroundSet ground;
  if (root.contains("elements")) {
    if (!root["elements"].is_array()) throw ParseError("\"elements\" must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& e : root["elements"]) {
      if (!e.is_string()) throw ParseError("\"elements\" must be an array of strings");
      labels.push_back(e.get<std::string>());
    }
    try {
      ground = GroundSet(std::move(labels));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  } else {
    if (expected < 0) throw ParseError("covector JSON with no covectors needs \"elements\"");
    ground = GroundSet::numbered(expected);
  }

  try {
    return SignSystem(std::move(ground), std::move(covectors));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

SignSystem read_covectors(std::istream& in) {
  // JSON input begins with '{'; the text format cannot.
  int c;
  while ((c = in.peek()) != std::char_traits<char>::eof()) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      in.get();
      continue;
    }
    break;
  }
  if (c == '{') return read_covectors_json(in);
  return read_covectors_text(in);
}

SignSystem read_covectors_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_covectors(in);
}

void write_covectors_text(std::ostream& out, const SignSystem& s) {
  out << "elements:";
  for (std::size_t i = 0; i < s.ground().size(); ++i) {
    out << (i ? "," : " ") << s.ground().label(i);
  }
  out << "\n";
  for (const auto& v : s.covectors()) out << v.to_string() << "\n";
}

void write_covectors_json(std::ostream& out, const SignSystem& s) {
  nlohmann::json root;
  root["elements"] = s.ground().labels();
  auto& arr = root["covectors"] = nlohmann::json::array();
  for (const auto& v : s.covectors()) {
    nlohmann::json row = nlohmann::json::array();
    for (Sign g : v.entries()) row.push_back(sign_to_int(g));
    arr.push_back(std::move(row));
  }
  out << root.dump(2) << "\n";
}

}  // namespace coms

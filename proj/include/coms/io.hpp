#pragma once

// Covector file formats.
//
// Text: one covector per line over '+', '0', '-'; '#' starts a comment line;
// an optional first line "elements: e1,e2,..." names the ground set (defaults
// to e1..en). Blank lines are ignored, except that after a header declaring
// zero elements each blank line is the empty covector.
//
// JSON: {"elements": [...], "covectors": [[-1,0,1], ...]}.

#include <iosfwd>
#include <string>

#include "coms/sign_system.hpp"

namespace coms {

SignSystem read_covectors_text(std::istream& in);
SignSystem read_covectors_json(std::istream& in);

// Sniffs the format: first significant character '{' means JSON.
SignSystem read_covectors(std::istream& in);
SignSystem read_covectors_file(const std::string& path);

void write_covectors_text(std::ostream& out, const SignSystem& s);
void write_covectors_json(std::ostream& out, const SignSystem& s);

}  // namespace coms

#include "coms/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "coms/arrangement.hpp"
#include "coms/axioms.hpp"
#include "coms/errors.hpp"
#include "coms/io.hpp"
#include "coms/minors.hpp"
#include "coms/poset.hpp"
#include "coms/reconstruction.hpp"

namespace coms::cli {

namespace {

using nlohmann::json;

void emit(const std::string& opath, const std::string& content) {
  if (opath.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opath);
  if (!out) throw DomainError("cannot open output file '" + opath + "'");
  out << content;
}

std::string covectors_as(const SignSystem& s, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    write_covectors_json(out, s);
  } else {
    write_covectors_text(out, s);
  }
  return out.str();
}

ArrangementInput read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_arrangement_json(in);
}

std::string witness_text(const char* axiom, const AxiomCheck& c, const GroundSet& ground) {
  if (c.holds) return "-";
  const AxiomWitness& w = *c.witness;
  if (std::string(axiom) == "Z") return "zero vector absent";
  std::string out;
  if (w.vectors.size() >= 1) out += "X=" + w.vectors[0].to_string();
  if (w.vectors.size() >= 2) out += " Y=" + w.vectors[1].to_string();
  if (w.element >= 0) out += " e=" + ground.label(w.element);
  return out;
}

json witness_json(const AxiomCheck& c, const GroundSet& ground) {
  json out;
  out["holds"] = c.holds;
  if (!c.holds) {
    json w;
    auto& vecs = w["vectors"] = json::array();
    for (const auto& v : c.witness->vectors) vecs.push_back(v.to_string());
    if (c.witness->element >= 0) w["element"] = ground.label(c.witness->element);
    out["witness"] = std::move(w);
  }
  return out;
}

std::string render_check(const SignSystem& s, const std::string& format) {
  const AxiomReport r = check_axioms(s);
  std::ostringstream out;
  if (format == "json") {
    json root;
    root["axioms"]["fs"] = witness_json(r.fs, s.ground());
    root["axioms"]["se"] = witness_json(r.se, s.ground());
    root["axioms"]["c"] = witness_json(r.c, s.ground());
    root["axioms"]["sym"] = witness_json(r.sym, s.ground());
    root["axioms"]["z"] = witness_json(r.z, s.ground());
    root["com"] = r.com;
    root["om"] = r.om;
    out << root.dump(2) << "\n";
    return out.str();
  }
  out << std::left << std::setw(6) << "axiom" << std::setw(7) << "holds" << "witness\n";
  const auto row = [&](const char* name, const AxiomCheck& c) {
    out << std::left << std::setw(6) << name << std::setw(7) << (c.holds ? "yes" : "no")
        << witness_text(name, c, s.ground()) << "\n";
  };
  row("FS", r.fs);
  row("SE", r.se);
  row("C", r.c);
  row("Sym", r.sym);
  row("Z", r.z);
  out << "COM: " << (r.com ? "yes" : "no") << "\n";
  out << "OM: " << (r.om ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_poset(const SignSystem& s, bool dot, const std::string& format) {
  const CovectorPoset p = build_poset(s);
  if (dot) return to_dot(p);
  std::ostringstream out;
  if (format == "json") {
    json root;
    root["elements"] = json::array();
    for (const auto& l : s.ground().labels()) root["elements"].push_back(l);
    auto& cov = root["covectors"] = json::array();
    for (const auto& v : p.elements) cov.push_back(v.to_string());
    root["ranks"] = p.ranks;
    root["systemRank"] = p.system_rank;
    auto& hasse = root["hasse"] = json::array();
    for (const auto& [i, j] : p.hasse) hasse.push_back(json::array({i, j}));
    out << root.dump(2) << "\n";
    return out.str();
  }
  out << "elements:";
  for (std::size_t i = 0; i < s.ground().size(); ++i) {
    out << (i ? "," : " ") << s.ground().label(i);
  }
  out << "\ncovectors: " << p.elements.size() << "\n";
  out << "systemRank: " << p.system_rank << "\n";
  out << "ranks:\n";
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    out << "  " << p.elements[i].to_string() << "  " << p.ranks[i] << "\n";
  }
  out << "hasse:\n";
  for (const auto& [i, j] : p.hasse) {
    out << "  " << p.elements[i].to_string() << " -> " << p.elements[j].to_string() << "\n";
  }
  return out.str();
}

std::string render_fpoly(const SignSystem& s, const std::string& format) {
  const FPolynomial f = f_polynomial(s);
  std::ostringstream out;
  if (format == "json") {
    json root;
    auto& coeffs = root["coefficients"] = json::object();
    for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
      if (f.coefficients[k] != 0) coeffs[std::to_string(k)] = f.coefficients[k];
    }
    root["rendered"] = render_polynomial(f);
    out << root.dump(2) << "\n";
    return out.str();
  }
  out << render_polynomial(f) << "\n";
  return out.str();
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"conditional oriented matroid toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string opath;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o,--output", opath, "write output to a file instead of stdout");
  };

  std::string in_path;
  std::string arrangement_path;
  bool om_mode = false, verify = false, force = false, reduce = false, dot = false;
  double epsilon = 1e-9;
  std::vector<std::string> delete_labels, contract_labels;

  CLI::App* cmd_check = app.add_subcommand("check", "report the axiom status of a covector file");
  cmd_check->add_option("file", in_path, "covector file")->required();
  add_common(cmd_check);

  CLI::App* cmd_topes = app.add_subcommand("topes", "extract the maximal covectors");
  cmd_topes->add_option("file", in_path, "covector file")->required();
  add_common(cmd_topes);

  CLI::App* cmd_rec = app.add_subcommand("reconstruct", "expand a tope set into its covector set");
  cmd_rec->add_option("file", in_path, "tope file")->required();
  cmd_rec->add_flag("--om", om_mode, "use the oriented matroid composition rule");
  cmd_rec->add_flag("--verify", verify, "audit the result and warn on inconsistencies");
  cmd_rec->add_flag("--force", force, "enumerate supports larger than 20 elements");
  add_common(cmd_rec);

  CLI::App* cmd_minor = app.add_subcommand("minor", "delete or contract elements");
  cmd_minor->add_option("file", in_path, "covector file")->required();
  CLI::Option* opt_del =
      cmd_minor->add_option("--delete", delete_labels, "labels to delete")->delimiter(',');
  CLI::Option* opt_con =
      cmd_minor->add_option("--contract", contract_labels, "labels to contract")->delimiter(',');
  opt_del->excludes(opt_con);
  add_common(cmd_minor);

  CLI::App* cmd_poset = app.add_subcommand("poset", "covector poset with ranks and Hasse diagram");
  cmd_poset->add_option("file", in_path, "covector file")->required();
  cmd_poset->add_flag("--dot", dot, "emit the Hasse diagram in DOT");
  add_common(cmd_poset);

  CLI::App* cmd_fpoly = app.add_subcommand("fpoly", "f-polynomial of the covector poset");
  cmd_fpoly->add_option("file", in_path, "covector file");
  cmd_fpoly->add_option("--arrangement", arrangement_path, "arrangement JSON file instead");
  cmd_fpoly->add_option("--epsilon", epsilon, "zero band for floating inputs")
      ->check(CLI::PositiveNumber);
  cmd_fpoly->add_flag("--force", force, "enumerate supports larger than 20 elements");
  add_common(cmd_fpoly);

  CLI::App* cmd_arr = app.add_subcommand("from-arrangement",
                                         "covector system of a sampled hyperplane arrangement");
  cmd_arr->add_option("file", arrangement_path, "arrangement JSON file")->required();
  cmd_arr->add_flag("--reduce", reduce, "delete coordinates constant across all covectors");
  cmd_arr->add_option("--epsilon", epsilon, "zero band for floating inputs")
      ->check(CLI::PositiveNumber);
  cmd_arr->add_flag("--force", force, "enumerate supports larger than 20 elements");
  add_common(cmd_arr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_check->parsed()) {
      emit(opath, render_check(read_covectors_file(in_path), format));
    } else if (cmd_topes->parsed()) {
      const TopeSet t = topes_of(read_covectors_file(in_path));
      emit(opath, covectors_as(SignSystem(t.ground, t.topes), format));
    } else if (cmd_rec->parsed()) {
      const SignSystem input = read_covectors_file(in_path);
      const TopeSet t = TopeSet::create(input.ground(), input.covectors());
      const ReconstructOptions opts{force};
      const SignSystem result = om_mode ? reconstruct_om(t, opts) : reconstruct_com(t, opts);
      if (verify) {
        const ReconstructionAudit audit = audit_reconstruction(t, result);
        if (!audit.result_is_com) {
          std::cerr << "warning: reconstruction is not a conditional oriented matroid\n";
        }
        if (!audit.topes_match) {
          std::cerr << "warning: maximal covectors of the reconstruction differ from the input\n";
        }
      }
      emit(opath, covectors_as(result, format));
    } else if (cmd_minor->parsed()) {
      if (delete_labels.empty() && contract_labels.empty()) {
        std::cerr << "error: minor needs --delete or --contract\n";
        return 2;
      }
      const SignSystem s = read_covectors_file(in_path);
      const SignSystem result = !delete_labels.empty() ? deletion(s, delete_labels)
                                                       : contraction(s, contract_labels);
      emit(opath, covectors_as(result, format));
    } else if (cmd_poset->parsed()) {
      if (dot && format == "json") {
        std::cerr << "error: --dot and --format json are mutually exclusive\n";
        return 2;
      }
      emit(opath, render_poset(read_covectors_file(in_path), dot, format));
    } else if (cmd_fpoly->parsed()) {
      if (in_path.empty() == arrangement_path.empty()) {
        std::cerr << "error: fpoly needs exactly one of a covector file or --arrangement\n";
        return 2;
      }
      SignSystem s;
      if (!arrangement_path.empty()) {
        const ArrangementInput ai = read_arrangement_file(arrangement_path);
        const SignPolicy policy{ai.exact_inputs, epsilon};
        s = apartment_to_com(ai.arrangement, ai.points, policy, ReconstructOptions{force});
      } else {
        s = read_covectors_file(in_path);
      }
      emit(opath, render_fpoly(s, format));
    } else if (cmd_arr->parsed()) {
      const ArrangementInput ai = read_arrangement_file(arrangement_path);
      const SignPolicy policy{ai.exact_inputs, epsilon};
      SignSystem s = apartment_to_com(ai.arrangement, ai.points, policy, ReconstructOptions{force});
      if (reduce) s = drop_constant_coordinates(s);
      emit(opath, covectors_as(s, format));
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coms::cli

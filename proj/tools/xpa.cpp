// Command-line driver over the kernel: parse a document, run the requested
// check, and emit a deterministic report.
//
// Exit codes: 0 verdict-pass, 1 verdict-fail, 2 undecided, 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "xpa/criteria.hpp"
#include "xpa/dsl.hpp"
#include "xpa/report.hpp"

namespace {

using namespace xpa;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw XpaError("InputError", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const std::string& path, const std::string& field_flag) {
  std::string text = read_file(path);
  Document doc = parse(text);
  if (!field_flag.empty()) {
    if (!doc.field_declared) {
      doc = parse("field " + (field_flag == "Q" ? std::string("Q")
                                                : "F " + field_flag.substr(1)) +
                  "\n" + text);
    } else if (doc.field.describe() != field_flag) {
      throw XpaError("InputError", "--field " + field_flag + " conflicts with document field " +
                                       doc.field.describe());
    }
  }
  return doc;
}

const ActionDecl& pick_action(const Document& doc, const std::string& name) {
  if (!name.empty()) {
    const ActionDecl* a = doc.find_action(name);
    if (!a) throw XpaError("InputError", "no action named '" + name + "'");
    return *a;
  }
  if (doc.actions.empty()) throw XpaError("InputError", "document declares no action");
  return doc.actions.front();
}

const GradingDecl& pick_grading(const Document& doc, const std::string& name) {
  if (!name.empty()) {
    const GradingDecl* g = doc.find_grading(name);
    if (!g) throw XpaError("InputError", "no grading named '" + name + "'");
    return *g;
  }
  if (doc.gradings.empty()) throw XpaError("InputError", "document declares no grading");
  return doc.gradings.front();
}

int finish(Json& j, const std::string& format, bool pass) {
  j["verdict"] = pass ? "pass" : "fail";
  std::cout << emit_report(j, format);
  return pass ? 0 : 1;
}

Json twist_tables(const TwistedPartialAction& t) {
  Json tw = Json::object();
  const FiniteGroup& gr = t.group();
  for (std::size_t g = 0; g < gr.order(); ++g)
    for (std::size_t h = 0; h < gr.order(); ++h) {
      Json e;
      e["R"] = json_matrix(t.twist(g, h).r_matrix());
      e["L"] = json_matrix(t.twist(g, h).l_matrix());
      tw["w[" + gr.name(g) + "," + gr.name(h) + "]"] = std::move(e);
    }
  return tw;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace xpa;
  CLI::App app{"crossed products by twisted partial actions: construction and criteria"};
  app.require_subcommand(1);

  std::string file, name, format = "human", field_flag, route_flag = "auto";
  unsigned long seed = 0;
  std::size_t trials = 200, enum_budget = 1000000, amp_n = 2;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input document")->required();
    cmd->add_option("--name", name, "object name (default: first of its kind)");
    cmd->add_option("--format", format, "human or json-like")
        ->check(CLI::IsMember({"human", "json-like"}));
    cmd->add_option("--field", field_flag, "expected field (Q or F<p>)");
  };
  CLI::App* c_verify = app.add_subcommand("verify-action", "check the six action postulates");
  CLI::App* c_ident = app.add_subcommand("identities", "check the derived identity suite (D1)-(D9)");
  CLI::App* c_build = app.add_subcommand("build-crossed", "build and verify the crossed product");
  CLI::App* c_grading = app.add_subcommand("check-grading", "check condition (i) and non-degeneracy");
  CLI::App* c_criteria = app.add_subcommand("check-criteria", "decide crossed-productness constructively");
  CLI::App* c_amplify = app.add_subcommand("amplify", "matrix-amplify a grading, print the document");
  for (CLI::App* c : {c_verify, c_ident, c_build, c_grading, c_criteria, c_amplify})
    add_common(c);
  c_criteria->add_option("--seed", seed, "search seed");
  c_criteria->add_option("--trials", trials, "random trials per search");
  c_criteria->add_option("--enum-budget", enum_budget, "max points for exhaustive F_p search");
  c_criteria->add_option("--route", route_flag, "auto, psi, or uv")
      ->check(CLI::IsMember({"auto", "psi", "uv"}));
  c_amplify->add_option("--n", amp_n, "amplification size")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    Document doc = load(file, field_flag);
    Json j;
    j["input"] = file;

    if (c_verify->parsed() || c_ident->parsed()) {
      const ActionDecl& ad = pick_action(doc, name);
      j["command"] = c_verify->parsed() ? "verify-action" : "identities";
      j["action"] = ad.name;
      VerificationReport rep = c_verify->parsed() ? verify_action(*ad.action)
                                                  : check_derived_identities(*ad.action);
      j["checks"] = json_checks(rep);
      return finish(j, format, rep.passed());
    }

    if (c_build->parsed()) {
      const ActionDecl& ad = pick_action(doc, name);
      j["command"] = "build-crossed";
      j["action"] = ad.name;
      try {
        CrossedProduct cp = CrossedProduct::build(*ad.action);
        j["dim"] = cp.dim();
        Json comps = Json::object();
        for (std::size_t g = 0; g < ad.action->group().order(); ++g)
          comps[ad.action->group().name(g)] = ad.action->domain(g).dim();
        j["component_dims"] = std::move(comps);
        j["basis"] = cp.algebra().basis_names();
        return finish(j, format, true);
      } catch (const XpaError& e) {
        if (e.kind() != "UnverifiedAction" && e.kind() != "AssociativityViolation") throw;
        j["error"] = std::string(e.what());
        return finish(j, format, false);
      }
    }

    if (c_grading->parsed()) {
      const GradingDecl& gd = pick_grading(doc, name);
      j["command"] = "check-grading";
      j["grading"] = gd.name;
      VerificationReport rep = check_condition_i(*gd.graded);
      VerificationReport nd = check_homogeneous_nondegeneracy(*gd.graded);
      for (auto& c : nd.checks) rep.checks.push_back(c);
      j["checks"] = json_checks(rep);
      return finish(j, format, rep.passed());
    }

    if (c_criteria->parsed()) {
      const GradingDecl& gd = pick_grading(doc, name);
      j["command"] = "check-criteria";
      j["grading"] = gd.name;
      SolverConfig cfg;
      cfg.seed = seed;
      cfg.trials = trials;
      cfg.enum_budget = enum_budget;
      cfg.route = route_flag == "psi"  ? SolverConfig::Route::Psi
                  : route_flag == "uv" ? SolverConfig::Route::Uv
                                       : SolverConfig::Route::Auto;
      j["seed"] = cfg.seed;
      j["trials"] = cfg.trials;
      j["enum_budget"] = cfg.enum_budget;
      j["route"] = route_flag;
      CriteriaResult res = check_criteria(*gd.graded, cfg);
      j["checks"] = json_check_list(res.trail);
      j["reason"] = res.reason;
      if (res.certificate) {
        const CriteriaCertificate& cert = *res.certificate;
        Json c;
        c["routes"] = cert.route_per_g;
        Json thetas = Json::object();
        const FiniteGroup& gr = gd.graded->group();
        for (std::size_t g = 0; g < gr.order(); ++g)
          thetas["theta[" + gr.name(g) + "]"] = json_matrix(cert.action->iso(g));
        c["theta"] = std::move(thetas);
        c["twists"] = twist_tables(*cert.action);
        c["phi"] = json_matrix(cert.phi);
        c["crossed_dim"] = cert.crossed->dim();
        j["certificate"] = std::move(c);
      }
      j["outcome"] = res.outcome == CriteriaOutcome::Certificate ? "certificate"
                     : res.outcome == CriteriaOutcome::Rejected  ? "rejected"
                                                                 : "undecided";
      j["verdict"] = res.outcome == CriteriaOutcome::Certificate ? "pass"
                     : res.outcome == CriteriaOutcome::Rejected  ? "fail"
                                                                 : "undecided";
      std::cout << emit_report(j, format);
      return res.outcome == CriteriaOutcome::Certificate ? 0
             : res.outcome == CriteriaOutcome::Rejected  ? 1
                                                         : 2;
    }

    if (c_amplify->parsed()) {
      const GradingDecl& gd = pick_grading(doc, name);
      GradedAlgebra amp = matrix_amplify(*gd.graded, amp_n);
      Document out;
      out.field = doc.field;
      out.field_declared = true;
      const GroupDecl* grp = doc.find_group(gd.group);
      out.groups.push_back(*grp);
      std::string aname = gd.algebra + "_x" + std::to_string(amp_n);
      out.algebras.push_back(
          {aname, std::shared_ptr<const StructureAlgebra>(amp.algebra_ptr())});
      out.gradings.push_back({gd.name + "_x" + std::to_string(amp_n), aname, gd.group,
                              std::make_shared<GradedAlgebra>(std::move(amp))});
      std::cout << print(out);
      return 0;
    }
    return 3;
  } catch (const XpaError& e) {
    std::cerr << "error: " << e.what() << (e.witness().empty() ? "" : " [" + e.witness() + "]")
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

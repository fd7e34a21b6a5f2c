// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "generators.hpp"
#include "xpa/criteria.hpp"
#include "xpa/dsl.hpp"
#include "xpa/report.hpp"

using namespace xpa;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void line(int n, bool pass, const std::string& label, const std::string& note = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion-" << n << ": " << label;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << "\n";
  if (!pass) ++failures;
}

std::string first_failure(const VerificationReport& rep) {
  for (const auto& c : rep.checks)
    if (!c.pass) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
  return "";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  std::ostringstream o;
  o.precision(1);
  o << std::fixed << s << "s";
  return o.str();
}

// Canonical report bytes for a criteria run, mirroring the CLI payload.
std::string canonical_report(const CriteriaResult& res) {
  Json j;
  j["outcome"] = res.outcome == CriteriaOutcome::Certificate ? "certificate"
                 : res.outcome == CriteriaOutcome::Rejected  ? "rejected"
                                                             : "undecided";
  j["reason"] = res.reason;
  j["trail"] = json_check_list(res.trail);
  if (res.certificate) {
    const CriteriaCertificate& c = *res.certificate;
    j["routes"] = c.route_per_g;
    j["phi"] = json_matrix(c.phi);
    const TwistedPartialAction& t = *c.action;
    const FiniteGroup& gr = t.group();
    for (std::size_t g = 0; g < gr.order(); ++g)
      j["theta"][gr.name(g)] = json_matrix(t.iso(g));
    for (std::size_t g = 0; g < gr.order(); ++g)
      for (std::size_t h = 0; h < gr.order(); ++h) {
        const Multiplier& w = t.twist(g, h);
        j["twist"][gr.name(g) + "," + gr.name(h)]["R"] = json_matrix(w.r_matrix());
        j["twist"][gr.name(g) + "," + gr.name(h)]["L"] = json_matrix(w.l_matrix());
      }
  }
  return emit_report(j, "json-like");
}

}  // namespace

int main() {
  Field q = Field::rationals();

  // --- Criteria 1-3: random action corpus with shared work -----------------
  std::vector<TwistedPartialAction> actions;
  std::vector<CrossedProduct> crossed;
  {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240601);
    bool assoc_ok = true;
    std::string note;
    while (actions.size() < 50) {
      TwistedPartialAction t = gen::random_f5_action(rng);
      if (!verify_action(t).passed()) continue;
      try {
        crossed.push_back(CrossedProduct::build(t));  // exhaustive associativity
      } catch (const XpaError& e) {
        assoc_ok = false;
        note = e.what();
        break;
      }
      actions.push_back(std::move(t));
    }
    double el = seconds_since(t0);
    bool pass = assoc_ok && actions.size() == 50 && el < 60.0;
    line(1, pass, "50 random verified actions build associative crossed products",
         pass ? fmt_secs(el) : note);
  }

  {
    bool all = true;
    std::string note;
    for (const auto& t : actions) {
      VerificationReport rep = check_derived_identities(t);
      if (!rep.passed()) {
        all = false;
        note = first_failure(rep);
        break;
      }
    }
    line(2, all && actions.size() == 50, "all nine derived identities hold on every action",
         note);
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    std::string note;
    for (const auto& cp : crossed) {
      GradedAlgebra gb = cp.canonical_grading();
      if (!check_condition_i(gb).passed() || !check_homogeneous_nondegeneracy(gb).passed()) {
        all = false;
        note = "necessary condition failed on a canonical grading";
        break;
      }
      CriteriaResult res = check_criteria(gb, SolverConfig{});
      if (res.outcome != CriteriaOutcome::Certificate) {
        all = false;
        note = res.reason;
        break;
      }
    }
    double el = seconds_since(t0);
    bool pass = all && crossed.size() == 50 && el < 120.0;
    line(3, pass, "necessity round trip certifies every crossed product", pass ? fmt_secs(el) : note);
  }

  // --- Criterion 4: hand examples ------------------------------------------
  {
    bool pass = true;
    std::string note;
    // (a) 2x2 matrices over Q with the diagonal/antidiagonal grading.
    CriteriaResult m2 = check_criteria(gen::m2_grading(q), SolverConfig{});
    if (m2.outcome != CriteriaOutcome::Certificate) {
      pass = false;
      note = "matrix example: " + m2.reason;
    } else {
      const TwistedPartialAction& t = *m2.certificate->action;
      const StructureAlgebra& a = t.ambient();
      Matrix swap(q, 2, 2);
      swap.at(0, 1) = q.one();
      swap.at(1, 0) = q.one();
      bool kk = vec_is_zero(a.multiply(a.basis_vector(0), a.basis_vector(1))) &&
                a.multiply(a.basis_vector(0), a.basis_vector(0)) == a.basis_vector(0) &&
                a.multiply(a.basis_vector(1), a.basis_vector(1)) == a.basis_vector(1);
      if (t.domain(1).dim() != 2 || !(t.iso(1) == swap) || !kk) {
        pass = false;
        note = "matrix example: wrong domain or non-swap isomorphism";
      }
    }
    // (b) quaternion twisted group algebra over the Klein group.
    if (pass) {
      auto s = gen::quaternion_cocycle();
      if (!s) {
        pass = false;
        note = "cocycle search found nothing";
      } else {
        CrossedProduct cp = CrossedProduct::build(gen::quaternion_action(q, *s));
        CriteriaResult res = check_criteria(cp.canonical_grading(), SolverConfig{});
        if (res.outcome != CriteriaOutcome::Certificate) {
          pass = false;
          note = "quaternion example: " + res.reason;
        }
      }
    }
    // (c) the 3-dimensional partial example over k x k.
    if (pass) {
      CrossedProduct cp = CrossedProduct::build(gen::three_dim_partial(q));
      CriteriaResult res = check_criteria(cp.canonical_grading(), SolverConfig{});
      if (res.outcome != CriteriaOutcome::Certificate) {
        pass = false;
        note = "partial example: " + res.reason;
      }
    }
    line(4, pass, "hand examples certify with the expected structure", note);
  }

  // --- Criterion 5: negative controls --------------------------------------
  {
    bool pass = true;
    std::string note;
    GradedAlgebra kx2 = gen::kx2_grading(q);
    VerificationReport ci = check_condition_i(kx2);
    VerificationReport nd = check_homogeneous_nondegeneracy(kx2);
    if (ci.passed() || nd.passed()) {
      pass = false;
      note = "dual numbers grading was not rejected on both conditions";
    }
    bool ci_witness = false, nd_witness = false;
    for (const auto& c : ci.checks)
      if (!c.pass && !c.witness.empty()) ci_witness = true;
    for (const auto& c : nd.checks)
      if (!c.pass && !c.witness.empty()) nd_witness = true;
    if (!ci_witness || !nd_witness) {
      pass = false;
      note = "missing concrete witness in a rejection";
    }
    if (pass) {
      auto s = gen::quaternion_cocycle();
      auto bad = *s;
      bad[1][2] = -bad[1][2];
      VerificationReport rep = verify_action(gen::quaternion_action(q, bad));
      bool saw = false;
      for (const auto& c : rep.checks)
        if (!c.pass && c.name.rfind("(vi)", 0) == 0 && c.witness.find("a=") != std::string::npos)
          saw = true;
      if (rep.passed() || !saw) {
        pass = false;
        note = "corrupted cocycle did not fail the cocycle postulate with a witness";
      }
    }
    line(5, pass, "negative controls rejected with concrete witnesses", note);
  }

  // --- Criterion 6: (u,v) identity suite on both routes ---------------------
  {
    bool pass = true;
    std::string note;
    std::vector<GradedAlgebra> corpus;
    corpus.push_back(gen::m2_grading(q));
    corpus.push_back(gen::m2_grading(Field::prime(5)));
    if (auto s = gen::quaternion_cocycle())
      corpus.push_back(CrossedProduct::build(gen::quaternion_action(q, *s)).canonical_grading());
    corpus.push_back(CrossedProduct::build(gen::three_dim_partial(q)).canonical_grading());
    for (const GradedAlgebra& gb : corpus) {
      for (std::size_t g = 0; pass && g < gb.group().order(); ++g) {
        LinkingAlgebra link(gb, g);
        std::vector<CornerMultiplierPair> pairs;
        PairSolveResult pr = solve_module_iso_pair(gb, g, SolverConfig{});
        if (pr.status == SolveStatus::Found) pairs.push_back(assemble_uv(gb, link, g, *pr.pair));
        UvSolveResult ur = solve_uv_directly(gb, link, g, SolverConfig{});
        if (ur.status == SolveStatus::Found) pairs.push_back(*ur.pair);
        if (pairs.empty()) {
          pass = false;
          note = "no corner pair found for a certifying grading";
        }
        for (const auto& uv : pairs) {
          VerificationReport rep = check_uv_properties(link, uv.u, uv.v);
          if (!rep.passed()) {
            pass = false;
            note = first_failure(rep);
            break;
          }
          if (!check_corner_iso(link, uv.u, uv.v).pass) {
            pass = false;
            note = "corner map is not multiplicative";
            break;
          }
        }
      }
      if (!pass) break;
    }
    line(6, pass, "corner pairs pass the full identity suite on both routes", note);
  }

  // --- Criterion 7: amplification stability ---------------------------------
  {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string note;
    GradedAlgebra gb = gen::m2_grading(q);
    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
      CriteriaResult res = check_criteria(matrix_amplify(gb, n), SolverConfig{});
      if (res.outcome != CriteriaOutcome::Certificate) {
        pass = false;
        note = "amplified matrix grading lost its certificate: " + res.reason;
      }
    }
    GradedAlgebra bad = gen::kx2_grading(q);
    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
      CriteriaResult res = check_criteria(matrix_amplify(bad, n), SolverConfig{});
      if (res.outcome != CriteriaOutcome::Rejected) {
        pass = false;
        note = "amplified degenerate grading was not rejected";
      }
    }
    double el = seconds_since(t0);
    pass = pass && el < 120.0;
    line(7, pass, "matrix amplification preserves both verdicts", pass ? fmt_secs(el) : note);
  }

  // --- Criterion 8: determinism ---------------------------------------------
  {
    SolverConfig cfg;
    cfg.seed = 31337;
    std::string r1 = canonical_report(check_criteria(gen::m2_grading(q), cfg));
    std::string r2 = canonical_report(check_criteria(gen::m2_grading(q), cfg));
    std::mt19937_64 rng(99);
    TwistedPartialAction t = gen::random_f5_action(rng);
    GradedAlgebra gb = CrossedProduct::build(t).canonical_grading();
    std::string r3 = canonical_report(check_criteria(gb, cfg));
    std::string r4 = canonical_report(check_criteria(gb, cfg));
    line(8, r1 == r2 && r3 == r4, "identical seeds give byte-identical reports");
  }

  // --- Criterion 9: parser corpus -------------------------------------------
  {
    bool pass = true;
    std::string note;
    fs::path dir = XPA_CORPUS_DIR;
    std::size_t n_docs = 0;
    std::vector<fs::path> docs;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".xpa") docs.push_back(e.path());
    std::sort(docs.begin(), docs.end());
    for (const auto& p : docs) {
      std::ifstream in(p);
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        Document doc = parse(ss.str());
        std::string once = print(doc);
        if (print(parse(once)) != once) {
          pass = false;
          note = p.filename().string() + ": print/parse is not a fixpoint";
          break;
        }
        ++n_docs;
      } catch (const XpaError& e) {
        pass = false;
        note = p.filename().string() + ": " + e.what();
        break;
      }
    }
    if (pass && n_docs < 10) {
      pass = false;
      note = "corpus has fewer than 10 documents";
    }
    if (pass) {
      std::ifstream manifest(dir / "errors" / "expected.txt");
      std::string row;
      std::size_t n_fixtures = 0;
      while (std::getline(manifest, row)) {
        if (row.empty() || row[0] == '#') continue;
        // filename|substring1|substring2|...
        std::vector<std::string> parts;
        std::stringstream rs(row);
        std::string part;
        while (std::getline(rs, part, '|')) parts.push_back(part);
        std::ifstream in(dir / "errors" / parts[0]);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string got;
        try {
          parse(ss.str());
          got = "<no error>";
        } catch (const XpaError& e) {
          got = std::string(e.kind()) + ": " + e.what();
        }
        for (std::size_t i = 1; i < parts.size(); ++i)
          if (got.find(parts[i]) == std::string::npos) {
            pass = false;
            note = parts[0] + ": expected \"" + parts[i] + "\" in \"" + got + "\"";
          }
        ++n_fixtures;
        if (!pass) break;
      }
      if (pass && n_fixtures == 0) {
        pass = false;
        note = "no error fixtures found";
      }
    }
    line(9, pass, "corpus round-trips and error fixtures match the manifest", note);
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

#pragma once

// Declarative text format for groups, algebras, gradings, and actions, with
// a canonical printer. The grammar is line-oriented; statements inside a
// block end with ';'. Unlisted basis products are zero; unlisted twists are
// the identity multiplier.

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "xpa/action.hpp"
#include "xpa/graded.hpp"

namespace xpa {

struct GroupDecl {
  std::string name;
  FiniteGroup group;
};

struct AlgebraDecl {
  std::string name;
  std::shared_ptr<const StructureAlgebra> algebra;
};

struct GradingDecl {
  std::string name, algebra, group;
  std::shared_ptr<const GradedAlgebra> graded;
};

struct ActionDecl {
  std::string name, algebra, group;
  std::shared_ptr<const TwistedPartialAction> action;
  // twists as written, for the canonical printer (all (g,h) pairs).
};

struct Document {
  Field field = Field::rationals();
  bool field_declared = false;
  std::vector<GroupDecl> groups;
  std::vector<AlgebraDecl> algebras;
  std::vector<GradingDecl> gradings;
  std::vector<ActionDecl> actions;

  const GroupDecl* find_group(const std::string& n) const {
    for (const auto& g : groups)
      if (g.name == n) return &g;
    return nullptr;
  }
  const AlgebraDecl* find_algebra(const std::string& n) const {
    for (const auto& a : algebras)
      if (a.name == n) return &a;
    return nullptr;
  }
  const GradingDecl* find_grading(const std::string& n) const {
    for (const auto& g : gradings)
      if (g.name == n) return &g;
    return nullptr;
  }
  const ActionDecl* find_action(const std::string& n) const {
    for (const auto& a : actions)
      if (a.name == n) return &a;
    return nullptr;
  }
};

namespace dsl_detail {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind = End;
  std::string text;
  std::size_t line = 0, col = 0;
};

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0, n = text.size();
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') { ++line; col = 1; }
      else ++col;
    }
  };
  while (i < n) {
    char ch = text[i];
    if (ch == '#') {  // comment to end of line
      while (i < n && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) { advance(1); continue; }
    std::size_t tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(ch)) ||
        (ch == '-' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i + (ch == '-' ? 1 : 0);
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < n && text[j] == '/' && j + 1 < n &&
          std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      std::string t = text.substr(i, j - i);
      advance(j - i);
      out.push_back({Token::Number, t, tl, tc});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string t = text.substr(i, j - i);
      advance(j - i);
      out.push_back({Token::Ident, t, tl, tc});
      continue;
    }
    if (std::string("{}()[];:,*=").find(ch) != std::string::npos) {
      out.push_back({Token::Punct, std::string(1, ch), tl, tc});
      advance(1);
      continue;
    }
    throw XpaError("ParseError", "line " + std::to_string(line) + ", col " +
                                     std::to_string(col) + ": unexpected character '" +
                                     std::string(1, ch) + "'");
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Document parse() {
    Document doc;
    while (peek().kind != Token::End) {
      const Token& t = peek();
      if (t.kind != Token::Ident) fail(t, "expected a declaration keyword");
      if (t.text == "field") parse_field(doc);
      else if (t.text == "group") parse_group(doc);
      else if (t.text == "algebra") parse_algebra(doc);
      else if (t.text == "grading") parse_grading(doc);
      else if (t.text == "action") parse_action(doc);
      else fail(t, "unknown declaration '" + t.text + "'");
    }
    return doc;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg, const char* kind = "ParseError") {
    throw XpaError(kind, "line " + std::to_string(t.line) + ", col " + std::to_string(t.col) +
                             ": " + msg);
  }
  Token expect(Token::Kind k, const std::string& what) {
    Token t = next();
    if (t.kind != k) fail(t, "expected " + what + ", got '" + t.text + "'");
    return t;
  }
  Token expect_punct(const std::string& p) {
    Token t = next();
    if (t.kind != Token::Punct || t.text != p)
      fail(t, "expected '" + p + "', got '" + (t.kind == Token::End ? "<end>" : t.text) + "'");
    return t;
  }
  bool accept_punct(const std::string& p) {
    if (peek().kind == Token::Punct && peek().text == p) { ++pos_; return true; }
    return false;
  }
  Token expect_keyword(const std::string& kw) {
    Token t = next();
    if (t.kind != Token::Ident || t.text != kw)
      fail(t, "expected '" + kw + "', got '" + t.text + "'");
    return t;
  }

  // Group element names may be plain numbers (e.g. the identity "1").
  Token expect_name(const std::string& what) {
    Token t = next();
    if (t.kind != Token::Ident && t.kind != Token::Number)
      fail(t, "expected " + what + ", got '" + (t.kind == Token::End ? "<end>" : t.text) + "'");
    return t;
  }

  Fel parse_scalar(const Field& f) {
    Token t = next();
    if (t.kind != Token::Number) fail(t, "expected a numeric literal, got '" + t.text + "'");
    try {
      return f.from_string(t.text);
    } catch (const XpaError& e) {
      fail(t, e.witness().empty() ? e.what() : e.witness(), "SemanticError");
    }
  }

  void parse_field(Document& doc) {
    Token kw = next();  // field
    if (doc.field_declared) fail(kw, "duplicate field declaration", "SemanticError");
    Token t = expect(Token::Ident, "field name (Q or F)");
    if (t.text == "Q") doc.field = Field::rationals();
    else if (t.text == "F") {
      Token p = expect(Token::Number, "prime modulus");
      try {
        doc.field = Field::prime(std::stol(p.text));
      } catch (const XpaError& e) {
        fail(p, e.what(), "SemanticError");
      }
    } else fail(t, "field must be Q or F <p>");
    doc.field_declared = true;
    accept_punct(";");
  }

  std::vector<std::string> ident_list() {
    std::vector<std::string> out;
    while (peek().kind == Token::Ident) out.push_back(next().text);
    return out;
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> out;
    while (peek().kind == Token::Ident || peek().kind == Token::Number)
      out.push_back(next().text);
    return out;
  }

  void parse_group(Document& doc) {
    next();  // group
    Token name = expect(Token::Ident, "group name");
    if (doc.find_group(name.text)) fail(name, "duplicate group '" + name.text + "'", "SemanticError");
    expect_punct("{");
    std::vector<std::string> elems;
    std::vector<std::vector<std::size_t>> table;
    while (!accept_punct("}")) {
      Token kw = expect(Token::Ident, "'elements' or 'table'");
      if (kw.text == "elements") {
        elems = name_list();
        if (elems.empty()) fail(kw, "empty element list");
        expect_punct(";");
      } else if (kw.text == "table") {
        expect_punct(":");
        if (elems.empty()) fail(kw, "'elements' must come before 'table'", "SemanticError");
        std::size_t n = elems.size();
        table.assign(n, std::vector<std::size_t>(n));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            Token e = expect_name("group element name");
            std::size_t k = 0;
            while (k < n && elems[k] != e.text) ++k;
            if (k == n) fail(e, "unknown group element '" + e.text + "'", "SemanticError");
            table[i][j] = k;
          }
        expect_punct(";");
      } else fail(kw, "expected 'elements' or 'table'");
    }
    if (table.empty())
      fail(name, "group '" + name.text + "' has no table", "SemanticError");
    try {
      doc.groups.push_back({name.text, FiniteGroup::make(elems, table)});
    } catch (const XpaError& e) {
      fail(name, std::string(e.what()) + (e.witness().empty() ? "" : " " + e.witness()),
           "SemanticError");
    }
  }

  void parse_algebra(Document& doc) {
    next();  // algebra
    Token name = expect(Token::Ident, "algebra name");
    if (doc.find_algebra(name.text))
      fail(name, "duplicate algebra '" + name.text + "'", "SemanticError");
    expect_punct("{");
    std::vector<std::string> basis;
    std::vector<std::vector<Vec>> c;
    auto basis_index = [&](const Token& t) {
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == t.text) return i;
      fail(t, "unknown basis element '" + t.text + "'", "SemanticError");
    };
    while (!accept_punct("}")) {
      Token t = expect(Token::Ident, "'basis' or a basis element");
      if (t.text == "basis" && basis.empty()) {
        basis = ident_list();
        if (basis.empty()) fail(t, "empty basis list");
        c.assign(basis.size(), std::vector<Vec>(basis.size(), zero_vec(doc.field, basis.size())));
        expect_punct(";");
        continue;
      }
      if (basis.empty()) fail(t, "'basis' must come first", "SemanticError");
      std::size_t i = basis_index(t);
      expect_punct("*");
      std::size_t j = basis_index(expect(Token::Ident, "basis element"));
      expect_punct("=");
      c[i][j] = parse_combo(doc.field, basis);
      expect_punct(";");
    }
    if (basis.empty()) fail(name, "algebra '" + name.text + "' has no basis", "SemanticError");
    try {
      doc.algebras.push_back({name.text, std::make_shared<StructureAlgebra>(StructureAlgebra::make(
                                             doc.field, basis, c))});
    } catch (const XpaError& e) {
      fail(name, std::string(e.what()) + (e.witness().empty() ? "" : " at " + e.witness()),
           "SemanticError");
    }
  }

  // <combo> := 0 | <coef>? <name> (+ <coef>? <name>)*
  Vec parse_combo(const Field& f, const std::vector<std::string>& basis) {
    Vec v = zero_vec(f, basis.size());
    if (peek().kind == Token::Number && peek().text == "0" &&
        !(toks_[pos_ + 1].kind == Token::Ident)) {
      next();
      return v;
    }
    while (true) {
      Fel coef = f.one();
      if (peek().kind == Token::Number) coef = parse_scalar(f);
      Token t = expect(Token::Ident, "basis element");
      std::size_t k = 0;
      while (k < basis.size() && basis[k] != t.text) ++k;
      if (k == basis.size()) fail(t, "unknown basis element '" + t.text + "'", "SemanticError");
      v[k] = f.add(v[k], coef);
      if (!accept_punct("+")) break;
    }
    return v;
  }

  // <vector> := <basis name> | ( c1, c2, ... )
  Vec parse_vector(const Field& f, const StructureAlgebra& alg) {
    if (peek().kind == Token::Ident) {
      Token t = next();
      for (std::size_t i = 0; i < alg.dim(); ++i)
        if (alg.basis_names()[i] == t.text) return alg.basis_vector(i);
      fail(t, "unknown basis element '" + t.text + "'", "SemanticError");
    }
    Token open = expect_punct("(");
    Vec v;
    if (!accept_punct(")")) {
      while (true) {
        v.push_back(parse_scalar(f));
        if (accept_punct(")")) break;
        expect_punct(",");
      }
    }
    if (v.size() != alg.dim())
      fail(open, "vector has " + std::to_string(v.size()) + " entries, algebra dimension is " +
                     std::to_string(alg.dim()),
           "SemanticError");
    return v;
  }

  // [[a,b],[c,d]] ; [] is the 0x0 matrix.
  Matrix parse_matrix(const Field& f, std::size_t rows, std::size_t cols,
                      const std::string& what) {
    Token open = expect_punct("[");
    std::vector<Vec> rws;
    if (!accept_punct("]")) {
      while (true) {
        expect_punct("[");
        Vec row;
        if (!accept_punct("]")) {
          while (true) {
            row.push_back(parse_scalar(f));
            if (accept_punct("]")) break;
            expect_punct(",");
          }
        }
        rws.push_back(std::move(row));
        if (accept_punct("]")) break;
        expect_punct(",");
      }
    }
    if (rws.size() != rows || (rows > 0 && rws[0].size() != cols))
      fail(open, what + " must be " + std::to_string(rows) + "x" + std::to_string(cols),
           "SemanticError");
    for (const auto& r : rws)
      if (r.size() != cols)
        fail(open, what + " has ragged rows", "SemanticError");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.set_row(i, rws[i]);
    return m;
  }

  void parse_grading(Document& doc) {
    next();  // grading
    Token name = expect(Token::Ident, "grading name");
    if (doc.find_grading(name.text))
      fail(name, "duplicate grading '" + name.text + "'", "SemanticError");
    expect_keyword("on");
    Token an = expect(Token::Ident, "algebra name");
    const AlgebraDecl* alg = doc.find_algebra(an.text);
    if (!alg) fail(an, "unknown algebra '" + an.text + "'", "SemanticError");
    expect_keyword("by");
    Token gn = expect(Token::Ident, "group name");
    const GroupDecl* grp = doc.find_group(gn.text);
    if (!grp) fail(gn, "unknown group '" + gn.text + "'", "SemanticError");
    expect_punct("{");
    std::vector<std::vector<Vec>> comp_rows(grp->group.order());
    std::vector<bool> seen(grp->group.order(), false);
    while (!accept_punct("}")) {
      Token e = expect_name("group element");
      std::size_t g;
      try {
        g = grp->group.index_of(e.text);
      } catch (const XpaError&) {
        fail(e, "unknown group element '" + e.text + "'", "SemanticError");
      }
      if (seen[g]) fail(e, "duplicate component for '" + e.text + "'", "SemanticError");
      seen[g] = true;
      expect_punct(":");
      while (!accept_punct(";")) comp_rows[g].push_back(parse_vector(doc.field, *alg->algebra));
    }
    std::vector<SubspaceBasis> comps;
    for (std::size_t g = 0; g < grp->group.order(); ++g)
      comps.push_back(SubspaceBasis::span(doc.field, comp_rows[g], alg->algebra->dim()));
    try {
      auto graded = std::make_shared<GradedAlgebra>(
          GradedAlgebra::make(grp->group, alg->algebra, std::move(comps)));
      doc.gradings.push_back({name.text, an.text, gn.text, graded});
    } catch (const XpaError& e) {
      fail(name, std::string(e.what()) + (e.witness().empty() ? "" : ": " + e.witness()),
           "SemanticError");
    }
  }

  void parse_action(Document& doc) {
    next();  // action
    Token name = expect(Token::Ident, "action name");
    if (doc.find_action(name.text))
      fail(name, "duplicate action '" + name.text + "'", "SemanticError");
    expect_keyword("on");
    Token an = expect(Token::Ident, "algebra name");
    const AlgebraDecl* alg = doc.find_algebra(an.text);
    if (!alg) fail(an, "unknown algebra '" + an.text + "'", "SemanticError");
    expect_keyword("by");
    Token gn = expect(Token::Ident, "group name");
    const GroupDecl* grp = doc.find_group(gn.text);
    if (!grp) fail(gn, "unknown group '" + gn.text + "'", "SemanticError");
    const FiniteGroup& gr = grp->group;
    expect_punct("{");
    std::size_t n = gr.order();
    std::vector<std::vector<Vec>> dom_rows(n);
    std::vector<bool> dom_seen(n, false);
    // Matrix statements are skipped on the first pass and re-read once all
    // domains are known, since their shapes depend on the domain dimensions.
    std::vector<std::size_t> theta_start(n, 0);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> twist_start;
    while (!accept_punct("}")) {
      Token kw = expect(Token::Ident, "'domain', 'theta', or 'twist'");
      if (kw.text == "domain") {
        Token e = expect_name("group element");
        std::size_t g = element(gr, e);
        if (dom_seen[g]) fail(e, "duplicate domain for '" + e.text + "'", "SemanticError");
        dom_seen[g] = true;
        expect_punct(":");
        while (!accept_punct(";")) dom_rows[g].push_back(parse_vector(doc.field, *alg->algebra));
      } else if (kw.text == "theta") {
        Token e = expect_name("group element");
        std::size_t g = element(gr, e);
        expect_punct(":");
        theta_start[g] = pos_;
        skip_matrix();
        expect_punct(";");
      } else if (kw.text == "twist") {
        Token e1 = expect_name("group element");
        std::size_t g = element(gr, e1);
        Token e2 = expect_name("group element");
        std::size_t h = element(gr, e2);
        expect_punct(":");
        twist_start[{g, h}] = pos_;
        (void)e2;
        // (R=[[...]], L=[[...]])
        expect_punct("(");
        expect_keyword("R");
        expect_punct("=");
        skip_matrix();
        expect_punct(",");
        expect_keyword("L");
        expect_punct("=");
        skip_matrix();
        expect_punct(")");
        expect_punct(";");
      } else fail(kw, "expected 'domain', 'theta', or 'twist'");
    }
    for (std::size_t g = 0; g < n; ++g)
      if (!dom_seen[g])
        fail(name, "missing domain for '" + gr.name(g) + "'", "SemanticError");
    std::vector<SubspaceBasis> domains;
    for (std::size_t g = 0; g < n; ++g)
      domains.push_back(SubspaceBasis::span(doc.field, dom_rows[g], alg->algebra->dim()));
    std::size_t end_pos = pos_;
    std::vector<Matrix> isos;
    for (std::size_t g = 0; g < n; ++g) {
      if (theta_start[g] == 0)
        fail(name, "missing theta for '" + gr.name(g) + "'", "SemanticError");
      pos_ = theta_start[g];
      isos.push_back(parse_matrix(doc.field, domains[gr.inv(g)].dim(), domains[g].dim(),
                                  "theta " + gr.name(g)));
    }
    std::map<std::pair<std::size_t, std::size_t>, std::pair<Matrix, Matrix>> twists;
    for (const auto& [key, start] : twist_start) {
      auto [g, h] = key;
      SubspaceBasis carrier =
          alg->algebra->subspace_product(domains[g], domains[gr.mul(g, h)]);
      pos_ = start;
      expect_punct("(");
      expect_keyword("R");
      expect_punct("=");
      Matrix r = parse_matrix(doc.field, carrier.dim(), carrier.dim(),
                              "twist " + gr.name(g) + " " + gr.name(h) + " R");
      expect_punct(",");
      expect_keyword("L");
      expect_punct("=");
      Matrix l = parse_matrix(doc.field, carrier.dim(), carrier.dim(),
                              "twist " + gr.name(g) + " " + gr.name(h) + " L");
      twists[key] = {std::move(r), std::move(l)};
    }
    pos_ = end_pos;
    try {
      auto act = std::make_shared<TwistedPartialAction>(TwistedPartialAction::make(
          gr, alg->algebra, std::move(domains), std::move(isos), std::move(twists)));
      doc.actions.push_back({name.text, an.text, gn.text, act});
    } catch (const XpaError& e) {
      fail(name, std::string(e.what()) + (e.witness().empty() ? "" : ": " + e.witness()),
           "SemanticError");
    }
  }

  std::size_t element(const FiniteGroup& gr, const Token& t) {
    try {
      return gr.index_of(t.text);
    } catch (const XpaError&) {
      fail(t, "unknown group element '" + t.text + "'", "SemanticError");
    }
  }

  void skip_matrix() {
    expect_punct("[");
    std::size_t depth = 1;
    while (depth > 0) {
      Token t = next();
      if (t.kind == Token::End) fail(t, "unterminated matrix");
      if (t.kind == Token::Punct && t.text == "[") ++depth;
      if (t.kind == Token::Punct && t.text == "]") --depth;
    }
  }
};

inline std::string scalar_str(const Field& f, const Fel& x) { return f.to_string(x); }

inline std::string vector_str(const Field& f, const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += scalar_str(f, v[i]);
  }
  return s + ")";
}

inline std::string matrix_str(const Field& f, const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += scalar_str(f, m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

inline std::string combo_str(const Field& f, const Vec& v,
                             const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (!s.empty()) s += " + ";
    s += scalar_str(f, v[k]) + " " + names[k];
  }
  return s.empty() ? "0" : s;
}

}  // namespace dsl_detail

inline Document parse(const std::string& text) { return dsl_detail::Parser(text).parse(); }

/// Canonical printer: normalized statements in declaration order, grading and
/// domain vectors as coefficient tuples, all twists printed explicitly.
inline std::string print(const Document& doc) {
  using namespace dsl_detail;
  const Field& f = doc.field;
  std::ostringstream out;
  out << "field " << (f.is_prime() ? "F " + std::to_string(f.modulus()) : std::string("Q"))
      << "\n";
  for (const auto& gd : doc.groups) {
    const FiniteGroup& gr = gd.group;
    out << "group " << gd.name << " {\n  elements";
    for (const auto& n : gr.names()) out << " " << n;
    out << ";\n  table:";
    for (std::size_t i = 0; i < gr.order(); ++i)
      for (std::size_t j = 0; j < gr.order(); ++j) out << " " << gr.name(gr.mul(i, j));
    out << ";\n}\n";
  }
  for (const auto& ad : doc.algebras) {
    const StructureAlgebra& a = *ad.algebra;
    out << "algebra " << ad.name << " {\n  basis";
    for (const auto& n : a.basis_names()) out << " " << n;
    out << ";\n";
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (!vec_is_zero(a.basis_product(i, j)))
          out << "  " << a.basis_names()[i] << "*" << a.basis_names()[j] << " = "
              << combo_str(f, a.basis_product(i, j), a.basis_names()) << ";\n";
    out << "}\n";
  }
  for (const auto& gd : doc.gradings) {
    const GradedAlgebra& b = *gd.graded;
    out << "grading " << gd.name << " on " << gd.algebra << " by " << gd.group << " {\n";
    for (std::size_t g = 0; g < b.group().order(); ++g) {
      out << "  " << b.group().name(g) << ":";
      for (std::size_t i = 0; i < b.component(g).dim(); ++i)
        out << " " << vector_str(f, b.component(g).basis_vector(i));
      out << ";\n";
    }
    out << "}\n";
  }
  for (const auto& ad : doc.actions) {
    const TwistedPartialAction& t = *ad.action;
    const FiniteGroup& gr = t.group();
    out << "action " << ad.name << " on " << ad.algebra << " by " << ad.group << " {\n";
    for (std::size_t g = 0; g < gr.order(); ++g) {
      out << "  domain " << gr.name(g) << ":";
      for (std::size_t i = 0; i < t.domain(g).dim(); ++i)
        out << " " << vector_str(f, t.domain(g).space().basis_vector(i));
      out << ";\n";
    }
    for (std::size_t g = 0; g < gr.order(); ++g)
      out << "  theta " << gr.name(g) << ": " << matrix_str(f, t.iso(g)) << ";\n";
    for (std::size_t g = 0; g < gr.order(); ++g)
      for (std::size_t h = 0; h < gr.order(); ++h) {
        const Multiplier& w = t.twist(g, h);
        out << "  twist " << gr.name(g) << " " << gr.name(h) << ": (R="
            << matrix_str(f, w.r_matrix()) << ", L=" << matrix_str(f, w.l_matrix()) << ");\n";
      }
    out << "}\n";
  }
  return out.str();
}

}  // namespace xpa

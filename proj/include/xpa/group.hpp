#pragma once

// Finite groups as validated Cayley tables.

#include <cstddef>
#include <string>
#include <vector>

#include "xpa/field.hpp"

namespace xpa {

class FiniteGroup {
 public:
  /// Validates the table exhaustively: Latin square, associativity on all
  /// triples (witness reported), identity and inverses.
  static FiniteGroup make(std::vector<std::string> names,
                          std::vector<std::vector<std::size_t>> table) {
    FiniteGroup g;
    g.names_ = std::move(names);
    g.table_ = std::move(table);
    std::size_t n = g.names_.size();
    if (g.table_.size() != n)
      throw XpaError("ShapeMismatch", "Cayley table is not square");
    for (const auto& row : g.table_) {
      if (row.size() != n) throw XpaError("ShapeMismatch", "Cayley table is not square");
      for (auto x : row)
        if (x >= n) throw XpaError("ShapeMismatch", "Cayley table index out of range");
    }
    // Latin square: each row and column is a permutation.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> seen_r(n, false), seen_c(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        if (seen_r[g.table_[i][j]])
          throw XpaError("NotLatinSquare", "repeated entry in row of " + g.names_[i]);
        if (seen_c[g.table_[j][i]])
          throw XpaError("NotLatinSquare", "repeated entry in column of " + g.names_[i]);
        seen_r[g.table_[i][j]] = true;
        seen_c[g.table_[j][i]] = true;
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
            throw XpaError("NotAssociative", "Cayley table fails associativity",
                           "(" + g.names_[a] + "," + g.names_[b] + "," + g.names_[c] + ")");
    g.identity_ = n;
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n; ++a)
        if (g.table_[e][a] != a || g.table_[a][e] != a) { ok = false; break; }
      if (ok) { g.identity_ = e; break; }
    }
    if (g.identity_ == n) throw XpaError("NoIdentity", "Cayley table has no identity");
    g.inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) {
          g.inverse_[a] = b;
          break;
        }
      if (g.inverse_[a] == n)
        throw XpaError("NoInverse", "element has no inverse", g.names_[a]);
    }
    return g;
  }

  std::size_t order() const { return names_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw XpaError("UnknownName", "no group element named '" + name + "'");
  }

  bool operator==(const FiniteGroup& o) const {
    return names_ == o.names_ && table_ == o.table_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Cyclic group of order n with elements named 1, g, g2, ...
inline FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup::make(names, table);
}

/// Klein four-group with elements 1, a, b, c (c = ab).
inline FiniteGroup klein_four_group() {
  return FiniteGroup::make({"1", "a", "b", "c"},
                           {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

}  // namespace xpa

#pragma once

// Degree-filtered quotient of the free algebra on A, B, C by the two-sided
// ideal generated by [X, g], X one of the three defining elements and g a
// generator. Used as an independent check of the rewriting system's basis.

#include <map>
#include <string>
#include <vector>

#include "uaw/matrix.hpp"
#include "uaw/ncalgebra.hpp"

namespace uaw {

struct GradedQuotient {
  int degree = 0;
  long words = 0;          // words of length <= degree
  long relation_rank = 0;  // rank of u r v with |u r v| <= degree
  long dimension = 0;      // words - relation_rank
};

inline std::vector<std::string> words_up_to(int n) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (int len = 1; len <= n; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char g : {'A', 'B', 'C'}) next.push_back(w + g);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline GradedQuotient graded_quotient(const FieldContext& ctx, int N) {
  const std::vector<std::string> words = words_up_to(N);
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = k;

  std::vector<NCPoly> relations;
  for (CentralExpr x : {CentralExpr::Alpha, CentralExpr::Beta, CentralExpr::Gamma})
    for (const char* g : {"A", "B", "C"})
      relations.push_back(commutator(defining_element(ctx, x), NCPoly::word(ctx, g)));

  Echelon ech(ctx, words.size());
  for (const auto& r : relations) {
    const int room = N - static_cast<int>(r.max_word_length());
    if (room < 0) continue;
    for (const auto& u : words_up_to(room))
      for (const auto& v : words_up_to(room - static_cast<int>(u.size()))) {
        std::vector<Cyclotomic> row(words.size(), Cyclotomic::zero(ctx));
        for (const auto& [m, c] : r.terms()) row[index.at(u + m.word + v)] += c;
        ech.insert(std::move(row));
      }
  }
  GradedQuotient g;
  g.degree = N;
  g.words = static_cast<long>(words.size());
  g.relation_rank = static_cast<long>(ech.size());
  g.dimension = g.words - g.relation_rank;
  return g;
}

}  // namespace uaw

#ifndef CHROMHESS_TEST_SUPPORT_HPP
#define CHROMHESS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "chromhess/graph.hpp"
#include "chromhess/hessenberg.hpp"
#include "chromhess/mpoly.hpp"
#include "chromhess/qpoly.hpp"
#include "chromhess/qsym.hpp"
#include "chromhess/sym.hpp"

// Set by the shared test main from --seed=N (default 12345).
unsigned test_seed();

namespace chromhess::testing {

inline std::mt19937 make_rng(unsigned salt = 0) {
  return std::mt19937(test_seed() + salt * 7919u);
}

inline QRational frac(long num, long den = 1) {
  return QRational(Rational(num, den));
}

inline QRational qp(int k) { return QRational::q_power(k); }

/// Graph of the 1-based Hessenberg text, e.g. gh("2,3,3").
inline OrderedGraph gh(const char* text) {
  return graph_of(HessenbergFunction::parse(text));
}

inline OrderedGraph random_graph(std::mt19937& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> size(min_n, max_n);
  const int n = size(rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return OrderedGraph(n, std::move(edges));
}

inline QPoly random_qpoly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::vector<Rational> coeffs;
  const int d = deg(rng);
  for (int k = 0; k <= d; ++k) coeffs.emplace_back(coeff(rng));
  return QPoly(std::move(coeffs));
}

inline QRational random_qrational(std::mt19937& rng, int max_degree) {
  const QPoly num = random_qpoly(rng, max_degree);
  QPoly den = random_qpoly(rng, max_degree);
  while (den.is_zero()) den = random_qpoly(rng, max_degree);
  return QRational(num, den);
}

inline MPoly random_mpoly(std::mt19937& rng, int nvars, VarFamily family,
                          int max_terms, int max_degree) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> expo(0, max_degree);
  std::uniform_int_distribution<long> coeff(-4, 4);
  MPoly out(nvars, family);
  const int t = terms(rng);
  for (int k = 0; k < t; ++k) {
    std::vector<int> e(static_cast<size_t>(nvars));
    for (int v = 0; v < nvars; ++v) e[static_cast<size_t>(v)] = expo(rng);
    out.add_term(e, Rational(coeff(rng)));
  }
  return out;
}

/// All Hessenberg functions of every size up to and including n.
inline std::vector<HessenbergFunction> all_hessenberg_up_to(int n) {
  std::vector<HessenbergFunction> out;
  for (int size = 0; size <= n; ++size) {
    for (auto& h : enumerate_hessenberg(size)) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace chromhess::testing

#endif

#include "chromhess/chromatic.hpp"

#include <algorithm>
#include <functional>

namespace chromhess {

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  Composition current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      current.push_back(part);
      rec(remaining - part);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

namespace {

// The lexicographically-least colour word of type alpha: alpha_1 zeros,
// alpha_2 ones, ...  next_permutation then walks all colourings of that
// type exactly once.
std::vector<int> initial_word(const Composition& alpha) {
  std::vector<int> word;
  for (size_t colour = 0; colour < alpha.size(); ++colour) {
    word.insert(word.end(), static_cast<size_t>(alpha[colour]),
                static_cast<int>(colour));
  }
  return word;
}

template <typename Fn>
void for_each_colouring_of_type(const Composition& alpha, Fn&& fn) {
  std::vector<int> word = initial_word(alpha);
  if (word.empty()) {
    fn(word);
    return;
  }
  do {
    fn(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace

QSymElement induced_qsym(const OrderedGraph& g, const GraphCharacter& zeta) {
  QSymElement out;
  for (const Composition& alpha : compositions_of(g.n())) {
    const int r = static_cast<int>(alpha.size());
    QRational coefficient;
    for_each_colouring_of_type(alpha, [&](const std::vector<int>& word) {
      const Colouring kappa(std::max(r, 1), word);
      QRational term =
          QRational::q_power(ascent_count(g, kappa, AscentMode::Strict));
      for (const OrderedGraph& part : restrict_by_colouring(g, kappa)) {
        if (term.is_zero()) break;
        term *= zeta(part);
      }
      coefficient += term;
    });
    out.add_term(alpha, coefficient);
  }
  return out;
}

QSymElement csf_bruteforce(const OrderedGraph& g, ColouringWeight mode,
                           const QRational& t) {
  QSymElement out;
  for (const Composition& alpha : compositions_of(g.n())) {
    const int r = static_cast<int>(alpha.size());
    QRational coefficient;
    for_each_colouring_of_type(alpha, [&](const std::vector<int>& word) {
      const Colouring kappa(std::max(r, 1), word);
      switch (mode) {
        case ColouringWeight::ProperStrict:
          if (!is_proper(g, kappa)) return;
          coefficient +=
              QRational::q_power(ascent_count(g, kappa, AscentMode::Strict));
          break;
        case ColouringWeight::AllStrict:
          coefficient +=
              QRational::q_power(ascent_count(g, kappa, AscentMode::Strict));
          break;
        case ColouringWeight::AllWeak:
          coefficient +=
              QRational::q_power(ascent_count(g, kappa, AscentMode::Weak));
          break;
        case ColouringWeight::MonoWeighted:
          coefficient +=
              QRational::q_power(ascent_count(g, kappa, AscentMode::Strict)) *
              t.pow(static_cast<unsigned>(monochromatic_count(g, kappa)));
          break;
      }
    });
    out.add_term(alpha, coefficient);
  }
  return out;
}

Rational chromatic_polynomial(const OrderedGraph& g, int r) {
  if (g.n() == 0) return Rational(1);
  if (r == 0) return Rational(0);
  long count = 0;
  std::vector<int> kappa(static_cast<size_t>(g.n()), 0);
  while (true) {
    if (is_proper(g, Colouring(r, kappa))) ++count;
    int pos = 0;
    while (pos < g.n() && kappa[static_cast<size_t>(pos)] == r - 1) {
      kappa[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == g.n()) break;
    ++kappa[static_cast<size_t>(pos)];
  }
  return Rational(count);
}

}  // namespace chromhess

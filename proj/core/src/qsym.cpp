#include "chromhess/qsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chromhess {

int weight(const Composition& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

Partition sorted_partition(const Composition& alpha) {
  Partition p = alpha;
  std::sort(p.rbegin(), p.rend());
  return p;
}

QSymElement QSymElement::monomial(Composition alpha, QRational c) {
  QSymElement x;
  x.add_term(std::move(alpha), c);
  return x;
}

QRational QSymElement::coeff(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? QRational() : it->second;
}

void QSymElement::add_term(const Composition& alpha, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QSymElement& QSymElement::operator+=(const QSymElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

QSymElement QSymElement::scaled(const QRational& c) const {
  QSymElement out;
  if (c.is_zero()) return out;
  for (const auto& [a, v] : terms_) out.terms_.emplace(a, v * c);
  return out;
}

namespace {

// Overlapping shuffle of two compositions: at each step take the head of a,
// the head of b, or their sum.  Accumulates integer multiplicities.
void quasi_shuffle_rec(const Composition& a, size_t ia, const Composition& b,
                       size_t ib, Composition& prefix,
                       std::map<Composition, long>& out) {
  if (ia == a.size() && ib == b.size()) {
    ++out[prefix];
    return;
  }
  if (ia < a.size()) {
    prefix.push_back(a[ia]);
    quasi_shuffle_rec(a, ia + 1, b, ib, prefix, out);
    prefix.pop_back();
  }
  if (ib < b.size()) {
    prefix.push_back(b[ib]);
    quasi_shuffle_rec(a, ia, b, ib + 1, prefix, out);
    prefix.pop_back();
  }
  if (ia < a.size() && ib < b.size()) {
    prefix.push_back(a[ia] + b[ib]);
    quasi_shuffle_rec(a, ia + 1, b, ib + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

QSymElement operator*(const QSymElement& a, const QSymElement& b) {
  QSymElement out;
  for (const auto& [alpha, ca] : a.terms_) {
    for (const auto& [beta, cb] : b.terms_) {
      std::map<Composition, long> shuffles;
      Composition prefix;
      quasi_shuffle_rec(alpha, 0, beta, 0, prefix, shuffles);
      const QRational c = ca * cb;
      for (const auto& [gamma, mult] : shuffles) {
        out.add_term(gamma, c * QRational(Rational(mult)));
      }
    }
  }
  return out;
}

std::string QSymElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*M[";
    for (size_t i = 0; i < alpha.size(); ++i) {
      if (i) os << ",";
      os << alpha[i];
    }
    os << "]";
  }
  return os.str();
}

bool is_symmetric(const QSymElement& x) {
  std::map<Partition, QRational> class_value;
  for (const auto& [alpha, c] : x.terms()) {
    auto [it, inserted] = class_value.emplace(sorted_partition(alpha), c);
    if (!inserted && it->second != c) return false;
  }
  // Every rearrangement of a seen class must carry the class coefficient.
  for (const auto& [lambda, c] : class_value) {
    Composition alpha = lambda;
    std::sort(alpha.begin(), alpha.end());
    do {
      if (x.coeff(alpha) != c) return false;
    } while (std::next_permutation(alpha.begin(), alpha.end()));
  }
  return true;
}

QRational canonical_character(const QSymElement& x) {
  QRational out;
  for (const auto& [alpha, c] : x.terms()) {
    if (alpha.size() <= 1) out += c;
  }
  return out;
}

QRational canonical_character_convolved(const QSymElement& x) {
  QRational out;
  for (const auto& [alpha, c] : x.terms()) {
    const int r = static_cast<int>(alpha.size());
    if (r == 0) {
      out += c;
      continue;
    }
    const int total = weight(alpha);
    const int tail = total - alpha.front();
    QRational two_terms = QRational::q_power(tail) - QRational::q_power(total);
    if (r % 2 == 0) two_terms = -two_terms;
    out += c * two_terms;
  }
  return out;
}

}  // namespace chromhess

#include "chromhess/og_hopf.hpp"

#include <sstream>

namespace chromhess {

QRational OGElement::coeff(const OrderedGraph& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? QRational() : it->second;
}

void OGElement::add_term(const OrderedGraph& g, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OGElement& OGElement::operator+=(const OGElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

OGElement& OGElement::operator-=(const OGElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

OGElement OGElement::scaled(const QRational& c) const {
  OGElement out;
  if (c.is_zero()) return out;
  for (const auto& [g, v] : terms_) out.terms_.emplace(g, v * c);
  return out;
}

std::string OGElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << g.str();
  }
  return os.str();
}

OGTensor OGTensor::pure(Key factors) {
  OGTensor t(static_cast<int>(factors.size()));
  t.terms_.emplace(std::move(factors), QRational::one());
  return t;
}

QRational OGTensor::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? QRational() : it->second;
}

void OGTensor::add_term(const Key& k, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OGTensor& OGTensor::operator+=(const OGTensor& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

OGTensor& OGTensor::operator-=(const OGTensor& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

OGTensor OGTensor::scaled(const QRational& c) const {
  OGTensor out(arity_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

OGElement og_multiply(const OGTensor& x) {
  OGElement out;
  for (const auto& [factors, c] : x.terms()) {
    out.add_term(lex_union(factors), c);
  }
  return out;
}

OGTensor og_comultiply(const OGElement& x, int r) {
  OGTensor out(r);
  for (const auto& [g, c] : x.terms()) {
    const int n = g.n();
    if (r == 0) {
      // Only the empty graph admits a colouring with no colours.
      if (n == 0) out.add_term({}, c);
      continue;
    }
    std::vector<int> kappa(static_cast<size_t>(n), 0);
    while (true) {
      const Colouring col(r, kappa);
      const int ascents = ascent_count(g, col, AscentMode::Strict);
      out.add_term(restrict_by_colouring(g, col),
                   c * QRational::q_power(ascents));
      // Next colouring in base r.
      int pos = 0;
      while (pos < n && kappa[static_cast<size_t>(pos)] == r - 1) {
        kappa[static_cast<size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == n) break;
      ++kappa[static_cast<size_t>(pos)];
    }
  }
  return out;
}

OGElement grade_project(const OGElement& x, int n) {
  OGElement out;
  for (const auto& [g, c] : x.terms()) {
    if (g.n() == n) out.add_term(g, c);
  }
  return out;
}

GraphCharacter GraphCharacter::proper_indicator() {
  return GraphCharacter(Kind::ProperIndicator, QRational::one());
}

GraphCharacter GraphCharacter::all_one() {
  return GraphCharacter(Kind::AllOne, QRational::one());
}

GraphCharacter GraphCharacter::q_per_edge() {
  return GraphCharacter(Kind::PerEdgeWeight, QRational::q());
}

GraphCharacter GraphCharacter::t_per_edge(QRational t) {
  return GraphCharacter(Kind::PerEdgeWeight, std::move(t));
}

QRational GraphCharacter::operator()(const OrderedGraph& g) const {
  switch (kind_) {
    case Kind::ProperIndicator:
      return g.edge_count() == 0 ? QRational::one() : QRational();
    case Kind::AllOne:
      return QRational::one();
    case Kind::PerEdgeWeight:
      return weight_.pow(static_cast<unsigned>(g.edge_count()));
  }
  return QRational();
}

QRational og_character(const OGElement& x, const GraphCharacter& zeta) {
  QRational out;
  for (const auto& [g, c] : x.terms()) out += c * zeta(g);
  return out;
}

}  // namespace chromhess

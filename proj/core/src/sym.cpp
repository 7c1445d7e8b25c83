#include "chromhess/sym.hpp"

#include <algorithm>
#include <sstream>

#include "chromhess/errors.hpp"

namespace chromhess {

SymElementP SymElementP::power_sum(Partition lambda, QRational c) {
  SymElementP x;
  x.add_term(std::move(lambda), c);
  return x;
}

QRational SymElementP::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QRational() : it->second;
}

void SymElementP::add_term(const Partition& lambda, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymElementP& SymElementP::operator+=(const SymElementP& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

SymElementP& SymElementP::operator-=(const SymElementP& o) {
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

SymElementP operator*(const SymElementP& a, const SymElementP& b) {
  SymElementP out;
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) {
      Partition merged = la;
      merged.insert(merged.end(), lb.begin(), lb.end());
      std::sort(merged.rbegin(), merged.rend());
      out.add_term(merged, ca * cb);
    }
  }
  return out;
}

SymElementP SymElementP::scaled(const QRational& c) const {
  SymElementP out;
  if (c.is_zero()) return out;
  for (const auto& [l, v] : terms_) out.terms_.emplace(l, v * c);
  return out;
}

std::string SymElementP::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*p[";
    for (size_t i = 0; i < lambda.size(); ++i) {
      if (i) os << ",";
      os << lambda[i];
    }
    os << "]";
  }
  return os.str();
}

SymElementP diagonal_endo(const SymElementP& x,
                          const std::function<QRational(int)>& c) {
  SymElementP out;
  for (const auto& [lambda, v] : x.terms()) {
    QRational factor = QRational::one();
    for (int k : lambda) factor *= c(k);
    out.add_term(lambda, v * factor);
  }
  return out;
}

SymElementP omega(const SymElementP& x) {
  return diagonal_endo(x, [](int k) {
    return k % 2 == 0 ? QRational(Rational(-1)) : QRational::one();
  });
}

SymElementP antipode(const SymElementP& x) {
  return diagonal_endo(x, [](int) { return QRational(Rational(-1)); });
}

SymElementP eulerian(const SymElementP& x, const QRational& t) {
  return diagonal_endo(x, [&t](int k) { return t.pow(static_cast<unsigned>(k)); });
}

SymElementP one_minus_qk_endo(const SymElementP& x) {
  return diagonal_endo(x, [](int k) {
    return QRational::one() - QRational::q_power(k);
  });
}

std::map<std::vector<Partition>, QRational> sym_comultiply(
    const SymElementP& x, int r) {
  if (r < 1) throw Error("comultiplication arity must be at least 1");
  std::map<std::vector<Partition>, QRational> out;
  for (const auto& [lambda, c] : x.terms()) {
    const size_t parts = lambda.size();
    std::vector<int> slot(parts, 0);
    while (true) {
      std::vector<Partition> key(static_cast<size_t>(r));
      for (size_t i = 0; i < parts; ++i) {
        key[static_cast<size_t>(slot[i])].push_back(lambda[i]);
      }
      for (auto& p : key) std::sort(p.rbegin(), p.rend());
      auto [it, inserted] = out.emplace(std::move(key), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
      size_t pos = 0;
      while (pos < parts && slot[pos] == r - 1) {
        slot[pos] = 0;
        ++pos;
      }
      if (pos == parts) break;
      ++slot[pos];
    }
  }
  return out;
}

Rational z_factor(const Partition& lambda) {
  Rational z(1);
  int run = 0;
  int prev = 0;
  for (int k : lambda) {
    run = (k == prev) ? run + 1 : 1;
    prev = k;
    z *= Rational(static_cast<long>(k) * run);  // contributes k per part, m! overall
  }
  return z;
}

SymElementP kronecker(const SymElementP& a, const SymElementP& b) {
  SymElementP out;
  for (const auto& [lambda, ca] : a.terms()) {
    const QRational cb = b.coeff(lambda);
    if (cb.is_zero()) continue;
    out.add_term(lambda, ca * cb * QRational(z_factor(lambda)));
  }
  return out;
}

QSymElement to_monomial_basis(const SymElementP& x) {
  std::map<Partition, QSymElement> cache;
  QSymElement out;
  for (const auto& [lambda, c] : x.terms()) {
    auto it = cache.find(lambda);
    if (it == cache.end()) {
      QSymElement expansion = QSymElement::unit();
      for (int k : lambda) expansion = expansion * QSymElement::monomial({k});
      it = cache.emplace(lambda, std::move(expansion)).first;
    }
    out += it->second.scaled(c);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition current;
  // Parts chosen weakly decreasing, largest first.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

SymElementP from_monomial_basis(const QSymElement& x) {
  if (!is_symmetric(x)) throw Error("element is not symmetric");
  SymElementP out;
  if (x.is_zero()) return out;
  // Split by degree, then solve against the power-sum expansions.
  std::map<int, std::map<Partition, QRational>> by_degree;
  for (const auto& [alpha, c] : x.terms()) {
    by_degree[weight(alpha)][sorted_partition(alpha)] = c;
  }
  for (const auto& [degree, targets] : by_degree) {
    const std::vector<Partition> lambdas = partitions_of(degree);
    const size_t m = lambdas.size();
    // Columns: coefficient of M_(mu sorted desc) in the expansion of p_lambda.
    std::vector<std::vector<QRational>> matrix(m, std::vector<QRational>(m + 1));
    std::vector<QSymElement> expansions;
    expansions.reserve(m);
    for (const auto& lambda : lambdas) {
      expansions.push_back(to_monomial_basis(SymElementP::power_sum(lambda)));
    }
    for (size_t row = 0; row < m; ++row) {
      for (size_t col = 0; col < m; ++col) {
        matrix[row][col] = expansions[col].coeff(lambdas[row]);
      }
      auto it = targets.find(lambdas[row]);
      matrix[row][m] = it == targets.end() ? QRational() : it->second;
    }
    // Gaussian elimination with exact arithmetic.
    size_t pivot_row = 0;
    std::vector<int> pivot_col_of_row;
    for (size_t col = 0; col < m && pivot_row < m; ++col) {
      size_t sel = pivot_row;
      while (sel < m && matrix[sel][col].is_zero()) ++sel;
      if (sel == m) continue;
      std::swap(matrix[sel], matrix[pivot_row]);
      const QRational inv = QRational::one() / matrix[pivot_row][col];
      for (size_t j = col; j <= m; ++j) matrix[pivot_row][j] *= inv;
      for (size_t row = 0; row < m; ++row) {
        if (row == pivot_row || matrix[row][col].is_zero()) continue;
        const QRational factor = matrix[row][col];
        for (size_t j = col; j <= m; ++j) {
          matrix[row][j] -= factor * matrix[pivot_row][j];
        }
      }
      pivot_col_of_row.push_back(static_cast<int>(col));
      ++pivot_row;
    }
    if (pivot_row < m) throw Error("power-sum transition matrix is singular");
    for (size_t row = 0; row < m; ++row) {
      out.add_term(lambdas[static_cast<size_t>(pivot_col_of_row[row])],
                   matrix[row][m]);
    }
  }
  return out;
}

}  // namespace chromhess

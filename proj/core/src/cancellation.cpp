#include "chromhess/cancellation.hpp"

#include <algorithm>
#include <map>

#include "chromhess/chromatic.hpp"
#include "chromhess/errors.hpp"
#include "chromhess/hessenberg.hpp"
#include "chromhess/og_hopf.hpp"

namespace chromhess {

ZeroColouring::ZeroColouring(int r, std::vector<int> assignment)
    : r_(r), assignment_(std::move(assignment)) {
  std::vector<bool> used(static_cast<size_t>(r_) + 1, false);
  for (int c : assignment_) {
    if (c < 0 || c > r_) throw Error("colour outside {0} + [r]");
    used[static_cast<size_t>(c)] = true;
  }
  for (int c = 1; c <= r_; ++c) {
    if (!used[static_cast<size_t>(c)]) {
      throw Error("positive colour " + std::to_string(c) + " is unused");
    }
  }
}

int stat(const ZeroColouring& kappa, const OrderedGraph& g) {
  int value = 0;
  for (int v = 0; v < kappa.n(); ++v) {
    if (kappa(v) > 0) ++value;
  }
  for (const auto& [u, v] : g.edges()) {
    if (kappa(u) <= kappa(v)) ++value;  // weak ascent in the order 0 < 1 < ...
  }
  return value;
}

std::vector<ZeroColouring> enumerate_zero_colourings(int n) {
  std::vector<ZeroColouring> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<int> kappa(static_cast<size_t>(n), 0);
    while (true) {
      std::vector<bool> used(static_cast<size_t>(r) + 1, false);
      for (int c : kappa) used[static_cast<size_t>(c)] = true;
      bool all_used = true;
      for (int c = 1; c <= r; ++c) all_used = all_used && used[static_cast<size_t>(c)];
      if (all_used) out.emplace_back(r, kappa);
      int pos = 0;
      while (pos < n && kappa[static_cast<size_t>(pos)] == r) {
        kappa[static_cast<size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == n) break;
      ++kappa[static_cast<size_t>(pos)];
    }
  }
  return out;
}

QRational alternating_sum(const OrderedGraph& g) {
  QRational sum;
  for (const ZeroColouring& kappa : enumerate_zero_colourings(g.n())) {
    QRational term = QRational::q_power(stat(kappa, g));
    sum += kappa.r() % 2 == 0 ? term : -term;
  }
  return sum;
}

namespace {

// Doubled colour values: colour c is 2c, a fresh colour between c and c+1
// is 2c+1.  Compaction renames positive values order-preservingly to
// 1..r', keeping 0 fixed.
ZeroColouring compact(int n, std::vector<int> doubled) {
  std::vector<int> positives;
  for (int v : doubled) {
    if (v > 0) positives.push_back(v);
  }
  std::sort(positives.begin(), positives.end());
  positives.erase(std::unique(positives.begin(), positives.end()),
                  positives.end());
  std::map<int, int> rank;
  for (size_t k = 0; k < positives.size(); ++k) {
    rank[positives[k]] = static_cast<int>(k) + 1;
  }
  std::vector<int> out(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    out[static_cast<size_t>(v)] = doubled[static_cast<size_t>(v)] == 0
                                      ? 0
                                      : rank[doubled[static_cast<size_t>(v)]];
  }
  return ZeroColouring(static_cast<int>(positives.size()), std::move(out));
}

int colour_count(const ZeroColouring& kappa, int colour) {
  int count = 0;
  for (int v = 0; v < kappa.n(); ++v) {
    if (kappa(v) == colour) ++count;
  }
  return count;
}

}  // namespace

ZeroColouring cancelling_partner(const ZeroColouring& kappa,
                                 const OrderedGraph& g) {
  const int n = kappa.n();
  if (n < 2 || !g.has_edge(n - 2, n - 1)) {
    throw PreconditionViolated(
        "pairing requires at least two vertices and the edge between the last two");
  }
  const int last = n - 1;
  const int second = n - 2;

  std::vector<int> doubled(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) doubled[static_cast<size_t>(v)] = 2 * kappa(v);

  if (kappa(last) == 0) {
    // Recolour the second-to-last vertex one step down (deleting its colour)
    // when it is alone and positive; otherwise one half-step up.
    const int i = kappa(second);
    if (i >= 1 && colour_count(kappa, i) == 1) {
      doubled[static_cast<size_t>(second)] = 2 * (i - 1);
    } else {
      doubled[static_cast<size_t>(second)] = 2 * i + 1;
    }
  } else if (kappa(last) == 1 && colour_count(kappa, 1) == 1) {
    // Same moves for the second-to-last vertex, but along the colour
    // sequence 0, 2, 3, 4, ... which skips over colour 1.
    const int i = kappa(second);  // never 1 here
    if (i >= 2 && colour_count(kappa, i) == 1) {
      doubled[static_cast<size_t>(second)] = i == 2 ? 0 : 2 * (i - 1);
    } else {
      const int successor = i == 0 ? 2 : i + 1;
      doubled[static_cast<size_t>(second)] = 2 * successor - 1;
    }
  } else {
    // Recolour the last vertex.  Its colour is positive, and if it were
    // alone with colour 1 the previous case would have applied, so the
    // downward move never collides with colour 0.
    const int i = kappa(last);
    if (colour_count(kappa, i) == 1) {
      doubled[static_cast<size_t>(last)] = 2 * (i - 1);
    } else {
      doubled[static_cast<size_t>(last)] = 2 * i + 1;
    }
  }
  return compact(n, std::move(doubled));
}

CancellationReport verify_cancellation(const OrderedGraph& g) {
  CancellationReport report;
  try {
    report.graph = hessenberg_of(g).str();
  } catch (const NotUnitInterval&) {
    report.graph = g.str();
  }
  report.sum = alternating_sum(g);

  if (g.n() == 1) {
    report.base_case = true;
    report.terms = static_cast<long>(enumerate_zero_colourings(1).size());
    const QRational expected = QRational::one() - QRational::q();
    report.pass = report.sum == expected;
    return report;
  }
  if (g.n() < 2 || !g.has_edge(g.n() - 2, g.n() - 1)) {
    throw PreconditionViolated(
        "verification requires at least two vertices and the edge between the last two");
  }

  const std::vector<ZeroColouring> all = enumerate_zero_colourings(g.n());
  report.terms = static_cast<long>(all.size());
  bool ok = true;
  for (const ZeroColouring& kappa : all) {
    const ZeroColouring partner = cancelling_partner(kappa, g);
    if (partner == kappa) {
      ++report.fixed_points;
      ok = false;
      continue;
    }
    const bool involutive = cancelling_partner(partner, g) == kappa;
    const bool sign_reversed = (partner.r() - kappa.r() == 1) ||
                               (partner.r() - kappa.r() == -1);
    const bool stat_preserved = stat(partner, g) == stat(kappa, g);
    if (involutive && sign_reversed && stat_preserved) {
      ++report.paired;
    } else {
      ok = false;
    }
  }
  ok = ok && report.sum.is_zero();

  // The same cancellation seen through the Hopf route: the convolved
  // canonical character of the weak chromatic image.
  const QRational via_hopf = canonical_character_convolved(
      induced_qsym(g, GraphCharacter::q_per_edge()));
  ok = ok && via_hopf == report.sum;

  report.pass = ok;
  return report;
}

}  // namespace chromhess

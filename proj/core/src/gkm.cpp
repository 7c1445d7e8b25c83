#include "chromhess/gkm.hpp"

#include <algorithm>
#include <thread>

#include "chromhess/errors.hpp"

namespace chromhess {

GKMElement GKMElement::constant(const MomentGraph& m, const Rational& c) {
  GKMElement out = zeros(m);
  for (auto& p : out.coords_) p = MPoly::constant(m.n(), VarFamily::R, c);
  return out;
}

void GKMElement::set_coord(int id, MPoly p) {
  if (p.nvars() != n_ || p.family() != VarFamily::R) {
    throw FamilyMismatch("coordinate must be an R-polynomial in n variables");
  }
  coords_[static_cast<size_t>(id)] = std::move(p);
}

GKMElement GKMElement::multiplied(const MPoly& g) const {
  GKMElement out = *this;
  for (auto& p : out.coords_) p = p * g;
  return out;
}

GKMElement& GKMElement::operator+=(const GKMElement& o) {
  for (size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

GKMElement& GKMElement::operator-=(const GKMElement& o) {
  for (size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

bool GKMElement::satisfies_edge_conditions(const MomentGraph& m) const {
  for (const MomentEdge& e : m.edges()) {
    const MPoly diff = coord(e.source) - coord(e.target);
    if (!diff.divisible_by_difference(e.i, e.j)) return false;
  }
  return true;
}

std::vector<MPoly> GKMElement::left_coords(const MomentGraph& m) const {
  std::vector<MPoly> out;
  out.reserve(coords_.size());
  for (int id = 0; id < vertex_count(); ++id) {
    out.push_back(coord(id).permuted(m.vertex(id).images(), VarFamily::L));
  }
  return out;
}

GKMElement dot_action(const Perm& u, const GKMElement& x,
                      const MomentGraph& m) {
  GKMElement out = GKMElement::zeros(m);
  for (int id = 0; id < m.vertex_count(); ++id) {
    out.set_coord(m.index_of(u * m.vertex(id)), x.coord(id));
  }
  return out;
}

GKMElement build_element(
    const MomentGraph& m,
    const std::function<MPoly(int id, const GKMElement& partial)>& chooser) {
  GKMElement out = GKMElement::zeros(m);
  for (int id = 0; id < m.vertex_count(); ++id) {
    MPoly p = chooser(id, out);
    for (int e : m.in_edges(id)) {
      const MomentEdge& edge = m.edges()[static_cast<size_t>(e)];
      const MPoly diff = out.coord(edge.source) - p;
      if (!diff.divisible_by_difference(edge.i, edge.j)) {
        throw ChooserViolation("chosen polynomial violates an incoming edge condition");
      }
    }
    out.set_coord(id, std::move(p));
  }
  return out;
}

namespace {

// Exponent vectors of total degree d in n variables, ascending grlex.
std::vector<std::vector<int>> monomials_of_degree(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n - 1) {
      current[static_cast<size_t>(pos)] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      current[static_cast<size_t>(pos)] = e;
      rec(pos + 1, remaining - e);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

struct Congruence {
  int i;
  int j;
  const MPoly* neighbor;  // already-assigned coordinate across the edge
};

// Finds the homogeneous polynomial of degree d whose substitution X_i := X_j
// agrees with each neighbor's, solving the linear system on monomial
// coefficients by row echelon with free coefficients set to free_value.
MPoly solve_congruences(int n, int d, const std::vector<Congruence>& congruences,
                        const Rational& free_value) {
  const std::vector<std::vector<int>> monos = monomials_of_degree(n, d);
  const size_t cols = monos.size();

  // One block of rows per congruence, one row per image monomial.
  std::vector<std::vector<Rational>> matrix;  // cols entries + rhs
  for (const Congruence& cong : congruences) {
    std::map<std::vector<int>, int, GrlexLess> row_of;
    auto row_for = [&](const std::vector<int>& image) {
      auto [it, inserted] = row_of.emplace(image, static_cast<int>(matrix.size()));
      if (inserted) {
        matrix.emplace_back(cols + 1, Rational(0));
      }
      return it->second;
    };
    for (size_t c = 0; c < cols; ++c) {
      std::vector<int> image = monos[c];
      image[static_cast<size_t>(cong.j)] += image[static_cast<size_t>(cong.i)];
      image[static_cast<size_t>(cong.i)] = 0;
      matrix[static_cast<size_t>(row_for(image))][c] += Rational(1);
    }
    const MPoly rhs = cong.neighbor->substituted(cong.i, cong.j);
    for (const auto& [e, coeff] : rhs.terms()) {
      matrix[static_cast<size_t>(row_for(e))][cols] += coeff;
    }
  }

  // Forward elimination to row echelon form with normalized pivots.
  const size_t rows = matrix.size();
  std::vector<int> pivot_col;  // per echelon row
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = pivot_row;
    while (sel < rows && matrix[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(matrix[sel], matrix[pivot_row]);
    const Rational inv = matrix[pivot_row][col].inverse();
    for (size_t c = col; c <= cols; ++c) matrix[pivot_row][c] *= inv;
    for (size_t r = pivot_row + 1; r < rows; ++r) {
      if (matrix[r][col].is_zero()) continue;
      const Rational factor = matrix[r][col];
      for (size_t c = col; c <= cols; ++c) {
        matrix[r][c] -= factor * matrix[pivot_row][c];
      }
    }
    pivot_col.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  for (size_t r = pivot_row; r < rows; ++r) {
    if (!matrix[r][cols].is_zero()) {
      throw Infeasible("inconsistent flow-up congruence system");
    }
  }

  // Back-substitution; non-pivot coefficients take free_value.
  std::vector<Rational> solution(cols, free_value);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  for (size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) solution[c] = free_value;
  }
  for (size_t r = pivot_row; r-- > 0;) {
    const size_t col = static_cast<size_t>(pivot_col[r]);
    Rational value = matrix[r][cols];
    for (size_t c = col + 1; c < cols; ++c) {
      if (!matrix[r][c].is_zero()) value -= matrix[r][c] * solution[c];
    }
    solution[col] = value;
  }

  MPoly out(n, VarFamily::R);
  for (size_t c = 0; c < cols; ++c) out.add_term(monos[c], solution[c]);
  return out;
}

}  // namespace

GKMElement flow_up_vector(const MomentGraph& m, int id,
                          const Rational& free_value) {
  GKMElement out = GKMElement::zeros(m);
  const std::vector<bool> reach = m.reachable_from(id);
  const int n = m.n();

  MPoly seed = MPoly::constant(n, VarFamily::R, Rational(1));
  for (int e : m.in_edges(id)) {
    const MomentEdge& edge = m.edges()[static_cast<size_t>(e)];
    seed *= MPoly::difference(n, VarFamily::R, edge.i, edge.j);
  }
  const int degree = m.in_degree(id);
  out.set_coord(id, std::move(seed));

  for (int v = id + 1; v < m.vertex_count(); ++v) {
    if (!reach[static_cast<size_t>(v)]) continue;
    std::vector<Congruence> congruences;
    congruences.reserve(m.in_edges(v).size());
    for (int e : m.in_edges(v)) {
      const MomentEdge& edge = m.edges()[static_cast<size_t>(e)];
      congruences.push_back(Congruence{edge.i, edge.j, &out.coord(edge.source)});
    }
    out.set_coord(v, solve_congruences(n, degree, congruences, free_value));
  }
  return out;
}

FlowUpBasis::FlowUpBasis(const MomentGraph& m, const Rational& free_value,
                         int jobs)
    : graph_(&m) {
  const int count = m.vertex_count();
  basis_.assign(static_cast<size_t>(count), GKMElement::zeros(m));
  degrees_.assign(static_cast<size_t>(count), 0);
  left_basis_.resize(static_cast<size_t>(count));
  int threads = jobs > 0 ? jobs
                         : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, count));
  auto build_range = [&](int first_thread, int stride) {
    for (int id = first_thread; id < count; id += stride) {
      basis_[static_cast<size_t>(id)] = flow_up_vector(m, id, free_value);
      degrees_[static_cast<size_t>(id)] = m.in_degree(id);
      left_basis_[static_cast<size_t>(id)] =
          basis_[static_cast<size_t>(id)].left_coords(m);
    }
  };
  if (threads == 1) {
    build_range(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(build_range, t, threads);
    for (auto& th : pool) th.join();
  }
}

std::vector<MPoly> FlowUpBasis::coordinates(const GKMElement& x,
                                            VarFamily ring) const {
  const MomentGraph& m = *graph_;
  const int count = m.vertex_count();
  std::vector<MPoly> residual =
      ring == VarFamily::R ? x.coords() : x.left_coords(m);
  std::vector<MPoly> result(static_cast<size_t>(count), MPoly(m.n(), ring));
  for (int id = 0; id < count; ++id) {
    const MPoly& r = residual[static_cast<size_t>(id)];
    if (r.is_zero()) continue;
    const std::vector<MPoly>& basis_coords =
        ring == VarFamily::R ? basis_[static_cast<size_t>(id)].coords()
                             : left_basis_[static_cast<size_t>(id)];
    MPoly c(m.n(), ring);
    try {
      c = MPoly::exact_divide(r, basis_coords[static_cast<size_t>(id)]);
    } catch (const NotDivisible&) {
      throw NotInSpan("coordinate is not a polynomial multiple of the basis pivot");
    }
    for (int v = id; v < count; ++v) {
      const MPoly& bc = basis_coords[static_cast<size_t>(v)];
      if (!bc.is_zero()) residual[static_cast<size_t>(v)] -= c * bc;
    }
    result[static_cast<size_t>(id)] = std::move(c);
  }
  for (const MPoly& r : residual) {
    if (!r.is_zero()) throw NotInSpan("nonzero residual after triangular elimination");
  }
  return result;
}

MPoly FlowUpBasis::expansion_coefficient(const GKMElement& x, VarFamily ring,
                                         int stop_id) const {
  const MomentGraph& m = *graph_;
  std::vector<MPoly> residual;
  residual.reserve(static_cast<size_t>(stop_id) + 1);
  if (ring == VarFamily::R) {
    for (int v = 0; v <= stop_id; ++v) residual.push_back(x.coord(v));
  } else {
    for (int v = 0; v <= stop_id; ++v) {
      residual.push_back(x.coord(v).permuted(m.vertex(v).images(), VarFamily::L));
    }
  }
  for (int id = 0; id <= stop_id; ++id) {
    MPoly& r = residual[static_cast<size_t>(id)];
    if (r.is_zero()) continue;
    const std::vector<MPoly>& basis_coords =
        ring == VarFamily::R ? basis_[static_cast<size_t>(id)].coords()
                             : left_basis_[static_cast<size_t>(id)];
    MPoly c(m.n(), ring);
    try {
      c = MPoly::exact_divide(r, basis_coords[static_cast<size_t>(id)]);
    } catch (const NotDivisible&) {
      throw NotInSpan("coordinate is not a polynomial multiple of the basis pivot");
    }
    if (id == stop_id) return c;
    for (int v = id; v <= stop_id; ++v) {
      const MPoly& bc = basis_coords[static_cast<size_t>(v)];
      if (!bc.is_zero()) residual[static_cast<size_t>(v)] -= c * bc;
    }
  }
  return MPoly(m.n(), ring);  // residual vanished before the diagonal
}

QPoly FlowUpBasis::graded_trace(const Perm& u, VarFamily ring) const {
  const MomentGraph& m = *graph_;
  QPoly trace;
  const bool is_identity = u == Perm::identity(m.n());
  for (int id = 0; id < m.vertex_count(); ++id) {
    MPoly diagonal(m.n(), ring);
    if (is_identity) {
      diagonal = MPoly::constant(m.n(), ring, Rational(1));
    } else {
      const GKMElement moved =
          dot_action(u, basis_[static_cast<size_t>(id)], m);
      diagonal = expansion_coefficient(moved, ring, id);
    }
    if (!diagonal.is_constant()) {
      throw NonScalarDiagonal("diagonal basis coefficient has positive degree");
    }
    trace += QPoly::q_power(degrees_[static_cast<size_t>(id)])
                 .scaled(diagonal.constant_value());
  }
  return trace;
}

SymElementP frobenius(const FlowUpBasis& basis, VarFamily ring, int jobs) {
  const int n = basis.graph().n();
  const std::vector<Perm> group = Perm::all(n);
  std::vector<QPoly> traces(group.size());

  int threads = jobs > 0 ? jobs
                         : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(group.size())));
  if (threads == 1) {
    for (size_t k = 0; k < group.size(); ++k) {
      traces[k] = basis.graded_trace(group[k], ring);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (size_t k = static_cast<size_t>(t); k < group.size();
             k += static_cast<size_t>(threads)) {
          traces[k] = basis.graded_trace(group[k], ring);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  const QRational scale(QPoly(Rational(1) / Rational::factorial(
                            static_cast<unsigned>(n))));
  SymElementP out;
  for (size_t k = 0; k < group.size(); ++k) {
    out.add_term(group[k].cycle_type(), QRational(traces[k]) * scale);
  }
  return out;
}

SymElementP frobenius(const HessenbergFunction& h, VarFamily ring, int jobs) {
  const MomentGraph m(h);
  const FlowUpBasis basis(m, Rational(0), jobs);
  return frobenius(basis, ring, jobs);
}

GKMElement sign_element(const MomentGraph& m) {
  const int n = m.n();
  const OrderedGraph g = graph_of(m.hessenberg());
  MPoly product = MPoly::constant(n, VarFamily::R, Rational(1));
  for (const auto& [i, j] : g.edges()) {
    product *= MPoly::difference(n, VarFamily::R, i, j);
  }
  GKMElement out = GKMElement::zeros(m);
  for (int id = 0; id < m.vertex_count(); ++id) {
    const int sign = m.vertex(id).sign();
    out.set_coord(id, sign > 0 ? product : -product);
  }
  return out;
}

SymElementP poly_ring_frobenius(int n, VarFamily ring) {
  SymElementP out;
  const QRational one_minus_q =
      QRational::one() - QRational::q();
  for (const Perm& w : Perm::all(n)) {
    const Partition lambda = w.cycle_type();
    QRational coefficient = QRational::one();
    if (ring == VarFamily::L) {
      for (int part : lambda) {
        coefficient /= QRational::one() - QRational::q_power(part);
      }
    } else {
      coefficient /= one_minus_q.pow(static_cast<unsigned>(n));
    }
    out.add_term(lambda, coefficient);
  }
  return out.scaled(QRational(QPoly(Rational(1) /
                                    Rational::factorial(static_cast<unsigned>(n)))));
}

}  // namespace chromhess

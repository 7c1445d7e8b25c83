#include "chromhess/hessenberg.hpp"

#include <sstream>

#include "chromhess/errors.hpp"

namespace chromhess {

HessenbergFunction::HessenbergFunction(std::vector<int> values)
    : values_(std::move(values)) {
  const int n = this->n();
  for (int i = 0; i < n; ++i) {
    const int v = values_[static_cast<size_t>(i)];
    if (v < i || v >= n) {
      throw InvalidH("h(" + std::to_string(i + 1) + ") = " +
                     std::to_string(v + 1) + " is not in [" +
                     std::to_string(i + 1) + ", " + std::to_string(n) + "]");
    }
    if (i > 0 && v < values_[static_cast<size_t>(i - 1)]) {
      throw InvalidH("h is not nondecreasing at position " + std::to_string(i + 1));
    }
  }
}

HessenbergFunction HessenbergFunction::parse(const std::string& text) {
  std::vector<int> values;
  if (!text.empty() && text != "-") {
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
      try {
        size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        values.push_back(v - 1);  // to 0-based
      } catch (const std::exception&) {
        throw InvalidH("cannot parse Hessenberg value: '" + item + "'");
      }
    }
    if (values.empty()) throw InvalidH("empty Hessenberg function text");
  }
  return HessenbergFunction(std::move(values));
}

HessenbergFunction HessenbergFunction::complete(int n) {
  return HessenbergFunction(std::vector<int>(static_cast<size_t>(n), n - 1));
}

HessenbergFunction HessenbergFunction::minimal(int n) {
  std::vector<int> values(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = i;
  return HessenbergFunction(std::move(values));
}

std::string HessenbergFunction::str() const {
  if (values_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ",";
    os << values_[i] + 1;
  }
  return os.str();
}

OrderedGraph graph_of(const HessenbergFunction& h) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < h.n(); ++i) {
    for (int j = i + 1; j <= h(i); ++j) edges.emplace_back(i, j);
  }
  return OrderedGraph(h.n(), std::move(edges));
}

HessenbergFunction hessenberg_of(const OrderedGraph& g) {
  std::vector<int> values(static_cast<size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) values[static_cast<size_t>(i)] = i;
  for (const auto& [u, v] : g.edges()) {
    values[static_cast<size_t>(u)] = std::max(values[static_cast<size_t>(u)], v);
  }
  try {
    HessenbergFunction h(std::move(values));
    if (graph_of(h) != g) {
      throw NotUnitInterval("graph violates the interval-closure condition");
    }
    return h;
  } catch (const InvalidH&) {
    throw NotUnitInterval("graph violates the interval-closure condition");
  }
}

namespace {

void enumerate_rec(int n, std::vector<int>& partial,
                   std::vector<HessenbergFunction>& out) {
  const int i = static_cast<int>(partial.size());
  if (i == n) {
    out.emplace_back(partial);
    return;
  }
  const int low = std::max(i, i > 0 ? partial[static_cast<size_t>(i - 1)] : 0);
  for (int v = low; v < n; ++v) {
    partial.push_back(v);
    enumerate_rec(n, partial, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> partial;
  enumerate_rec(n, partial, out);
  return out;
}

HessenbergFunction concat(const HessenbergFunction& a,
                          const HessenbergFunction& b) {
  std::vector<int> values;
  values.reserve(static_cast<size_t>(a.n() + b.n()));
  for (int v : a.values()) values.push_back(v);
  for (int v : b.values()) values.push_back(v + a.n());
  return HessenbergFunction(std::move(values));
}

}  // namespace chromhess

#include "verifier.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace pistr {

namespace {

std::vector<ProductDegree::Factor> factorize(std::uint32_t value) {
  std::vector<ProductDegree::Factor> out;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= value; ++p) {
    std::uint32_t e = 0;
    while (value % p == 0) {
      value /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (value > 1) out.emplace_back(value, 1);
  return out;
}

}  // namespace

ProductDegree ProductDegree::of_label(Label label) {
  if (label == 0) throw InvalidArgument("label must be positive");
  ProductDegree d;
  d.factors_ = factorize(label);
  return d;
}

ProductDegree ProductDegree::from_factors(std::vector<Factor> factors) {
  ProductDegree d;
  for (const auto& [p, e] : factors) {
    if (p < 2) throw InvalidArgument("factor base must be at least 2");
    if (e == 0) continue;
    ProductDegree single;
    single.factors_.emplace_back(p, e);
    d *= single;
  }
  return d;
}

ProductDegree& ProductDegree::operator*=(const ProductDegree& other) {
  std::vector<Factor> merged;
  merged.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  factors_ = std::move(merged);
  return *this;
}

std::uint32_t ProductDegree::exponent(std::uint32_t prime) const noexcept {
  for (const auto& [p, e] : factors_)
    if (p == prime) return e;
  return 0;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> ProductDegree::as_pair23() const {
  for (const auto& [p, e] : factors_)
    if (p != 2 && p != 3) return std::nullopt;
  return std::pair{exponent(2), exponent(3)};
}

std::string ProductDegree::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::size_t ProductDegreeHash::operator()(const ProductDegree& d) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [p, e] : d.factors()) {
    h = (h ^ p) * 0x100000001b3ULL;
    h = (h ^ e) * 0x100000001b3ULL;
  }
  return h;
}

IrregularityReport make_report(std::vector<ProductDegree> degrees) {
  IrregularityReport report;
  std::vector<Vertex> order(degrees.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degrees[a] < degrees[b]; });
  // Within a run of equal degrees the two smallest vertices come first
  // (stable sort), so the best witness of each run is its first pair.
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (degrees[order[i]] != degrees[order[i + 1]]) continue;
    std::pair<Vertex, Vertex> candidate{order[i], order[i + 1]};
    if (!report.witness || candidate < *report.witness) report.witness = candidate;
    while (i + 1 < order.size() && degrees[order[i]] == degrees[order[i + 1]]) ++i;
  }
  report.ok = !report.witness.has_value();
  report.degrees = std::move(degrees);
  return report;
}

ProductDegree product_degree(const EdgeLabeling& labeling, Vertex v) {
  const auto& g = labeling.graph();
  if (v >= g.vertex_count()) throw InvalidArgument("vertex out of range");
  if (g.degree(v) == 0) throw PreconditionError("vertex " + std::to_string(v) + " is isolated");
  ProductDegree d;
  for (Vertex w : g.neighbors(v)) d *= ProductDegree::of_label(labeling.label(v, w));
  return d;
}

IrregularityReport is_product_irregular(const EdgeLabeling& labeling) {
  const auto& g = labeling.graph();
  std::vector<ProductDegree> degrees;
  degrees.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) degrees.push_back(product_degree(labeling, v));
  return make_report(std::move(degrees));
}

std::vector<ProductDegree> row_product_degrees(const WeightedAdjacencyMatrix& m) {
  std::vector<ProductDegree> degrees(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (Label entry : m.row(i))
      if (entry != 0) degrees[i] *= ProductDegree::of_label(entry);
  return degrees;
}

IrregularityReport check_matrix(const WeightedAdjacencyMatrix& m) {
  for (std::size_t i = 0; i < m.order(); ++i) {
    const auto row = m.row(i);
    if (std::all_of(row.begin(), row.end(), [](Label x) { return x == 0; })) {
      throw PreconditionError("matrix row " + std::to_string(i + 1) + " is all zero (isolated vertex)");
    }
  }
  return make_report(row_product_degrees(m));
}

}  // namespace pistr

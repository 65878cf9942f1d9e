#include "solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "errors.hpp"

namespace pistr {

namespace {

bool is_prime(Label p) {
  if (p < 2) return false;
  for (Label d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Packs the exponent vector of a product degree into one 64-bit word, one
// fixed-width field per prime <= strength. Adding two codes multiplies the
// degrees; field widths are sized so that no field can overflow.
class DegreeCodec {
 public:
  DegreeCodec(Label strength, std::size_t max_degree) {
    unsigned shift = 0;
    for (Label p = 2; p <= strength; ++p) {
      if (!is_prime(p)) continue;
      std::uint64_t max_exp = 0;
      for (std::uint64_t power = p; power <= strength; power *= p) ++max_exp;
      const auto field_max = std::max<std::uint64_t>(1, max_exp * max_degree);
      const auto bits = static_cast<unsigned>(std::bit_width(field_max));
      fields_.push_back({p, shift, bits});
      shift += bits;
      if (shift > 64) throw Unsupported("strength " + std::to_string(strength) + " too large for the packed solver");
    }
    label_code_.assign(strength + 1, 0);
    for (Label label = 1; label <= strength; ++label) {
      Label rest = label;
      for (const auto& f : fields_) {
        while (rest % f.prime == 0) {
          rest /= f.prime;
          label_code_[label] += std::uint64_t{1} << f.shift;
        }
      }
    }
  }

  std::uint64_t encode(Label label) const { return label_code_[label]; }

  ProductDegree decode(std::uint64_t code) const {
    std::vector<ProductDegree::Factor> factors;
    for (const auto& f : fields_) {
      const std::uint64_t mask = f.bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.bits) - 1;
      const auto e = static_cast<std::uint32_t>((code >> f.shift) & mask);
      if (e > 0) factors.emplace_back(f.prime, e);
    }
    return ProductDegree::from_factors(std::move(factors));
  }

 private:
  struct Field {
    Label prime;
    unsigned shift;
    unsigned bits;
  };
  std::vector<Field> fields_;
  std::vector<std::uint64_t> label_code_;
};

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

class LabelingDfs {
 public:
  LabelingDfs(const Graph& g, Label strength, std::span<const Label> pinned, const SearchOptions& options,
              const DegreeCodec& codec)
      : g_(g), strength_(strength), options_(options), codec_(codec) {
    if (!pinned.empty() && pinned.size() != g.edge_count()) {
      throw InvalidArgument("pinned labels must cover every edge");
    }
    pinned_.assign(g.edge_count(), 0);
    for (std::size_t e = 0; e < pinned.size(); ++e) {
      if (pinned[e] > strength) throw InvalidArgument("pinned label exceeds strength");
      pinned_[e] = pinned[e];
    }
    if (options.seed) rng_.seed(*options.seed);
    build_order();
    labels_.assign(g.edge_count(), 0);
    codes_.assign(g.vertex_count(), 0);
    candidates_.resize(order_.size());
  }

  template <class OnLeaf>
  SearchStatus run(OnLeaf&& on_leaf) {
    const bool unwound = descend(0, on_leaf);
    if (budget_hit_) return SearchStatus::budget_exhausted;
    return unwound ? SearchStatus::found : SearchStatus::exhausted;
  }

  std::span<const Label> labels() const { return labels_; }
  std::span<const std::uint64_t> codes() const { return codes_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void build_order() {
    std::vector<bool> placed(g_.edge_count(), false);
    for (std::size_t e = 0; e < g_.edge_count(); ++e) {
      if (pinned_[e] != 0) {
        order_.push_back(e);
        placed[e] = true;
      }
    }
    std::vector<Vertex> vertices(g_.vertex_count());
    for (Vertex v = 0; v < g_.vertex_count(); ++v) vertices[v] = v;
    std::stable_sort(vertices.begin(), vertices.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    std::vector<std::size_t> rank(g_.vertex_count());
    for (std::size_t i = 0; i < vertices.size(); ++i) rank[vertices[i]] = i;
    for (Vertex v : vertices) {
      std::vector<Vertex> nbrs(g_.neighbors(v).begin(), g_.neighbors(v).end());
      std::sort(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
      for (Vertex w : nbrs) {
        const auto e = *g_.edge_index(v, w);
        if (!placed[e]) {
          placed[e] = true;
          order_.push_back(e);
        }
      }
    }
    std::vector<std::size_t> last(g_.vertex_count(), 0);
    std::vector<bool> seen(g_.vertex_count(), false);
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      const auto& edge = g_.edge(order_[pos]);
      last[edge.u] = last[edge.v] = pos;
      seen[edge.u] = seen[edge.v] = true;
    }
    completes_.resize(order_.size());
    for (Vertex v = 0; v < g_.vertex_count(); ++v)
      if (seen[v]) completes_[last[v]].push_back(v);
  }

  bool all_distinct() const {
    std::vector<std::uint64_t> sorted(codes_.begin(), codes_.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  // Returns true when the search must unwind (leaf accepted or budget hit).
  template <class OnLeaf>
  bool descend(std::size_t pos, OnLeaf& on_leaf) {
    if (pos == order_.size()) {
      if (!options_.pruning && !all_distinct()) return false;
      return on_leaf();
    }
    const std::size_t e = order_[pos];
    const Edge& edge = g_.edge(e);
    auto& cands = candidates_[pos];
    cands.clear();
    if (pinned_[e] != 0) {
      cands.push_back(pinned_[e]);
    } else {
      for (Label l = 1; l <= strength_; ++l) cands.push_back(l);
      if (options_.seed) std::shuffle(cands.begin(), cands.end(), rng_);
    }
    for (const Label label : cands) {
      if (++nodes_ > options_.node_budget) {
        budget_hit_ = true;
        return true;
      }
      const auto code = codec_.encode(label);
      labels_[e] = label;
      codes_[edge.u] += code;
      codes_[edge.v] += code;
      bool viable = true;
      std::size_t inserted = 0;
      if (options_.pruning) {
        for (Vertex v : completes_[pos]) {
          if (!completed_.insert(codes_[v]).second) {
            viable = false;
            break;
          }
          ++inserted;
        }
      }
      const bool unwind = viable && descend(pos + 1, on_leaf);
      for (std::size_t i = 0; i < inserted; ++i) completed_.erase(codes_[completes_[pos][i]]);
      codes_[edge.u] -= code;
      codes_[edge.v] -= code;
      if (unwind) return true;
      labels_[e] = 0;
    }
    return false;
  }

  const Graph& g_;
  Label strength_;
  SearchOptions options_;
  const DegreeCodec& codec_;
  std::vector<Label> pinned_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Vertex>> completes_;
  std::vector<std::vector<Label>> candidates_;
  std::vector<Label> labels_;
  std::vector<std::uint64_t> codes_;
  std::unordered_set<std::uint64_t> completed_;
  std::mt19937_64 rng_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

void require_searchable(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("graph has no vertices");
  if (has_isolated_vertex_or_edge(g)) {
    throw PreconditionError("graph has an isolated vertex or an isolated edge");
  }
}

struct RawSignature {
  std::vector<std::uint64_t> codes;  // sorted
  std::vector<Label> labels;
};

// Every distinct sorted degree-code set over irregular labelings of a
// connected component, in first-found order.
std::vector<RawSignature> enumerate_signatures(const Graph& component, Label s, const DegreeCodec& codec,
                                               std::uint64_t budget, std::uint64_t& nodes) {
  SearchOptions options;
  options.node_budget = budget;
  LabelingDfs dfs(component, s, {}, options, codec);
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  std::vector<RawSignature> out;
  const auto status = dfs.run([&] {
    std::vector<std::uint64_t> key(dfs.codes().begin(), dfs.codes().end());
    std::sort(key.begin(), key.end());
    if (index.emplace(key, out.size()).second) {
      out.push_back({std::move(key), std::vector<Label>(dfs.labels().begin(), dfs.labels().end())});
    }
    return false;
  });
  nodes += dfs.nodes();
  if (status == SearchStatus::budget_exhausted) {
    throw BudgetExhausted("signature enumeration exceeded the node budget", nodes);
  }
  return out;
}

}  // namespace

SearchOutcome find_labeling(const Graph& g, Label strength, std::span<const Label> pinned,
                            const SearchOptions& options) {
  if (strength == 0) throw InvalidArgument("strength must be at least 1");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw PreconditionError("vertex " + std::to_string(v) + " is isolated");
  }
  const DegreeCodec codec(strength, max_degree(g));
  LabelingDfs dfs(g, strength, pinned, options, codec);
  SearchOutcome outcome;
  outcome.status = dfs.run([] { return true; });
  outcome.nodes = dfs.nodes();
  if (outcome.status == SearchStatus::found) {
    outcome.labeling = EdgeLabeling(g, std::vector<Label>(dfs.labels().begin(), dfs.labels().end()), strength);
  }
  return outcome;
}

PsResult ps_exact(const Graph& g, Label s_max, const SearchOptions& options) {
  require_searchable(g);
  PsResult result;
  result.s_max = s_max;
  for (Label s = 1; s <= s_max; ++s) {
    SearchOptions step = options;
    step.node_budget = options.node_budget - result.nodes_explored;
    auto outcome = find_labeling(g, s, {}, step);
    result.nodes_explored += outcome.nodes;
    if (outcome.status == SearchStatus::budget_exhausted) {
      result.status = PsStatus::budget_exhausted;
      result.value = s;
      return result;
    }
    if (outcome.status == SearchStatus::found) {
      if (!is_product_irregular(*outcome.labeling).ok) throw InternalError("solver certificate failed verification");
      result.status = PsStatus::exact;
      result.value = s;
      result.certificate = std::move(outcome.labeling);
      return result;
    }
  }
  result.status = PsStatus::above_limit;
  return result;
}

std::vector<ComponentSignature> component_signatures(const Graph& component, Label s, std::uint64_t node_budget) {
  if (s == 0) throw InvalidArgument("strength must be at least 1");
  if (!is_connected(component)) throw PreconditionError("component must be connected");
  require_searchable(component);
  const DegreeCodec codec(s, max_degree(component));
  std::uint64_t nodes = 0;
  std::vector<ComponentSignature> out;
  for (auto& raw : enumerate_signatures(component, s, codec, node_budget, nodes)) {
    ComponentSignature sig;
    for (auto code : raw.codes) sig.degrees.push_back(codec.decode(code));
    std::sort(sig.degrees.begin(), sig.degrees.end());
    sig.representative = EdgeLabeling(component, std::move(raw.labels), s);
    out.push_back(std::move(sig));
  }
  return out;
}

namespace {

// Picks one signature per component so that all chosen degree sets are
// pairwise disjoint. Candidate lists are filtered forward after each choice.
class SignatureCombiner {
 public:
  SignatureCombiner(std::vector<const std::vector<RawSignature>*> sets, std::vector<std::size_t> shape_of,
                    std::uint64_t budget)
      : sets_(std::move(sets)), shape_of_(std::move(shape_of)), budget_(budget) {
    std::unordered_map<std::uint64_t, std::size_t> universe;
    for (const auto* set : sets_)
      for (const auto& sig : *set)
        for (auto code : sig.codes) universe.emplace(code, universe.size());
    words_ = (universe.size() + 63) / 64;
    masks_.resize(sets_.size());
    for (std::size_t c = 0; c < sets_.size(); ++c) {
      masks_[c].assign(sets_[c]->size() * words_, 0);
      for (std::size_t i = 0; i < sets_[c]->size(); ++i)
        for (auto code : (*sets_[c])[i].codes) {
          const auto bit = universe.at(code);
          masks_[c][i * words_ + bit / 64] |= std::uint64_t{1} << (bit % 64);
        }
    }
    // Smallest candidate sets first; twins (same shape) end up adjacent.
    order_.resize(sets_.size());
    for (std::size_t c = 0; c < order_.size(); ++c) order_[c] = c;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (sets_[a]->size() != sets_[b]->size()) return sets_[a]->size() < sets_[b]->size();
      return shape_of_[a] < shape_of_[b];
    });
    choice_.assign(sets_.size(), 0);
  }

  // nullopt when the budget ran out.
  std::optional<bool> solve() {
    std::vector<std::vector<std::uint32_t>> candidates(order_.size());
    for (std::size_t level = 0; level < order_.size(); ++level) {
      candidates[level].resize(sets_[order_[level]]->size());
      for (std::uint32_t i = 0; i < candidates[level].size(); ++i) candidates[level][i] = i;
    }
    const bool found = descend(0, candidates);
    if (budget_hit_) return std::nullopt;
    return found;
  }

  std::size_t choice(std::size_t component) const { return choice_[component]; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool disjoint(std::size_t ca, std::size_t ia, std::size_t cb, std::size_t ib) const {
    const auto* a = &masks_[ca][ia * words_];
    const auto* b = &masks_[cb][ib * words_];
    for (std::size_t w = 0; w < words_; ++w)
      if (a[w] & b[w]) return false;
    return true;
  }

  bool descend(std::size_t level, const std::vector<std::vector<std::uint32_t>>& candidates) {
    if (level == order_.size()) return true;
    const std::size_t comp = order_[level];
    for (const auto pick : candidates[level]) {
      if (++nodes_ > budget_) {
        budget_hit_ = true;
        return false;
      }
      std::vector<std::vector<std::uint32_t>> next(candidates.size());
      bool viable = true;
      for (std::size_t later = level + 1; later < order_.size() && viable; ++later) {
        const std::size_t other = order_[later];
        const bool twin = shape_of_[other] == shape_of_[comp];
        for (const auto cand : candidates[later]) {
          if (twin && cand <= pick) continue;
          if (disjoint(comp, pick, other, cand)) next[later].push_back(cand);
        }
        viable = !next[later].empty();
      }
      if (!viable) continue;
      choice_[comp] = pick;
      if (descend(level + 1, next)) return true;
      if (budget_hit_) return false;
    }
    return false;
  }

  std::vector<const std::vector<RawSignature>*> sets_;
  std::vector<std::size_t> shape_of_;
  std::uint64_t budget_;
  std::size_t words_ = 1;
  std::vector<std::vector<std::uint64_t>> masks_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> choice_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

PsResult ps_exact_disconnected(const Graph& g, Label s_max, std::uint64_t node_budget) {
  require_searchable(g);
  const auto components = connected_components(g);
  std::vector<Graph> subgraphs;
  std::vector<std::size_t> shape_of;
  std::vector<std::size_t> shape_rep;  // shape id -> first component with it
  for (const auto& vertices : components) {
    subgraphs.push_back(induced_subgraph(g, vertices));
    std::size_t shape = shape_rep.size();
    for (std::size_t s = 0; s < shape_rep.size(); ++s) {
      if (subgraphs[shape_rep[s]] == subgraphs.back()) shape = s;
    }
    if (shape == shape_rep.size()) shape_rep.push_back(subgraphs.size() - 1);
    shape_of.push_back(shape);
  }

  PsResult result;
  result.s_max = s_max;
  const std::size_t global_max_degree = max_degree(g);
  for (Label s = 1; s <= s_max; ++s) {
    const DegreeCodec codec(s, global_max_degree);
    std::vector<std::vector<RawSignature>> per_shape;
    try {
      for (auto rep : shape_rep) {
        per_shape.push_back(enumerate_signatures(subgraphs[rep], s, codec,
                                                 node_budget - result.nodes_explored, result.nodes_explored));
      }
    } catch (const BudgetExhausted&) {
      result.status = PsStatus::budget_exhausted;
      result.value = s;
      return result;
    }
    if (std::any_of(per_shape.begin(), per_shape.end(), [](const auto& set) { return set.empty(); })) continue;

    std::vector<const std::vector<RawSignature>*> sets;
    for (auto shape : shape_of) sets.push_back(&per_shape[shape]);
    SignatureCombiner combiner(sets, shape_of, node_budget - result.nodes_explored);
    const auto solved = combiner.solve();
    result.nodes_explored += combiner.nodes();
    if (!solved) {
      result.status = PsStatus::budget_exhausted;
      result.value = s;
      return result;
    }
    if (!*solved) continue;

    std::vector<Label> labels(g.edge_count(), 0);
    for (std::size_t c = 0; c < components.size(); ++c) {
      const auto& sig = per_shape[shape_of[c]][combiner.choice(c)];
      const auto& sub = subgraphs[c];
      for (std::size_t e = 0; e < sub.edge_count(); ++e) {
        const auto& edge = sub.edge(e);
        labels[*g.edge_index(components[c][edge.u], components[c][edge.v])] = sig.labels[e];
      }
    }
    EdgeLabeling certificate(g, std::move(labels), s);
    if (!is_product_irregular(certificate).ok) throw InternalError("combined certificate failed verification");
    result.status = PsStatus::exact;
    result.value = s;
    result.certificate = std::move(certificate);
    return result;
  }
  result.status = PsStatus::above_limit;
  return result;
}

K4Characterization verify_k4_characterization() {
  const Graph k4 = complete_graph(4);
  const auto two_times_three = ProductDegree::of_label(6);
  K4Characterization out;
  out.holds = true;
  out.necessary_holds = true;
  std::vector<Label> labels(k4.edge_count(), 1);
  while (true) {
    const auto report = is_product_irregular(EdgeLabeling(k4, labels, 3));
    const bool has_pair_11 = std::find(report.degrees.begin(), report.degrees.end(), two_times_three) != report.degrees.end();
    ++out.labelings;
    if (report.ok) ++out.irregular;
    if (report.ok && !has_pair_11) out.necessary_holds = false;
    if (!report.ok && has_pair_11) ++out.with_six_not_irregular;
    if (report.ok != has_pair_11) out.holds = false;
    std::size_t i = 0;
    while (i < labels.size() && labels[i] == 3) labels[i++] = 1;
    if (i == labels.size()) break;
    ++labels[i];
  }
  return out;
}

}  // namespace pistr

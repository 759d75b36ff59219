#include "rcmpp/reorder.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace rcmpp {

Permutation::Permutation(std::vector<Index> new_of_old) : new_of_old_(std::move(new_of_old)) {
  const auto n = size();
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (auto v : new_of_old_) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of [0, " + std::to_string(n) + ")");
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(Index n) {
  std::vector<Index> p(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(p));
}

Permutation Permutation::from_order(std::span<const Index> old_of_new) {
  const auto n = static_cast<Index>(old_of_new.size());
  std::vector<Index> p(old_of_new.size(), -1);
  for (Index k = 0; k < n; ++k) {
    const auto o = old_of_new[static_cast<std::size_t>(k)];
    if (o < 0 || o >= n || p[static_cast<std::size_t>(o)] >= 0)
      throw std::invalid_argument("order is not a permutation of [0, " + std::to_string(n) + ")");
    p[static_cast<std::size_t>(o)] = k;
  }
  return Permutation(std::move(p));
}

std::vector<Index> Permutation::old_of_new() const {
  std::vector<Index> o(new_of_old_.size());
  for (Index v = 0; v < size(); ++v) o[static_cast<std::size_t>((*this)[v])] = v;
  return o;
}

Permutation cuthill_mckee(const AdjacencyGraph& g, const ComponentSet& components,
                          std::span<const Index> starts) {
  if (starts.size() != components.components.size())
    throw std::invalid_argument("need exactly one start node per component");

  const auto n = g.size();
  std::vector<Index> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<bool> numbered(static_cast<std::size_t>(n), false);
  std::vector<Index> fresh;

  for (std::size_t c = 0; c < starts.size(); ++c) {
    const auto s = starts[c];
    if (s < 0 || s >= n || components.component_of[static_cast<std::size_t>(s)] != static_cast<Index>(c))
      throw std::invalid_argument("start node " + std::to_string(s) + " is not in component " +
                                  std::to_string(c));
    auto head = order.size();
    order.push_back(s);
    numbered[static_cast<std::size_t>(s)] = true;
    while (head < order.size()) {
      const auto v = order[head++];
      fresh.clear();
      for (auto w : g.neighbors(v))
        if (!numbered[static_cast<std::size_t>(w)]) fresh.push_back(w);
      std::sort(fresh.begin(), fresh.end(), [&g](Index a, Index b) {
        const auto da = g.degree(a), db = g.degree(b);
        return da != db ? da < db : a < b;
      });
      for (auto w : fresh) {
        numbered[static_cast<std::size_t>(w)] = true;
        order.push_back(w);
      }
    }
  }
  return Permutation::from_order(order);
}

Permutation reverse(const Permutation& p) {
  std::vector<Index> r(static_cast<std::size_t>(p.size()));
  for (Index v = 0; v < p.size(); ++v) r[static_cast<std::size_t>(v)] = p.size() - 1 - p[v];
  return Permutation(std::move(r));
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::rcm_pp: return "RCM++";
    case Algorithm::gl_rcm: return "GL_RCM";
    case Algorithm::mind_rcm: return "MIND_RCM";
    case Algorithm::none: return "none";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "rcm++" || s == "rcmpp" || s == "bnf") return Algorithm::rcm_pp;
  if (s == "gl_rcm" || s == "gl") return Algorithm::gl_rcm;
  if (s == "mind_rcm" || s == "mind") return Algorithm::mind_rcm;
  if (s == "none") return Algorithm::none;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::vector<Index> find_start_nodes(const AdjacencyGraph& g, const ComponentSet& components,
                                    Algorithm algorithm, const StartPolicy& policy,
                                    BfsWorkspace& ws) {
  std::vector<Index> starts;
  if (algorithm == Algorithm::none) return starts;
  if (const auto node = policy.node(); node && (*node < 0 || *node >= g.size()))
    throw std::invalid_argument("start node " + std::to_string(*node) + " is not in the graph");
  starts.reserve(components.components.size());
  for (Index k = 0; k < components.size(); ++k) {
    const auto& comp = components.components[static_cast<std::size_t>(k)];
    switch (algorithm) {
      case Algorithm::rcm_pp:
        starts.push_back(bnf_find(g, comp, policy.for_component(k, comp), ws).result);
        break;
      case Algorithm::gl_rcm:
        starts.push_back(gl_find(g, comp, policy.for_component(k, comp), ws).result);
        break;
      case Algorithm::mind_rcm:
        starts.push_back(mind_find(g, comp));
        break;
      case Algorithm::none:
        break;
    }
  }
  return starts;
}

Ordering rcm_ordering(const AdjacencyGraph& g, const ComponentSet& components,
                      Algorithm algorithm, const StartPolicy& policy) {
  using clock = std::chrono::steady_clock;
  Ordering out;
  BfsWorkspace ws(g.size());

  const auto t0 = clock::now();
  out.start_nodes = find_start_nodes(g, components, algorithm, policy, ws);
  const auto t1 = clock::now();
  out.permutation = algorithm == Algorithm::none
                        ? Permutation::identity(g.size())
                        : reverse(cuthill_mckee(g, components, out.start_nodes));
  const auto t2 = clock::now();

  out.finder_time = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0);
  out.ordering_time = std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1);
  return out;
}

}  // namespace rcmpp

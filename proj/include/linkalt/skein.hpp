#pragma once

// HOMFLYPT by skein recursion, normalised by P(unknot) = 1 and
//
//   v^-1 P(L+) - v P(L-) = z P(L0).
//
// Each diagram is walked from fixed basepoints; every crossing first met on
// its under-strand is switched in turn, which leaves a descending diagram
// (an unlink). The smoothings produced along the way have fewer crossings
// and are evaluated recursively, after R1/R2 reduction, through a cache
// keyed on a relabelling-invariant encoding.

#include <linkalt/diagram.hpp>
#include <linkalt/moves.hpp>
#include <linkalt/poly.hpp>

#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace linkalt {

class SkeinBudgetExceeded : public std::runtime_error {
 public:
  explicit SkeinBudgetExceeded(std::uint64_t budget)
      : std::runtime_error("skein tree exceeded the node budget of " + std::to_string(budget)) {}
};

inline constexpr std::uint64_t kDefaultSkeinBudget = 1'000'000;

// Budget from LINKALT_SKEIN_BUDGET when set to a positive integer.
inline std::uint64_t skein_budget_from_env(std::uint64_t fallback = kDefaultSkeinBudget) {
  if (const char* env = std::getenv("LINKALT_SKEIN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

struct SkeinOptions {
  std::uint64_t budget = kDefaultSkeinBudget;
  bool memoize = true;
};

// Relabelling-invariant key of a possibly split net: each connected piece is
// encoded by its least BFS code; pieces are sorted.
inline std::string net_key(const Net& net) {
  const int n = net.size();
  std::vector<int> piece(n, -1);
  std::vector<std::vector<int>> codes;
  for (int s = 0; s < n; ++s) {
    if (piece[s] >= 0) continue;
    std::vector<int> order;
    detail::bfs_code(net, s, &order);
    int id = static_cast<int>(codes.size());
    for (int c : order) piece[c] = id;
    std::vector<int> best;
    for (int c : order) {
      auto code = detail::bfs_code(net, c);
      if (best.empty() || code < best) best = std::move(code);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::string key = "L" + std::to_string(net.free_loops);
  for (const auto& code : codes) {
    key += '|';
    for (int x : code) {
      key += std::to_string(x);
      key += ',';
    }
  }
  return key;
}

// (v^-1 - v) / z, the factor contributed by each extra split unknot.
inline SkeinPolynomial unlink_factor() {
  return SkeinPolynomial::monomial(-1, -1) - SkeinPolynomial::monomial(1, -1);
}

inline SkeinPolynomial unlink_value(int components) {
  SkeinPolynomial p = SkeinPolynomial::one();
  for (int i = 1; i < components; ++i) p *= unlink_factor();
  return p;
}

// Evaluator with a lock-protected cache; one instance may be shared by
// several threads, and results do not depend on evaluation order.
class SkeinEngine {
 public:
  explicit SkeinEngine(SkeinOptions opts = {}) : opts_(opts) {}

  SkeinPolynomial homflypt(const LinkDiagram& d) {
    nodes_ = 0;
    return eval(to_net(d));
  }
  SkeinPolynomial homflypt(const Net& net) {
    nodes_ = 0;
    return eval(net);
  }

  std::uint64_t nodes_used() const { return nodes_; }
  std::size_t cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
  }

 private:
  SkeinPolynomial eval(Net net) {
    net = simplify(std::move(net));
    if (net.nodes.empty()) return unlink_value(net.free_loops);
    std::string key;
    if (opts_.memoize) {
      key = net_key(net);
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    tick();

    // Crossings first met on the under-strand, in walk order.
    const auto walks = component_walks(net);
    std::vector<bool> met(net.nodes.size(), false);
    std::vector<int> bad;
    for (const auto& walk : walks)
      for (const Dart& out : walk) {
        if (met[out.node]) continue;
        met[out.node] = true;
        if (out.pos == 2) bad.push_back(out.node);
      }

    const int mu = static_cast<int>(walks.size()) + net.free_loops;
    SkeinPolynomial total;
    SkeinPolynomial coef = SkeinPolynomial::one();
    for (int c : bad) {
      tick();
      SkeinPolynomial smoothed = eval(smooth_crossing(net, c));
      if (net.nodes[c].sign() > 0) {
        // P(L+) = v^2 P(L-) + v z P(L0)
        total += coef * smoothed.shifted(1, 1);
        coef = coef.shifted(2, 0);
      } else {
        // P(L-) = v^-2 P(L+) - v^-1 z P(L0)
        total -= coef * smoothed.shifted(-1, 1);
        coef = coef.shifted(-2, 0);
      }
      net = switch_crossing(std::move(net), c);
    }
    total += coef * unlink_value(mu);

    if (opts_.memoize) {
      std::lock_guard lock(mutex_);
      cache_.emplace(std::move(key), total);
    }
    return total;
  }

  void tick() {
    if (++nodes_ > opts_.budget) throw SkeinBudgetExceeded(opts_.budget);
  }

  SkeinOptions opts_;
  std::uint64_t nodes_ = 0;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, SkeinPolynomial> cache_;
};

inline SkeinPolynomial homflypt(const LinkDiagram& d, SkeinOptions opts = {}) {
  SkeinEngine engine(opts);
  return engine.homflypt(d);
}

inline SkeinPolynomial conway(const LinkDiagram& d, SkeinOptions opts = {}) {
  return homflypt(d, opts).at_v_one();
}

struct SkeinTriple {
  LinkDiagram plus, minus, zero;
};

// The three diagrams of the skein relation at crossing c.
inline SkeinTriple skein_triple(const LinkDiagram& d, int c) {
  Net net = to_net(d);
  if (c < 0 || c >= net.size()) throw DiagramError(DiagramError::Kind::Index, "crossing index out of range");
  Net switched = switch_crossing(net, c);
  SkeinTriple t;
  t.zero = from_net(smooth_crossing(net, c));
  if (net.nodes[c].sign() > 0) {
    t.plus = from_net(net);
    t.minus = from_net(switched);
  } else {
    t.plus = from_net(switched);
    t.minus = from_net(net);
  }
  return t;
}

}  // namespace linkalt

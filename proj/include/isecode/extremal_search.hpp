#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "isecode/bits.hpp"
#include "isecode/family.hpp"
#include "isecode/rational.hpp"

namespace isecode {

inline constexpr std::size_t kMaxCompatVertices = std::size_t{1} << 16;

// Vertices: words y with satisfies(y, y, t), ascending by index. Edge (u, v)
// iff the pair satisfies t. Self-loops are implicit and not stored.
class CompatGraph {
public:
  CompatGraph(const SpaceParams& params, const TVector& t) : params_(params), t_(t) {
    detail::require_t_size(t, params.s());
    const unsigned s = params.s();
    std::vector<std::uint64_t> masks;
    for (WordIndex idx = 0; idx < params.word_count(); ++idx) {
      auto pm = position_masks(idx, params);
      bool ok = true;
      for (unsigned l = 0; l < s && ok; ++l) ok = static_cast<unsigned>(std::popcount(pm[l])) >= t[l];
      if (!ok) continue;
      if (vertices_.size() == kMaxCompatVertices)
        throw Refusal("compatibility graph exceeds " + std::to_string(kMaxCompatVertices) + " vertices");
      vertices_.push_back(idx);
      masks.insert(masks.end(), pm.begin(), pm.end());
    }
    const std::size_t v = vertices_.size();
    adjacency_.assign(v, DenseBits(v));
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b) {
        bool ok = true;
        for (unsigned l = 0; l < s && ok; ++l)
          ok = static_cast<unsigned>(std::popcount(masks[a * s + l] & masks[b * s + l])) >= t[l];
        if (ok) {
          adjacency_[a].set(b);
          adjacency_[b].set(a);
        }
      }
  }

  const SpaceParams& params() const noexcept { return params_; }
  const TVector& demand() const noexcept { return t_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  WordIndex word(std::size_t v) const { return vertices_.at(v); }
  const std::vector<WordIndex>& vertices() const noexcept { return vertices_; }
  const DenseBits& neighbours(std::size_t v) const { return adjacency_.at(v); }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency_.at(a).test(b); }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& row : adjacency_) e += row.count();
    return e / 2;
  }
  std::optional<std::size_t> vertex_of(WordIndex idx) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), idx);
    if (it == vertices_.end() || *it != idx) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

private:
  SpaceParams params_;
  TVector t_;
  std::vector<WordIndex> vertices_;
  std::vector<DenseBits> adjacency_;
};

inline CompatGraph build_compat_graph(unsigned n, unsigned s, const TVector& t) {
  return CompatGraph(SpaceParams(s, n), t);
}

struct SearchOptions {
  unsigned threads = 1;
  std::chrono::milliseconds timeout{60'000};
  // Restrict to families containing this word (off by default).
  std::optional<WordIndex> seed_word = std::nullopt;
};

struct SearchResult {
  std::uint64_t max_size = 0;
  Family witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  bool lower_bound_only = false;  // timed out
  bool restricted = false;        // seed_word was applied
};

namespace detail {

// Bitset branch and bound with greedy colouring bounds. Deterministic for a
// fixed starting bound: candidates are coloured in ascending vertex order.
class CliqueSearch {
public:
  using Clock = std::chrono::steady_clock;

  CliqueSearch(const CompatGraph& g, std::size_t best, Clock::time_point deadline,
               const std::atomic<bool>& stop_flag)
      : g_(g), best_(best), deadline_(deadline), stop_(stop_flag) {}

  void run(std::vector<std::size_t>& current, DenseBits candidates) {
    if (candidates.none()) {
      consider(current);
      return;
    }
    expand(current, std::move(candidates));
  }

  std::size_t best() const noexcept { return best_; }
  const std::vector<std::size_t>& best_clique() const noexcept { return best_clique_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool timed_out() const noexcept { return timed_out_; }

  // Greedy sequential colouring of `p`; fills `order` and cumulative colours.
  static void colour_sort(const CompatGraph& g, const DenseBits& p, std::vector<std::size_t>& order,
                          std::vector<std::size_t>& colours) {
    order.clear();
    colours.clear();
    DenseBits uncoloured = p;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      DenseBits q = uncoloured;
      for (auto v = q.find_first(); v < q.size(); v = q.find_next(v + 1)) {
        uncoloured.reset(v);
        q.subtract(g.neighbours(v));
        order.push_back(v);
        colours.push_back(colour);
      }
    }
  }

private:
  void consider(const std::vector<std::size_t>& current) {
    if (current.size() > best_) {
      best_ = current.size();
      best_clique_ = current;
    }
  }

  bool should_stop() {
    if (timed_out_) return true;
    if ((nodes_ & 1023U) == 1 && (stop_.load(std::memory_order_relaxed) || Clock::now() > deadline_))
      timed_out_ = true;
    return timed_out_;
  }

  void expand(std::vector<std::size_t>& current, DenseBits p) {
    ++nodes_;
    if (should_stop()) return;
    std::vector<std::size_t> order, colours;
    colour_sort(g_, p, order, colours);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current.size() + colours[k] <= best_) return;
      const auto v = order[k];
      current.push_back(v);
      DenseBits next = p & g_.neighbours(v);
      if (next.none())
        consider(current);
      else
        expand(current, std::move(next));
      current.pop_back();
      if (timed_out_) return;
      p.reset(v);
    }
  }

  const CompatGraph& g_;
  std::size_t best_;
  std::vector<std::size_t> best_clique_;
  std::uint64_t nodes_ = 0;
  Clock::time_point deadline_;
  const std::atomic<bool>& stop_;
  bool timed_out_ = false;
};

// Root branches are processed in fixed-size waves. Every branch in a wave
// starts from the bound frozen at the wave start, so node counts and the
// witness do not depend on how many workers run the wave.
inline constexpr std::size_t kWaveSize = 16;

}  // namespace detail

inline SearchResult max_clique_family(const CompatGraph& g, const SearchOptions& options = {}) {
  using Clock = detail::CliqueSearch::Clock;
  const auto start = Clock::now();
  const auto deadline = start + options.timeout;
  std::atomic<bool> stop{false};

  SearchResult result{0, Family::empty(g.params()), 0, {}, false, options.seed_word.has_value()};
  std::vector<std::size_t> witness;
  std::size_t best = 0;

  // Root candidate set and its prefix clique.
  std::vector<std::size_t> root_clique;
  DenseBits root(g.vertex_count(), true);
  if (options.seed_word) {
    const auto v = g.vertex_of(*options.seed_word);
    if (!v) root = DenseBits(g.vertex_count());
    else {
      root_clique.push_back(*v);
      root = g.neighbours(*v);
      best = 1;
      witness = root_clique;
    }
  }

  std::uint64_t nodes = 1;
  std::vector<std::size_t> order, colours;
  detail::CliqueSearch::colour_sort(g, root, order, colours);

  struct Branch {
    std::size_t vertex;
    std::size_t colour;
    DenseBits candidates;
  };
  std::vector<Branch> branches;
  {
    DenseBits remaining = root;
    for (std::size_t k = order.size(); k-- > 0;) {
      branches.push_back({order[k], colours[k], remaining & g.neighbours(order[k])});
      remaining.reset(order[k]);
    }
  }

  struct Outcome {
    bool ran = false;
    std::size_t best = 0;
    std::vector<std::size_t> clique;
    std::uint64_t nodes = 0;
    bool timed_out = false;
  };

  const unsigned workers = std::max(1U, options.threads);
  bool timed_out = false;
  for (std::size_t wave = 0; wave < branches.size() && !timed_out; wave += detail::kWaveSize) {
    const std::size_t end = std::min(branches.size(), wave + detail::kWaveSize);
    const std::size_t frozen = best;
    std::vector<Outcome> outcomes(end - wave);

    auto run_branch = [&](std::size_t b) {
      const auto& br = branches[b];
      auto& out = outcomes[b - wave];
      if (root_clique.size() + br.colour <= frozen) return;
      out.ran = true;
      detail::CliqueSearch search(g, frozen, deadline, stop);
      std::vector<std::size_t> current = root_clique;
      current.push_back(br.vertex);
      search.run(current, br.candidates);
      out.best = search.best();
      out.clique = search.best_clique();
      out.nodes = search.nodes();
      out.timed_out = search.timed_out();
      if (out.timed_out) stop.store(true);
    };

    if (workers == 1 || end - wave == 1) {
      for (std::size_t b = wave; b < end; ++b) run_branch(b);
    } else {
      std::atomic<std::size_t> next{wave};
      std::vector<std::thread> pool;
      const auto count = std::min<std::size_t>(workers, end - wave);
      for (std::size_t w = 0; w < count; ++w)
        pool.emplace_back([&] {
          for (auto b = next.fetch_add(1); b < end; b = next.fetch_add(1)) run_branch(b);
        });
      for (auto& th : pool) th.join();
    }

    bool any_ran = false;
    for (auto& out : outcomes) {
      if (!out.ran) continue;
      any_ran = true;
      nodes += out.nodes;
      timed_out = timed_out || out.timed_out;
      if (out.best > best && !out.clique.empty()) {
        best = out.best;
        witness = out.clique;
      }
    }
    // Colours are non-increasing along the branch list, so once a whole wave
    // is pruned every later branch is too.
    if (!any_ran) break;
  }

  std::vector<WordIndex> words;
  for (auto v : witness) words.push_back(g.word(v));
  std::sort(words.begin(), words.end());
  result.max_size = best;
  result.witness = Family::from_indices(g.params(), words);
  result.nodes_explored = nodes;
  result.lower_bound_only = timed_out;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return result;
}

inline SearchResult max_family(unsigned n, unsigned s, const TVector& t, const SearchOptions& options = {}) {
  const auto g = build_compat_graph(n, s, t);
  return max_clique_family(g, options);
}

// max |F| / s^n; throws SearchTimeout when only a lower bound was reached.
inline Rational p_oracle(unsigned n, unsigned s, const TVector& t, const SearchOptions& options = {}) {
  const auto r = max_family(n, s, t, options);
  if (r.lower_bound_only)
    throw SearchTimeout("search for n=" + std::to_string(n) + " s=" + std::to_string(s) + " t=" + to_string(t) +
                        " timed out at lower bound " + std::to_string(r.max_size));
  return Rational{BigInt{r.max_size}, BigInt{r.witness.params().word_count()}};
}

struct BestK {
  BigInt size;
  unsigned x1 = 0;
  unsigned x2 = 0;
};

// max over disjoint X1, X2 ⊆ [n] of |K(X1, X2, t)|. Only block sizes matter:
// |K| = 2^{n-n1-n2} · #{majority words on X1} · #{majority words on X2}.
// Ties prefer |X_i| ≡ t_i (mod 2), then larger n1 + n2, then larger n1.
inline BestK best_K(unsigned n, unsigned t1, unsigned t2) {
  if (n > 14) throw ParameterError("best_K sweeps n <= 14");
  if (t1 < 1 || t2 < 1) throw ParameterError("best_K needs t1, t2 >= 1");
  auto tail_count = [](unsigned m, unsigned t) {
    BigInt c = 0;
    for (unsigned k = (m + t + 1) / 2; k <= m; ++k) c += binomial(m, k);
    return c;
  };
  std::optional<BestK> best;
  auto key = [&](unsigned a, unsigned b) {
    return std::tuple<bool, unsigned, unsigned>{a % 2 == t1 % 2 && b % 2 == t2 % 2, a + b, a};
  };
  for (unsigned n1 = t1; n1 <= n; ++n1)
    for (unsigned n2 = t2; n1 + n2 <= n; ++n2) {
      BigInt size = ipow(BigInt{2}, n - n1 - n2) * tail_count(n1, t1) * tail_count(n2, t2);
      if (!best || size > best->size || (size == best->size && key(n1, n2) > key(best->x1, best->x2)))
        best = BestK{size, n1, n2};
    }
  if (!best) return BestK{0, 0, 0};
  return *best;
}

}  // namespace isecode

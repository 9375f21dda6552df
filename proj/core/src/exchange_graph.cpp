#include "clusterweave/exchange_graph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "clusterweave/errors.hpp"

namespace cw {

namespace {

uint64_t seed_hash(const Seed& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  };
  mix(static_cast<uint64_t>(s.m()));
  mix(static_cast<uint64_t>(s.n()));
  for (const auto& v : s.variables) mix(v.hash());
  for (int x : s.matrix.data()) mix(static_cast<uint64_t>(static_cast<int64_t>(x)));
  return h;
}

// Deduplicating store of seed classes keyed by hash.
class ClassIndex {
 public:
  int find(const SeedClass& c, const std::vector<SeedClass>& nodes) const {
    auto it = buckets_.find(c.hash);
    if (it == buckets_.end()) return -1;
    for (int id : it->second)
      if (nodes[id] == c) return id;
    return -1;
  }
  void add(uint64_t hash, int id) { buckets_[hash].push_back(id); }

 private:
  std::unordered_map<uint64_t, std::vector<int>> buckets_;
};

// Runs fn(i) for i in [0, count) on up to `jobs` threads; rethrows the first
// exception raised by any worker.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const size_t nthreads = std::min(static_cast<size_t>(jobs), count);
  for (size_t t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (size_t i = t; i < count; i += nthreads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string SeedClass::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

Seed permute_seed(const Seed& s, const std::vector<int>& perm) {
  const int n = s.n(), m = s.m();
  auto p = [&](int i) { return i < n ? perm[i] : i; };
  Seed r;
  r.variables.resize(m);
  for (int i = 0; i < m; ++i) r.variables[i] = s.variables[p(i)];
  r.matrix = ExchangeMatrix(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) r.matrix.at(i, j) = s.matrix.at(p(i), perm[j]);
  return r;
}

SeedClass canonical_form(const Seed& s) {
  const int n = s.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return s.variables[a] < s.variables[b]; });

  // Tie groups of equal variables: try every arrangement inside each group
  // and keep the lexicographically smallest matrix.
  std::vector<std::pair<int, int>> groups;
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && s.variables[order[j]] == s.variables[order[i]]) ++j;
    if (j - i > 1) groups.emplace_back(i, j);
    i = j;
  }
  std::vector<int> best = order;
  if (!groups.empty()) {
    ExchangeMatrix best_matrix = permute_seed(s, order).matrix;
    std::function<void(size_t)> search = [&](size_t g) {
      if (g == groups.size()) {
        ExchangeMatrix candidate = permute_seed(s, order).matrix;
        if (candidate.data() < best_matrix.data()) {
          best_matrix = candidate;
          best = order;
        }
        return;
      }
      auto [lo, hi] = groups[g];
      std::sort(order.begin() + lo, order.begin() + hi);
      do {
        search(g + 1);
      } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    search(0);
  }
  SeedClass c;
  c.perm = best;
  c.rep = permute_seed(s, best);
  c.hash = seed_hash(c.rep);
  return c;
}

int ExchangeGraphSlice::find(const SeedClass& c) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].hash == c.hash && nodes[i] == c) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> ExchangeGraphSlice::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

ExchangeGraphSlice explore(const Seed& s0, const ExploreOptions& opts) {
  if (opts.depth < 0) throw InvalidInput("depth must be nonnegative");
  if (opts.cap < 1) throw InvalidInput("node cap must be positive");
  ExchangeGraphSlice g;
  ClassIndex index;
  std::set<std::pair<int, int>> seen_edges;
  std::vector<char> expanded;

  g.nodes.push_back(canonical_form(s0));
  g.depth.push_back(0);
  expanded.push_back(0);
  index.add(g.nodes[0].hash, 0);

  const int n = s0.n();
  std::vector<int> ks(n);
  std::iota(ks.begin(), ks.end(), 0);
  if (opts.descending) std::reverse(ks.begin(), ks.end());

  std::vector<int> level{0};
  bool capped = false;
  for (int d = 0; d < opts.depth && !level.empty() && !capped; ++d) {
    const size_t count = level.size() * ks.size();
    std::vector<SeedClass> children(count);
    parallel_for(count, opts.jobs, [&](size_t i) {
      const int node = level[i / ks.size()];
      children[i] = canonical_form(mutate_seed(g.nodes[node].rep, ks[i % ks.size()]));
    });
    std::vector<int> next;
    for (size_t i = 0; i < count && !capped; ++i) {
      const int a = level[i / ks.size()];
      int b = index.find(children[i], g.nodes);
      if (b < 0) {
        if (g.nodes.size() >= opts.cap) {
          capped = true;
          break;
        }
        b = static_cast<int>(g.nodes.size());
        index.add(children[i].hash, b);
        g.nodes.push_back(std::move(children[i]));
        g.depth.push_back(d + 1);
        expanded.push_back(0);
        next.push_back(b);
      }
      if (seen_edges.insert({std::min(a, b), std::max(a, b)}).second) g.edges.push_back({a, b, ks[i % ks.size()]});
      if ((i + 1) % ks.size() == 0) expanded[a] = 1;
    }
    level = std::move(next);
  }
  for (size_t i = 0; i < g.nodes.size(); ++i)
    if (!expanded[i]) g.frontier.push_back(static_cast<int>(i));
  g.complete = g.frontier.empty();
  return g;
}

ExchangeGraphSlice explore(const Seed& s0, int depth, size_t cap) {
  ExploreOptions o;
  o.depth = depth;
  o.cap = cap;
  return explore(s0, o);
}

ExchangeGraphSlice induced_subgraph_fixing(const ExchangeGraphSlice& g, const LaurentPoly& v) {
  if (g.nodes.empty()) throw VariableAbsent("empty graph");
  const Seed& root = g.nodes[0].rep;
  bool frozen = false;
  for (int i = root.n(); i < root.m(); ++i) frozen |= root.variables[i] == v;
  if (frozen) return g;
  ExchangeGraphSlice h;
  std::vector<int> remap(g.nodes.size(), -1);
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const Seed& s = g.nodes[i].rep;
    bool has = false;
    for (int k = 0; k < s.n() && !has; ++k) has = s.variables[k] == v;
    if (!has) continue;
    remap[i] = static_cast<int>(h.nodes.size());
    h.nodes.push_back(g.nodes[i]);
    h.depth.push_back(g.depth[i]);
  }
  if (h.nodes.empty()) throw VariableAbsent(v.str() + " is not a cluster variable of any explored seed");
  for (const auto& e : g.edges)
    if (remap[e.a] >= 0 && remap[e.b] >= 0) h.edges.push_back({remap[e.a], remap[e.b], e.label});
  for (int f : g.frontier)
    if (remap[f] >= 0) h.frontier.push_back(remap[f]);
  h.complete = h.frontier.empty();
  return h;
}

ParallelWalkReport compare_under_common_mutations(const Seed& a, const Seed& b, int depth) {
  ParallelWalkReport rep;
  if (!(a.matrix.principal() == b.matrix.principal())) {
    rep.isomorphic = false;
    rep.detail = "principal parts differ";
    return rep;
  }
  const int n = a.n();
  struct Node {
    Seed sa, sb;
    SeedClass ca, cb;
  };
  std::vector<Node> nodes;
  ClassIndex ia, ib;
  std::vector<SeedClass> classes_a, classes_b;
  std::set<std::pair<int, int>> edges;

  // Relabeling from a walked seed's indices to the stored node's indices.
  auto relabel = [n](const SeedClass& walked, const SeedClass& stored) {
    std::vector<int> sigma(n);
    for (int j = 0; j < n; ++j) sigma[walked.perm[j]] = stored.perm[j];
    return sigma;
  };

  auto add = [&](Seed sa, Seed sb, SeedClass ca, SeedClass cb) {
    int id = static_cast<int>(nodes.size());
    ia.add(ca.hash, id);
    ib.add(cb.hash, id);
    classes_a.push_back(ca);
    classes_b.push_back(cb);
    nodes.push_back({std::move(sa), std::move(sb), std::move(ca), std::move(cb)});
    return id;
  };
  add(a, b, canonical_form(a), canonical_form(b));
  std::vector<int> level{0};
  for (int d = 0; d < depth && rep.isomorphic; ++d) {
    std::vector<int> next;
    for (int u : level) {
      for (int k = 0; k < n && rep.isomorphic; ++k) {
        Seed sa = mutate_seed(nodes[u].sa, k), sb = mutate_seed(nodes[u].sb, k);
        SeedClass ca = canonical_form(sa), cb = canonical_form(sb);
        int va = ia.find(ca, classes_a), vb = ib.find(cb, classes_b);
        if (va != vb) {
          rep.isomorphic = false;
          rep.detail = "class correspondence breaks at depth " + std::to_string(d + 1);
          break;
        }
        if (va < 0) {
          va = add(std::move(sa), std::move(sb), std::move(ca), std::move(cb));
          next.push_back(va);
        } else if (relabel(ca, nodes[va].ca) != relabel(cb, nodes[va].cb)) {
          rep.isomorphic = false;
          rep.detail = "edge labels disagree at depth " + std::to_string(d + 1);
          break;
        }
        edges.insert({std::min(u, va), std::max(u, va)});
      }
      if (!rep.isomorphic) break;
    }
    level = std::move(next);
  }
  rep.nodes = nodes.size();
  rep.edges = edges.size();
  return rep;
}

// ---------------------------------------------------------------------------
// Normal form search

NormalFormSearcher::NormalFormSearcher(Seed s0, int r_bound, int seq_bound)
    : s0_(std::move(s0)), r_bound_(r_bound), seq_bound_(seq_bound) {
  bipartite_parts(s0_.matrix);  // validates
}

const NormalFormSearcher::Tree& NormalFormSearcher::tree(int r, int ell) {
  auto key = std::make_pair(r, ell);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Tree t;
  const int n = s0_.n();
  struct Item {
    Seed seed;
    std::vector<int> seq;
  };
  std::deque<Item> queue;
  Seed base = coxeter_mutation(s0_, r);
  SeedClass c0 = canonical_form(base);
  t.found[c0.hash].push_back({c0, {}});
  queue.push_back({base, {}});
  auto known = [&t](const SeedClass& c) {
    auto f = t.found.find(c.hash);
    if (f == t.found.end()) return false;
    for (const auto& e : f->second)
      if (e.first == c) return true;
    return false;
  };
  while (!queue.empty()) {
    Item cur = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(cur.seq.size()) >= seq_bound_) continue;
    for (int k = 0; k < n; ++k) {
      if (k == ell) continue;
      Seed next = mutate_seed(cur.seed, k);
      SeedClass c = canonical_form(next);
      if (known(c)) continue;
      std::vector<int> seq = cur.seq;
      seq.push_back(k);
      t.found[c.hash].push_back({c, seq});
      queue.push_back({std::move(next), std::move(seq)});
    }
  }
  return cache_.emplace(key, std::move(t)).first->second;
}

NormalFormCertificate NormalFormSearcher::decompose(const Seed& target) {
  SeedClass goal = canonical_form(target);
  const int n = s0_.n();
  for (int mag = 0; mag <= r_bound_; ++mag) {
    for (int r : mag == 0 ? std::vector<int>{0} : std::vector<int>{mag, -mag}) {
      for (int ell = 0; ell < n; ++ell) {
        const Tree& t = tree(r, ell);
        auto f = t.found.find(goal.hash);
        if (f == t.found.end()) continue;
        for (const auto& e : f->second)
          if (e.first == goal) return {r, ell, e.second};
      }
    }
  }
  throw NotFoundWithinBounds("no certificate with |r| <= " + std::to_string(r_bound_) + " and at most " +
                             std::to_string(seq_bound_) + " further mutations");
}

Seed NormalFormSearcher::replay(const NormalFormCertificate& c) const {
  for (int k : c.seq)
    if (k == c.ell) throw InvalidInput("certificate uses its excluded index");
  return mutate_seed_sequence(coxeter_mutation(s0_, c.r), c.seq);
}

NormalFormCertificate normal_form_decompose(const Seed& target, const Seed& s0, int r_bound, int seq_bound) {
  NormalFormSearcher s(s0, r_bound, seq_bound);
  return s.decompose(target);
}

}  // namespace cw

#include "minorforge/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "minorforge/rng.hpp"

namespace minorforge {

namespace {

constexpr std::uint64_t kGnpTag = 0x676e70;       // stream tags keep the
constexpr std::uint64_t kRegularTag = 0x726567;   // generator families on
                                                  // disjoint substreams

// Finite field GF(q) for prime powers q <= 13, with add/mul lookup tables.
// Elements are 0..q-1; non-prime q encodes base-p digit vectors of the
// polynomial representation.
struct FiniteField {
  int q = 0;
  std::vector<int> add_table, mul_table;

  int add(int a, int b) const { return add_table[a * q + b]; }
  int mul(int a, int b) const { return mul_table[a * q + b]; }

  explicit FiniteField(int q_) : q(q_) {
    struct Shape {
      int q, p, k;
      std::array<int, 3> poly;  // low-degree coefficients of the monic
                                // irreducible (degree k), mod p
    };
    // x^2+x+1 over GF(2); x^3+x+1 over GF(2); x^2+1 over GF(3)
    static const Shape shapes[] = {
        {2, 2, 1, {0, 0, 0}},  {3, 3, 1, {0, 0, 0}},  {4, 2, 2, {1, 1, 0}},
        {5, 5, 1, {0, 0, 0}},  {7, 7, 1, {0, 0, 0}},  {8, 2, 3, {1, 1, 0}},
        {9, 3, 2, {1, 0, 0}},  {11, 11, 1, {0, 0, 0}}, {13, 13, 1, {0, 0, 0}},
    };
    const Shape* shape = nullptr;
    for (const auto& s : shapes)
      if (s.q == q) shape = &s;
    if (!shape) throw std::invalid_argument("incidence order must be a prime power <= 13");

    const int p = shape->p, k = shape->k;
    auto digits = [&](int a) {
      std::array<int, 3> d{0, 0, 0};
      for (int i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
      }
      return d;
    };
    auto pack = [&](const std::array<int, 3>& d) {
      int a = 0;
      for (int i = k - 1; i >= 0; --i) a = a * p + d[i];
      return a;
    };
    add_table.resize(q * q);
    mul_table.resize(q * q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::array<int, 3> sum{0, 0, 0};
        for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
        add_table[a * q + b] = pack(sum);

        // Polynomial product, then reduce by the monic irreducible:
        // x^k = -(poly[k-1] x^{k-1} + ... + poly[0]).
        std::array<int, 5> prod{0, 0, 0, 0, 0};
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (int deg = 2 * k - 2; deg >= k; --deg) {
          int c = prod[deg];
          if (c == 0) continue;
          prod[deg] = 0;
          for (int i = 0; i < k; ++i) {
            int idx = deg - k + i;
            prod[idx] = ((prod[idx] - c * shape->poly[i]) % p + p * p) % p;
          }
        }
        std::array<int, 3> red{0, 0, 0};
        for (int i = 0; i < k; ++i) red[i] = prod[i];
        mul_table[a * q + b] = pack(red);
      }
  }
};

}  // namespace

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_gnp: negative n");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_gnp: p outside [0,1]");
  SplitMix64 rng(substream(seed, kGnpTag));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph gen_random_regular(int n, int d, std::uint64_t seed, int budget) {
  if (n < 0 || d < 0) throw std::invalid_argument("gen_random_regular: negative parameter");
  if (d >= n && !(d == 0 && n == 0))
    throw std::invalid_argument("gen_random_regular: need d < n");
  if ((static_cast<long>(n) * d) % 2 != 0)
    throw std::invalid_argument("gen_random_regular: n*d must be even");
  if (d == 0) return Graph(n);

  // Pairing model with per-pair rejection: match two uniform unmatched
  // points, redraw when the pair would close a loop or repeat an edge, and
  // restart the attempt when a dead end leaves only invalid pairs (whole-
  // pairing rejection would almost never accept beyond small degrees).
  for (int attempt = 0; attempt < budget; ++attempt) {
    SplitMix64 rng(substream(seed, kRegularTag, static_cast<std::uint64_t>(attempt)));
    std::vector<int> unmatched(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) unmatched[static_cast<size_t>(v) * d + i] = v;
    std::set<std::pair<int, int>> used;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(unmatched.size() / 2);
    bool dead_end = false;
    while (!unmatched.empty() && !dead_end) {
      bool matched = false;
      for (long tries = 0; tries < 200 && !matched; ++tries) {
        size_t i = rng.next_below(unmatched.size());
        size_t j = rng.next_below(unmatched.size() - 1);
        if (j >= i) ++j;
        int u = unmatched[i], v = unmatched[j];
        if (u == v) continue;
        std::pair<int, int> key = std::minmax(u, v);
        if (used.count(key)) continue;
        used.insert(key);
        edges.push_back(key);
        if (i < j) std::swap(i, j);  // pop the larger index first
        unmatched[i] = unmatched.back();
        unmatched.pop_back();
        unmatched[j] = unmatched.back();
        unmatched.pop_back();
        matched = true;
      }
      if (!matched) dead_end = true;  // only loops or duplicates remain
    }
    if (!dead_end) return Graph::from_edges(n, edges);
  }
  throw std::runtime_error("gen_random_regular: rejection budget of " + std::to_string(budget) +
                           " attempts exhausted");
}

Graph gen_blowup(const Graph& base, int k) {
  if (k < 1) throw std::invalid_argument("gen_blowup: need k >= 1");
  Graph g(base.n * k);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < base.n; ++u)
    for (int v : base.adj[u]) {
      if (v <= u) continue;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) edges.emplace_back(u * k + i, v * k + j);
    }
  return Graph::from_edges(base.n * k, edges);
}

Graph gen_incidence(int q) {
  FiniteField f(q);
  // Normalized homogeneous triples: (1,a,b), (0,1,a), (0,0,1).
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
  for (int a = 0; a < q; ++a) reps.push_back({0, 1, a});
  reps.push_back({0, 0, 1});
  const int m = static_cast<int>(reps.size());  // q^2 + q + 1

  std::vector<std::pair<int, int>> edges;
  for (int pi = 0; pi < m; ++pi)
    for (int li = 0; li < m; ++li) {
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot = f.add(dot, f.mul(reps[pi][c], reps[li][c]));
      if (dot == 0) edges.emplace_back(pi, m + li);
    }
  return Graph::from_edges(2 * m, edges);
}

}  // namespace minorforge

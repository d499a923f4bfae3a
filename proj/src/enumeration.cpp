#include "neighborly/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "neighborly/constructions.hpp"

namespace neighborly {

namespace {

using TypeMap = std::map<CombType, Chirotope>;

// Runs fn(0..count-1) on up to `jobs` threads; rethrows the first failure.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  const int width = std::min<int>(jobs, static_cast<int>(count));
  for (int t = 0; t < width; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

// Calls fn(sig) for every full-length signature: ordered distinct r-tuples
// with all 2^r sign patterns.
template <class Fn>
void for_each_full_signature(int n, int r, Fn&& fn) {
  std::vector<int> tuple;
  std::vector<bool> used(n, false);
  std::vector<LexEntry> entries(r);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == r) {
      for (std::uint32_t signs = 0; signs < (1U << r); ++signs) {
        for (int i = 0; i < r; ++i) entries[i] = {tuple[i], static_cast<Sign>((signs >> i) & 1U ? -1 : 1)};
        fn(LexSignature(entries));
      }
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (used[e]) continue;
      used[e] = true;
      tuple.push_back(e);
      self(self, depth + 1);
      tuple.pop_back();
      used[e] = false;
    }
  };
  rec(rec, 0);
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

CombType type_of(const Chirotope& polytope) { return canonical_type(facets(polytope)); }

// Merges per-task maps in task order, so the representative kept for a type
// does not depend on scheduling.
TypeMap merge(std::vector<TypeMap>& parts) {
  TypeMap out;
  for (auto& part : parts)
    for (auto& [type, rep] : part) out.emplace(type, std::move(rep));
  return out;
}

// Flags through which E sews: each universal flag, with every level either
// unsplit or split at one of its two new elements.
std::vector<Flag> sewing_flags(const Chirotope& p, bool splits) {
  std::vector<Flag> out;
  for (const Flag& u : universal_flags(p)) {
    const int m = static_cast<int>(u.faces.size());
    int variants = 1;
    if (splits)
      for (int j = 0; j < m; ++j) variants *= 3;
    for (int code = 0; code < variants; ++code) {
      Flag flag;
      ElementSet previous = 0;
      int c = code;
      for (ElementSet t : u.faces) {
        const int choice = c % 3;
        c /= 3;
        if (choice > 0) flag.faces.push_back(previous | singleton(elements_of(t & ~previous)[choice - 1]));
        flag.faces.push_back(t);
        previous = t;
      }
      out.push_back(std::move(flag));
    }
  }
  return out;
}

// One sewing step: all sewings of the members of `cur` plus the cyclic
// polytope with n vertices.
TypeMap next_sewn_level(const TypeMap& cur, int dim, int n, bool splits, int jobs) {
  std::vector<const Chirotope*> reps;
  for (const auto& [type, rep] : cur) reps.push_back(&rep);
  std::vector<TypeMap> parts(reps.size() + 1);
  const Chirotope cyclic = cyclic_polytope(n, dim);
  parts[0].emplace(type_of(cyclic), cyclic);
  parallel_for(reps.size(), jobs, [&](std::size_t i) {
    std::unordered_set<std::string> seen;
    for (const Flag& flag : sewing_flags(*reps[i], splits)) {
      Chirotope sewn = sew(*reps[i], flag).extended;
      if (!seen.insert(sewn.sign_string()).second) continue;
      CombType t = type_of(sewn);
      parts[i + 1].emplace(std::move(t), std::move(sewn));
    }
  });
  return merge(parts);
}

TypeMap sewn_family(int dim, int n, bool splits, int jobs) {
  TypeMap level;
  const Chirotope simplex = cyclic_polytope(dim + 1, dim);
  level.emplace(type_of(simplex), simplex);
  for (int k = dim + 2; k <= n; ++k) level = next_sewn_level(level, dim, k, splits, jobs);
  return level;
}

bool same_keys(const TypeMap& a, const TypeMap& b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](const auto& x, const auto& y) { return x.first == y.first; });
}

// Gale sewn duals: frontier keyed by the type of the dual polytope.
TypeMap gale_family(int dim, int n, int jobs) {
  const int r = n - dim - 1;
  const int m = dim / 2;
  TypeMap frontier;
  if (r == 0) {
    const Chirotope simplex = cyclic_polytope(n, dim);
    frontier.emplace(type_of(simplex), dual(simplex));
    return frontier;
  }
  const Chirotope seed = stc(r);
  frontier.emplace(type_of(dual(seed)), seed);
  for (int step = 0; step < m; ++step) {
    std::vector<const Chirotope*> reps;
    for (const auto& [type, rep] : frontier) reps.push_back(&rep);
    std::vector<TypeMap> parts(reps.size());
    parallel_for(reps.size(), jobs, [&](std::size_t i) {
      const Chirotope& base = *reps[i];
      if (!is_balanced(base)) throw std::logic_error("gale family: unbalanced frontier member");
      std::unordered_set<std::string> seen;
      for_each_full_signature(base.size(), base.rank(), [&](const LexSignature& sig) {
        Chirotope g = gale_double_extension(base, GaleStep{sig});
        if (!seen.insert(g.sign_string()).second) return;
        CombType t = type_of(dual(g));
        parts[i].emplace(std::move(t), std::move(g));
      });
    });
    frontier = merge(parts);
  }
  return frontier;
}

void check_envelope(const FamilySpec& spec) {
  if (spec.dim < 2 || spec.dim > 8 || spec.dim % 2)
    throw std::invalid_argument("enumerate: dimension must be even and between 2 and 8");
  if (spec.vertices <= spec.dim || spec.vertices > 12)
    throw std::invalid_argument("enumerate: need d < n <= 12");
  if (spec.budget < 0 || spec.vertices + spec.budget > 13)
    throw std::invalid_argument("enumerate: budget must satisfy 0 <= budget and n + budget <= 13");
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::E: return "E";
    case Family::O: return "O";
    case Family::G: return "G";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "S") return Family::S;
  if (text == "E") return Family::E;
  if (text == "O") return Family::O;
  if (text == "G") return Family::G;
  throw std::invalid_argument("unknown family '" + text + "' (expected S, E, O or G)");
}

FamilyResult enumerate_family(const FamilySpec& spec) {
  check_envelope(spec);
  FamilyResult out;
  out.spec = spec;
  std::vector<Chirotope>& members = out.members;
  const int d = spec.dim;
  const int n = spec.vertices;
  switch (spec.family) {
    case Family::S:
    case Family::E: {
      for (const auto& [type, rep] : sewn_family(d, n, spec.family == Family::E, spec.jobs)) {
        out.types.push_back(type);
        members.push_back(rep);
      }
      break;
    }
    case Family::O: {
      TypeMap level = sewn_family(d, n, true, spec.jobs);
      TypeMap found = level;
      std::optional<TypeMap> gale;
      if (spec.stop_at_g) gale = gale_family(d, n, spec.jobs);
      out.note = "budget=" + std::to_string(spec.budget);
      for (int k = 0;; ++k) {
        if (gale && same_keys(found, *gale)) {
          if (k < spec.budget) out.note += " saturated=" + std::to_string(k);
          break;
        }
        if (k == spec.budget) break;
        level = next_sewn_level(level, d, n + k + 1, true, spec.jobs);
        std::vector<const Chirotope*> reps;
        for (const auto& [type, rep] : level) reps.push_back(&rep);
        std::vector<TypeMap> parts(reps.size());
        parallel_for(reps.size(), spec.jobs, [&](std::size_t i) {
          for_each_subset(n + k + 1, k + 1, [&](ElementSet removed) {
            Chirotope sub = deletion(*reps[i], removed);
            if (!is_neighborly(sub)) return;
            CombType t = type_of(sub);
            parts[i].emplace(std::move(t), std::move(sub));
          });
        });
        for (auto& [type, rep] : merge(parts)) found.emplace(type, std::move(rep));
      }
      for (const auto& [type, rep] : found) {
        out.types.push_back(type);
        members.push_back(rep);
      }
      break;
    }
    case Family::G: {
      for (const auto& [type, rep] : gale_family(d, n, spec.jobs)) {
        out.types.push_back(type);
        members.push_back(dual(rep));
      }
      break;
    }
  }
  out.verified = std::all_of(members.begin(), members.end(), [&](const Chirotope& p) {
    return p.size() == n && p.rank() == d + 1 && is_neighborly(p);
  });
  return out;
}

ContainmentReport containment_check(int dim, int vertices, int budget, int jobs, bool stop_at_g) {
  auto run = [&](Family f) {
    return enumerate_family(FamilySpec{f, dim, vertices, budget, jobs, stop_at_g}).types;
  };
  const auto s = run(Family::S), e = run(Family::E), o = run(Family::O), g = run(Family::G);
  ContainmentReport out;
  out.dim = dim;
  out.vertices = vertices;
  out.s = s.size();
  out.e = e.size();
  out.o = o.size();
  out.g = g.size();
  out.s_in_e = std::includes(e.begin(), e.end(), s.begin(), s.end());
  out.e_in_o = std::includes(o.begin(), o.end(), e.begin(), e.end());
  out.o_in_g = std::includes(g.begin(), g.end(), o.begin(), o.end());
  return out;
}

BigInt labeled_count(const FamilyResult& result) {
  BigInt total = 0;
  const BigInt all = factorial(result.spec.vertices);
  for (const CombType& t : result.types) total += all / t.automorphisms;
  return total;
}

std::uint64_t brute_lex_extension_count(const Chirotope& m) {
  std::unordered_set<std::string> seen;
  for_each_full_signature(m.size(), m.rank(), [&](const LexSignature& sig) {
    seen.insert(lex_extend_chirotope(m, sig).sign_string());
  });
  return seen.size();
}

std::uint64_t labeled_corank3_count(int r) {
  if (r < 1 || r > 6) throw std::invalid_argument("labeled_corank3_count: r must be in [1, 6]");
  const int n = r + 3;
  const Chirotope polygon = cyclic_polytope(n, 2);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::unordered_set<std::string> seen;
  do {
    seen.insert(dual(relabel_reorient(polygon, perm)).normalized().sign_string());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return seen.size();
}

std::string to_string(GraphShape s) {
  switch (s) {
    case GraphShape::complete: return "complete";
    case GraphShape::cycle: return "cycle";
    case GraphShape::chains: return "chains";
    case GraphShape::other: return "other";
  }
  return "?";
}

bool InseparabilityGraph::consistent() const {
  return std::find(expected.begin(), expected.end(), shape) != expected.end();
}

InseparabilityGraph inseparability_graph(const Chirotope& chi) {
  InseparabilityGraph g;
  g.n = chi.size();
  g.edges = inseparable_pairs(chi);
  const int n = g.n;
  const int r = chi.rank();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  // Connected components by union-find.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) parent[find(e.first)] = find(e.second);
  int components = 0;
  for (int v = 0; v < n; ++v) components += find(v) == v ? 1 : 0;
  const std::size_t edges = g.edges.size();
  const bool max_degree_two = std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() <= 2; });
  const bool complete = edges == static_cast<std::size_t>(n) * (n - 1) / 2;
  const bool cycle = n >= 3 && components == 1 && edges == static_cast<std::size_t>(n) &&
                     std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 2; });
  const bool chains = max_degree_two && edges + components == static_cast<std::size_t>(n);

  if (r <= 1 || r >= n - 1) g.expected = {GraphShape::complete};
  else if (r == 2 || r == n - 2) g.expected = {GraphShape::cycle};
  else g.expected = {GraphShape::cycle, GraphShape::chains};

  auto holds = [&](GraphShape s) {
    return (s == GraphShape::complete && complete) || (s == GraphShape::cycle && cycle) ||
           (s == GraphShape::chains && chains);
  };
  g.shape = GraphShape::other;
  for (GraphShape s : g.expected)
    if (holds(s)) {
      g.shape = s;
      return g;
    }
  for (GraphShape s : {GraphShape::complete, GraphShape::cycle, GraphShape::chains})
    if (holds(s)) {
      g.shape = s;
      break;
    }
  return g;
}

namespace {

BigFloat log_of(const BigInt& x) { return log(BigFloat(x)); }

// x^2 ln x with 0 ln 0 = 0.
BigFloat sq_log(const BigFloat& x) { return x == 0 ? BigFloat(0) : x * x * log(x); }

}  // namespace

BigInt lle_lower_bound(int n, int r) { return 2 * factorial(n) / factorial(n - r + 1); }

BigInt lle_remark_bound(int n, int r) {
  return (BigInt(1) << (r - 1)) * factorial(n) / (BigInt(n - 1) * factorial(n - r));
}

BoundReport eval_bounds(int n, int d) {
  if (d < 2 || n <= d + 1) throw std::invalid_argument("bounds: need d >= 2 and n >= d + 2");
  BoundReport rep;
  rep.n = n;
  rep.d = d;
  rep.r = n - d - 1;
  rep.m = d / 2;
  const int r = rep.r;
  const int m = rep.m;
  auto add_exact = [&](const std::string& id, const BigInt& v) {
    rep.values.push_back({id, v, log_of(v)});
  };

  // Even part: lnei(r+1+2m, 2m).
  BigInt product = 1;
  for (int i = 1; i <= m; ++i) product *= factorial(r + 2 * i) / factorial(2 * i);
  BigInt recursive = 1;
  for (int k = 1; k <= m; ++k) recursive = recursive * (r + 2 * k) * lle_lower_bound(r + 2 * k - 1, r) / 2;
  if (d % 2 == 0) {
    add_exact("product", product);
    add_exact("recursive", recursive);
  } else {
    // One more extension: r+2m+2 labels for p, each matroid counted at most twice.
    add_exact("product", product * factorial(r + 2 * m + 2) / factorial(2 * m + 2));
    add_exact("recursive", recursive * (r + 2 * m + 2) * lle_lower_bound(r + 2 * m + 1, r) / 2);
    add_exact("product-displayed", product * factorial(r + 2 * m + 2) / factorial(2 * m + 1));
  }
  // Extension count used by the last step of the recursion.
  const int last = d % 2 == 0 ? n - 2 : n - 1;
  add_exact("lle", lle_lower_bound(last, r));
  add_exact("lle-remark", lle_remark_bound(last, r));

  const BigFloat rf = r, df = d;
  const BigFloat closed = (sq_log(rf + df) - sq_log(rf) - sq_log(df)) / 4 - 3 * rf * df / 4;
  rep.values.push_back({"closed", std::nullopt, closed});
  const BigFloat corollary = BigFloat(d) * (n - 1) / 2 * (log(BigFloat(n - 1)) - BigFloat(3) / 2);
  rep.values.push_back({"corollary", std::nullopt, corollary});

  rep.product_ge_closed = rep.find("product")->log_value >= closed;
  if (n > 2 * d) rep.closed_ge_corollary = closed >= corollary;
  rep.consistent = rep.product_ge_closed && rep.find("recursive")->exact == rep.find("product")->exact;
  return rep;
}

const BoundValue* BoundReport::find(const std::string& id) const {
  for (const auto& v : values)
    if (v.id == id) return &v;
  return nullptr;
}

std::string BoundReport::text() const {
  std::ostringstream out;
  out << "n=" << n << " d=" << d << " r=" << r << " m=" << m << "\n";
  for (const auto& v : values) {
    out << v.id << "=";
    if (v.exact) out << *v.exact;
    else out << exp(v.log_value).str(12, std::ios_base::scientific);
    out << " ln=" << v.log_value.str(12, std::ios_base::fixed) << "\n";
  }
  if (brute_force) out << "brute_force=" << *brute_force << "\n";
  out << "product_ge_closed=" << (product_ge_closed ? "true" : "false") << "\n";
  if (closed_ge_corollary) out << "closed_ge_corollary=" << (*closed_ge_corollary ? "true" : "false") << "\n";
  out << "consistent=" << (consistent ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace neighborly

#include "neighborly/chirotope.hpp"

#include <algorithm>
#include <stdexcept>

namespace neighborly {

namespace {

// Parity (0/1) of the permutation sorting `values` ascending.
int sorting_parity(std::span<const int> values) {
  int inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] > values[j]) ++inversions;
  return inversions & 1;
}

// Sign of the shuffle (B ascending, complement ascending).
int shuffle_parity(ElementSet basis) {
  int parity = 0;
  int i = 0;
  for (int b : elements_of(basis)) parity += b - i++;
  return parity & 1;
}

Sign sign_of_parity(int parity) { return parity ? Sign{-1} : Sign{1}; }

}  // namespace

Chirotope::Chirotope(int n, int rank, std::vector<Sign> signs)
    : n_(n), rank_(rank), signs_(std::move(signs)) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("chirotope: element count out of range");
  if (rank < 0 || rank > n) throw std::invalid_argument("chirotope: rank must satisfy 0 <= r <= n");
  if (signs_.size() != binomial(n, rank))
    throw std::invalid_argument("chirotope: expected " + std::to_string(binomial(n, rank)) +
                                " signs, got " + std::to_string(signs_.size()));
  for (Sign s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("chirotope: signs must be +1 or -1 (uniform)");
}

Chirotope Chirotope::alternating(int n, int rank) {
  return Chirotope(n, rank, std::vector<Sign>(binomial(n, rank), Sign{1}));
}

Sign Chirotope::eval(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != rank_) throw std::invalid_argument("chirotope: tuple length != rank");
  ElementSet basis = 0;
  for (int e : tuple) {
    if (e < 0 || e >= n_) throw std::out_of_range("chirotope: element out of range");
    if (contains(basis, e)) return 0;
    basis |= singleton(e);
  }
  const Sign s = (*this)(basis);
  return sorting_parity(tuple) ? static_cast<Sign>(-s) : s;
}

std::string Chirotope::sign_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out += s > 0 ? '+' : '-';
  return out;
}

Chirotope Chirotope::negated() const {
  Chirotope out = *this;
  for (Sign& s : out.signs_) s = static_cast<Sign>(-s);
  return out;
}

Chirotope Chirotope::normalized() const {
  return (signs_.empty() || signs_.front() > 0) ? *this : negated();
}

bool Chirotope::same_oriented_matroid(const Chirotope& other) const {
  if (n_ != other.n_ || rank_ != other.rank_) return false;
  if (signs_ == other.signs_) return true;
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] != -other.signs_[i]) return false;
  return true;
}

std::string format_signed_set(const SignedSet& x) {
  std::string out;
  for (int e = 0; e < x.ground; ++e) out += x(e) > 0 ? '+' : (x(e) < 0 ? '-' : '0');
  return out;
}

ValidityReport validate(const Chirotope& chi) {
  const int n = chi.size();
  const int r = chi.rank();
  ValidityReport report;
  if (r < 2 || n < r + 2) return report;
  // For tau an (r-2)-set and a<b<c<d outside tau, the three products
  // chi(tau,a,b)chi(tau,c,d), -chi(tau,a,c)chi(tau,b,d), chi(tau,a,d)chi(tau,b,c)
  // must not share one sign.
  bool violated = false;
  for_each_subset(n, r - 2, [&](ElementSet tau) {
    if (violated) return;
    const std::vector<int> rest = elements_of(chi.ground() & ~tau);
    auto val = [&](int x, int y) {
      // x < y, both outside tau: the tuple (tau, x, y).
      Sign s = chi(tau | singleton(x) | singleton(y));
      const int moves = count_above(tau, x) + count_above(tau, y);
      return (moves & 1) ? static_cast<Sign>(-s) : s;
    };
    const int m = static_cast<int>(rest.size());
    for (int i = 0; i < m && !violated; ++i)
      for (int j = i + 1; j < m && !violated; ++j)
        for (int k = j + 1; k < m && !violated; ++k)
          for (int l = k + 1; l < m && !violated; ++l) {
            const int a = rest[i], b = rest[j], c = rest[k], d = rest[l];
            const int t1 = val(a, b) * val(c, d);
            const int t2 = -val(a, c) * val(b, d);
            const int t3 = val(a, d) * val(b, c);
            if (t1 == t2 && t2 == t3) {
              violated = true;
              report.ok = false;
              report.violating_tuple = elements_of(tau);
              report.violating_tuple.insert(report.violating_tuple.end(), {a, b, c, d});
              report.message = "three-term Grassmann-Pluecker relation violated at tau={" +
                               format_set(tau) + "}, (a,b,c,d)=(" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + "," +
                               std::to_string(d) + ")";
            }
          }
  });
  return report;
}

Chirotope dual(const Chirotope& chi) {
  const int n = chi.size();
  const int r = chi.rank();
  const int rd = n - r;
  Sign global = 1;
  if (r < rd) {
    global = sign_of_parity((r * rd) & 1);
  } else if (r == rd && (r & 1)) {
    // No rank-only constant works here; tie the sign to two fixed bases so
    // that applying dual twice returns the input.
    global = static_cast<Sign>(chi(full_set(r)) * chi(full_set(n) & ~full_set(r)));
  }
  const ElementSet all = full_set(n);
  return Chirotope::from_function(n, rd, [&](ElementSet complement) {
    const ElementSet basis = all & ~complement;
    const Sign s = static_cast<Sign>(global * chi(basis));
    return shuffle_parity(basis) ? static_cast<Sign>(-s) : s;
  });
}

Minor minor(const Chirotope& chi, ElementSet remove, ElementSet contract) {
  const int r = chi.rank();
  const ElementSet all = chi.ground();
  if ((remove | contract) & ~all) throw std::invalid_argument("minor: element out of range");
  if (remove & contract) throw std::invalid_argument("minor: deleted and contracted sets intersect");
  const int k = cardinality(contract);
  if (k > 0 && k >= r)
    throw std::invalid_argument("minor: contraction set must be smaller than the rank");
  Minor out;
  out.deleted = remove;
  out.contracted = contract;
  const ElementSet kept = all & ~remove & ~contract;
  out.survivors = elements_of(kept);
  const int n2 = static_cast<int>(out.survivors.size());
  const int r2 = r - k;
  if (n2 < r2) throw std::invalid_argument("minor: deletion would drop the rank");
  out.result = Chirotope::from_function(n2, r2, [&](ElementSet basis) {
    ElementSet original = 0;
    int parity = 0;
    for (int e : elements_of(basis)) {
      const int orig = out.survivors[e];
      original |= singleton(orig);
      // tuple (c_1..c_k, x_1..x_{r-k}) sorts with one swap per pair c > x
      parity += count_above(contract, orig);
    }
    const Sign s = chi(original | contract);
    return (parity & 1) ? static_cast<Sign>(-s) : s;
  });
  return out;
}

Chirotope deletion(const Chirotope& chi, ElementSet remove) { return minor(chi, remove, 0).result; }

Chirotope contraction(const Chirotope& chi, ElementSet contract) {
  return minor(chi, 0, contract).result;
}

SignedSet cocircuit_of(const Chirotope& chi, ElementSet hyperplane) {
  SignedSet c{chi.size(), 0, 0};
  for (int e = 0; e < chi.size(); ++e) {
    const Sign s = chi.eval_hyperplane(hyperplane, e);
    if (s > 0) c.plus |= singleton(e);
    if (s < 0) c.minus |= singleton(e);
  }
  return c;
}

std::vector<SignedSet> cocircuits(const Chirotope& chi) {
  std::vector<SignedSet> out;
  if (chi.rank() == 0) return out;
  out.reserve(binomial(chi.size(), chi.rank() - 1));
  for_each_subset(chi.size(), chi.rank() - 1, [&](ElementSet h) {
    SignedSet c = cocircuit_of(chi, h);
    if (c.support() != 0 && !contains(c.plus, lowest_element(c.support()))) c = c.negated();
    out.push_back(c);
  });
  return out;
}

std::vector<SignedSet> circuits(const Chirotope& chi) { return cocircuits(dual(chi)); }

Chirotope relabel_reorient(const Chirotope& chi, std::span<const int> perm, ElementSet flips) {
  const int n = chi.size();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || inverse[perm[i]] != -1)
      throw std::invalid_argument("relabel: not a permutation");
    inverse[perm[i]] = i;
  }
  std::vector<int> image;
  return Chirotope::from_function(n, chi.rank(), [&](ElementSet new_basis) {
    // new basis sorted (y_1 < ... < y_r) is the image of (pi^-1 y_1, ..., pi^-1 y_r)
    image.clear();
    ElementSet old_basis = 0;
    for (int y : elements_of(new_basis)) {
      image.push_back(inverse[y]);
      old_basis |= singleton(inverse[y]);
    }
    int parity = sorting_parity(image) + cardinality(old_basis & flips);
    const Sign s = chi(old_basis);
    return (parity & 1) ? static_cast<Sign>(-s) : s;
  });
}

std::optional<int> inseparability(const Chirotope& chi, int a, int b) {
  const int n = chi.size();
  const int r = chi.rank();
  if (a == b) throw std::invalid_argument("inseparability: identical elements");
  if (a > b) std::swap(a, b);
  if (n < r + 1) return 0;
  // Circuit on S (|S| = r+1): X(s_i) = (-1)^i chi(S \ s_i).
  const ElementSet pair = singleton(a) | singleton(b);
  const ElementSet others = chi.ground() & ~pair;
  const int others_n = cardinality(others);
  const std::vector<int> other_elems = elements_of(others);
  int seen = 0;
  bool failed = false;
  for_each_subset(others_n, r - 1, [&](ElementSet local) {
    if (failed) return;
    ElementSet s = pair;
    for (int i : elements_of(local)) s |= singleton(other_elems[i]);
    const int ia = cardinality(s & full_set(a));
    const int ib = cardinality(s & full_set(b));
    const int prod = chi(s & ~singleton(a)) * chi(s & ~singleton(b)) * (((ia + ib) & 1) ? -1 : 1);
    if (seen == 0) seen = prod;
    else if (seen != prod) failed = true;
  });
  if (failed) return std::nullopt;
  return seen;
}

std::vector<InseparablePair> inseparable_pairs(const Chirotope& chi) {
  std::vector<InseparablePair> out;
  for (int a = 0; a < chi.size(); ++a)
    for (int b = a + 1; b < chi.size(); ++b)
      if (auto s = inseparability(chi, a, b)) out.push_back({a, b, *s});
  return out;
}

}  // namespace neighborly

#include "neighborly/realization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace neighborly {

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

RationalMatrix rows_of(const std::vector<RationalVector>& rows, ElementSet subset) {
  RationalMatrix m;
  for (int i : elements_of(subset)) m.push_back(rows[i]);
  return m;
}

// Facets of the cone over `rows` restricted to `subset`: zero sets of the
// hyperplanes spanned by rank-1 rows that leave every other row weakly on
// one side. Rows must span the ambient space and generate a pointed cone.
std::vector<ElementSet> cone_facets(const std::vector<RationalVector>& rows, ElementSet subset) {
  const int dim = static_cast<int>(rows.front().size());
  const std::vector<int> labels = elements_of(subset);
  std::vector<ElementSet> out;
  for_each_subset(static_cast<int>(labels.size()), dim - 1, [&](ElementSet local) {
    ElementSet h = 0;
    for (int i : elements_of(local)) h |= singleton(labels[i]);
    RationalMatrix m = rows_of(rows, h);
    m.emplace_back();
    ElementSet zero = h;
    int side = 0;
    bool spanning = false;
    bool supporting = true;
    for (int x : labels) {
      if (contains(h, x)) continue;
      m.back() = rows[x];
      const int s = determinant_sign(m);
      if (s == 0) {
        zero |= singleton(x);
        continue;
      }
      spanning = true;
      if (side == 0) side = s;
      else if (s != side) {
        supporting = false;
        break;
      }
    }
    if (spanning && supporting && std::find(out.begin(), out.end(), zero) == out.end()) out.push_back(zero);
  });
  std::sort(out.begin(), out.end());
  return out;
}

void require_affine(const PointConfig& cfg) {
  for (const RationalVector& p : cfg.points)
    if (p.empty() || p.front() != 1)
      throw std::invalid_argument("expected an affine configuration (leading coordinate 1)");
}

class LexSubdivider {
 public:
  LexSubdivider(const PointConfig& cfg, const LexSignature& sig) : cfg_(cfg), sig_(sig) {}

  std::vector<ElementSet> run(ElementSet polytope, int next) const {
    while (next < sig_.length() && !contains(polytope, sig_[next].element)) ++next;
    if (cardinality(polytope) == cfg_.rank() || next == sig_.length()) return {polytope};
    const int v = sig_[next].element;
    const ElementSet rest = polytope & ~singleton(v);
    std::vector<ElementSet> cells;
    if (sig_[next].sign > 0) {
      cells = run(rest, next + 1);
      for (ElementSet g : cone_facets(cfg_.points, rest))
        if (visible(g, rest, v)) cells.push_back(g | singleton(v));
    } else {
      for (ElementSet f : cone_facets(cfg_.points, polytope))
        if (!contains(f, v)) cells.push_back(f | singleton(v));
    }
    return cells;
  }

 private:
  // v lies strictly on the other side of facet g from the polytope `body`.
  bool visible(ElementSet g, ElementSet body, int v) const {
    RationalMatrix m = rows_of(cfg_.points, g);
    m.resize(cfg_.rank() - 1);
    m.push_back(cfg_.points[v]);
    const int sv = determinant_sign(m);
    for (int x : elements_of(body & ~g)) {
      m.back() = cfg_.points[x];
      const int sx = determinant_sign(m);
      if (sx != 0) return sv != 0 && sv != sx;
    }
    return false;
  }

  const PointConfig& cfg_;
  const LexSignature& sig_;
};

}  // namespace

PointConfig PointConfig::from_affine(const std::vector<RationalVector>& affine) {
  PointConfig cfg;
  for (const RationalVector& p : affine) {
    RationalVector v{Rational(1)};
    v.insert(v.end(), p.begin(), p.end());
    cfg.points.push_back(std::move(v));
  }
  return cfg;
}

std::vector<RationalVector> PointConfig::affine() const {
  std::vector<RationalVector> out;
  for (const RationalVector& p : points) {
    if (p.front() == 0) throw std::invalid_argument("point at infinity has no affine coordinates");
    RationalVector a;
    for (std::size_t i = 1; i < p.size(); ++i) a.push_back(p[i] / p.front());
    out.push_back(std::move(a));
  }
  return out;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

int determinant_sign(const RationalMatrix& m) { return sign_of(determinant(m)); }

PointConfig moment_curve(int n, int rank) {
  PointConfig cfg;
  for (int t = 1; t <= n; ++t) {
    RationalVector v;
    Rational power = 1;
    for (int j = 0; j < rank; ++j) {
      v.push_back(power);
      power *= t;
    }
    cfg.points.push_back(std::move(v));
  }
  return cfg;
}

Chirotope chirotope_of_points(const PointConfig& cfg) {
  const int n = cfg.size();
  const int r = cfg.rank();
  return Chirotope::from_function(n, r, [&](ElementSet basis) {
    const int s = determinant_sign(rows_of(cfg.points, basis));
    if (s == 0)
      throw std::invalid_argument("configuration not in general position: zero minor on {" +
                                  format_set(basis) + "}");
    return static_cast<Sign>(s);
  });
}

RealizedExtension realize_lex_extension(const PointConfig& cfg, const LexSignature& sig,
                                        int max_iterations) {
  const Chirotope target = lex_extend_chirotope(chirotope_of_points(cfg), sig);
  Rational k = 2;
  for (int it = 1; it <= max_iterations; ++it, k *= 2) {
    const Rational eps = 1 / k;
    RationalVector v(cfg.rank(), Rational(0));
    Rational weight = 1;
    for (const LexEntry& e : sig.entries()) {
      for (int j = 0; j < cfg.rank(); ++j) v[j] += weight * e.sign * cfg.points[e.element][j];
      weight *= eps;
    }
    PointConfig out = cfg;
    out.points.push_back(std::move(v));
    bool agrees = false;
    try {
      agrees = chirotope_of_points(out) == target;
    } catch (const std::invalid_argument&) {
      agrees = false;
    }
    if (agrees) return {std::move(out), eps, it};
  }
  throw std::runtime_error("realize_lex_extension: no agreement after " + std::to_string(max_iterations) +
                           " halvings of epsilon");
}

std::string Subdivision::to_string() const {
  std::string out;
  for (ElementSet c : cells) out += format_set(c) + "\n";
  return out;
}

std::vector<ElementSet> hull_facets(const PointConfig& cfg, ElementSet subset) {
  require_affine(cfg);
  return cone_facets(cfg.points, subset);
}

Subdivision lex_subdivision(const PointConfig& cfg, const LexSignature& sig) {
  require_affine(cfg);
  chirotope_of_points(cfg);  // general position
  for (const LexEntry& e : sig.entries())
    if (e.element >= cfg.size()) throw std::invalid_argument("lex_subdivision: signature references a non-point");
  const ElementSet all = full_set(cfg.size());
  if (cardinality(all) > cfg.rank()) {
    ElementSet vertices = 0;
    for (ElementSet f : cone_facets(cfg.points, all)) vertices |= f;
    if (vertices != all) throw std::invalid_argument("lex_subdivision: points are not in convex position");
  }
  Subdivision out{LexSubdivider(cfg, sig).run(all, 0)};
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

LiftedSubdivision lift_and_lower_faces(const PointConfig& cfg, const LexSignature& sig, int max_iterations) {
  require_affine(cfg);
  const int n = cfg.size();
  const int r = cfg.rank();
  std::vector<int> power(n + 1, -1);
  std::vector<int> coefficient(n + 1, 0);
  for (int j = 0; j < sig.length(); ++j) {
    if (sig[j].element >= n) throw std::invalid_argument("lift: signature references a non-point");
    power[sig[j].element] = j;
    coefficient[sig[j].element] = -sig[j].sign;
  }
  power[n] = 0;
  coefficient[n] = 1;

  // Limit sign as eps -> 0 of every maximal minor. The determinant is linear
  // in the lift column, so expand along it and keep the lowest power of eps.
  std::vector<int> limit_signs;
  std::vector<ElementSet> bases;
  for_each_subset(n + 1, r + 1, [&](ElementSet basis) {
    std::map<int, Rational> poly;
    const std::vector<int> rows = elements_of(basis);
    for (std::size_t pos = 0; pos < rows.size(); ++pos) {
      const int i = rows[pos];
      if (power[i] < 0) continue;
      RationalMatrix m;
      for (int other : rows)
        if (other != i) {
          RationalVector v = other == n ? RationalVector(r, Rational(0)) : cfg.points[other];
          m.push_back(std::move(v));
        }
      const int parity = static_cast<int>(pos + r) & 1;
      Rational term = determinant(m) * coefficient[i];
      poly[power[i]] += parity ? Rational(-term) : term;
    }
    int s = 0;
    for (const auto& [p, c] : poly)
      if (c != 0) {
        s = sign_of(c);
        break;
      }
    limit_signs.push_back(s);
    bases.push_back(basis);
  });

  Rational k = 2;
  for (int it = 1; it <= max_iterations; ++it, k *= 2) {
    const Rational eps = 1 / k;
    std::vector<RationalVector> rows;
    for (int i = 0; i < n; ++i) {
      RationalVector v = cfg.points[i];
      Rational lift = 0;
      if (power[i] >= 0) {
        lift = coefficient[i];
        for (int p = 0; p < power[i]; ++p) lift *= eps;
      }
      v.push_back(lift);
      rows.push_back(std::move(v));
    }
    RationalVector apex(r + 1, Rational(0));
    apex.back() = 1;
    rows.push_back(apex);
    bool certified = true;
    for (std::size_t b = 0; b < bases.size() && certified; ++b)
      certified = determinant_sign(rows_of(rows, bases[b])) == limit_signs[b];
    if (!certified) continue;
    LiftedSubdivision out;
    out.epsilon = eps;
    for (ElementSet f : cone_facets(rows, full_set(n + 1))) {
      if (contains(f, n)) out.apex_facets.push_back(f & ~singleton(n));
      else out.lower.cells.push_back(f);
    }
    std::sort(out.lower.cells.begin(), out.lower.cells.end());
    std::sort(out.apex_facets.begin(), out.apex_facets.end());
    return out;
  }
  throw std::runtime_error("lift_and_lower_faces: epsilon not certified after " +
                           std::to_string(max_iterations) + " halvings");
}

namespace {

// Pulling triangulation of the face g (k vertices per simplex), where the
// facets of g are the inclusion-maximal g & F over hull facets F not containing g.
void pull_triangulate(const std::vector<ElementSet>& hull, ElementSet g, int k, std::vector<ElementSet>& out) {
  if (cardinality(g) == k) {
    out.push_back(g);
    return;
  }
  std::vector<ElementSet> parts;
  for (ElementSet f : hull)
    if (g & ~f) parts.push_back(g & f);
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  const int w = lowest_element(g);
  for (ElementSet r : parts) {
    if (contains(r, w)) continue;
    const bool maximal = std::none_of(parts.begin(), parts.end(), [&](ElementSet o) { return o != r && (o & r) == r; });
    if (!maximal) continue;
    std::vector<ElementSet> sub;
    pull_triangulate(hull, r, k - 1, sub);
    for (ElementSet simplex : sub) out.push_back(simplex | singleton(w));
  }
}

}  // namespace

Rational normalized_volume(const PointConfig& cfg, ElementSet subset) {
  require_affine(cfg);
  std::vector<ElementSet> simplices;
  pull_triangulate(cone_facets(cfg.points, subset), subset, cfg.rank(), simplices);
  Rational total = 0;
  for (ElementSet s : simplices) total += abs(determinant(rows_of(cfg.points, s)));
  return total;
}

RationalVector random_sphere_point(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-24, 24);
  std::uniform_int_distribution<int> den(1, 12);
  RationalVector y;
  Rational norm2 = 0;
  for (int i = 0; i + 1 < d; ++i) {
    y.emplace_back(num(rng), den(rng));
    norm2 += y.back() * y.back();
  }
  RationalVector p;
  for (const Rational& yi : y) p.push_back(2 * yi / (norm2 + 1));
  p.push_back((norm2 - 1) / (norm2 + 1));
  return p;
}

PointConfig random_convex_config(int n, int d, std::mt19937_64& rng) {
  if (d < 2) throw std::invalid_argument("random_convex_config: dimension must be at least 2");
  while (true) {
    std::vector<RationalVector> pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_sphere_point(d, rng));
    PointConfig cfg = PointConfig::from_affine(pts);
    try {
      chirotope_of_points(cfg);
      return cfg;
    } catch (const std::invalid_argument&) {
    }
  }
}

PointConfig random_general_vectors(int n, int rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-9, 9);
  while (true) {
    PointConfig cfg;
    for (int i = 0; i < n; ++i) {
      RationalVector v;
      for (int j = 0; j < rank; ++j) v.emplace_back(entry(rng));
      cfg.points.push_back(std::move(v));
    }
    try {
      chirotope_of_points(cfg);
      return cfg;
    } catch (const std::invalid_argument&) {
    }
  }
}

}  // namespace neighborly

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "neighborly/polytope.hpp"

namespace neighborly {

namespace {

constexpr int kLabelBits = 5;
constexpr int kMaxFacetSize = 12;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class Search {
 public:
  explicit Search(const FacetList& fl) : n_(fl.n), facets_(fl.facets) {
    incident_.assign(n_, {});
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      for (int v : elements_of(facets_[i])) {
        incident_[v].push_back(static_cast<int>(i));
        members_.push_back(v);
      }
      offsets_.push_back(static_cast<int>(members_.size()));
    }
    facet_hash_.resize(facets_.size());
    keys_.resize(n_);
  }

  CombType run() {
    std::vector<int> colors(n_, 0);
    refine(colors);
    descend(colors);
    CombType t;
    t.n = n_;
    t.canonical = best_;
    t.automorphisms = hits_;
    return t;
  }

 private:
  static int count_cells(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  // Refinement of an ordered vertex partition by hashed incidence counts.
  // Each vertex keeps its old color as the primary key, so the partition
  // only gets finer; the new cell order depends only on label-invariant
  // data, so the result commutes with relabeling.
  void refine(std::vector<int>& colors) {
    int cells = count_cells(colors);
    while (cells < n_) {
      int begin = 0;
      for (std::size_t i = 0; i < facets_.size(); ++i) {
        std::uint64_t h = 0;
        for (int k = begin; k < offsets_[i]; ++k) h += mix(static_cast<std::uint64_t>(colors[members_[k]]));
        facet_hash_[i] = mix(h);
        begin = offsets_[i];
      }
      for (int v = 0; v < n_; ++v) {
        std::uint64_t h = 0;
        for (int f : incident_[v]) h += facet_hash_[f];
        keys_[v] = {colors[v], mix(h), v};
      }
      std::sort(keys_.begin(), keys_.end(), [](const Key& a, const Key& b) {
        return a.color != b.color ? a.color < b.color : a.hash < b.hash;
      });
      int now = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && (keys_[i].color != keys_[i - 1].color || keys_[i].hash != keys_[i - 1].hash)) ++now;
        colors[keys_[i].vertex] = now;
      }
      ++now;
      if (now == cells) return;
      cells = now;
    }
  }

  void descend(const std::vector<int>& colors) {
    const int cells = count_cells(colors);
    if (cells == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<int> next(n_);
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      for (int u = 0; u < n_; ++u) {
        if (colors[u] < target) next[u] = colors[u];
        else if (u == v) next[u] = target;
        else next[u] = colors[u] + 1;
      }
      refine(next);
      descend(next);
    }
  }

  void leaf(const std::vector<int>& labels) {
    form_.clear();
    int begin = 0;
    std::array<int, kMaxFacetSize> buf{};
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      const int len = offsets_[i] - begin;
      for (int k = 0; k < len; ++k) buf[k] = labels[members_[begin + k]] + 1;
      std::sort(buf.begin(), buf.begin() + len);
      std::uint64_t code = 0;
      for (int k = 0; k < len; ++k) code = (code << kLabelBits) | static_cast<std::uint64_t>(buf[k]);
      form_.push_back(code);
      begin = offsets_[i];
    }
    std::sort(form_.begin(), form_.end());
    if (hits_ == 0 || form_ < best_) {
      best_ = form_;
      hits_ = 1;
    } else if (form_ == best_) {
      ++hits_;
    }
  }

  struct Key {
    int color = 0;
    std::uint64_t hash = 0;
    int vertex = 0;
  };

  int n_;
  std::vector<ElementSet> facets_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> members_;
  std::vector<int> offsets_;
  std::vector<std::uint64_t> facet_hash_;
  std::vector<Key> keys_;
  std::vector<std::uint64_t> form_;
  std::vector<std::uint64_t> best_;
  std::uint64_t hits_ = 0;
};

}  // namespace

CombType canonical_type(const FacetList& fl) {
  if (fl.n < 0 || fl.n >= (1 << kLabelBits)) throw std::invalid_argument("canonical_type: too many vertices");
  for (ElementSet f : fl.facets) {
    if (cardinality(f) > kMaxFacetSize) throw std::invalid_argument("canonical_type: facet too large");
    if (f & ~full_set(fl.n)) throw std::invalid_argument("canonical_type: facet outside vertex set");
  }
  if (fl.n == 0) return CombType{0, std::vector<std::uint64_t>(fl.facets.size(), 0), 1};
  return Search(fl).run();
}

FacetList CombType::facet_list() const {
  FacetList fl;
  fl.n = n;
  for (std::uint64_t code : canonical) {
    ElementSet f = 0;
    for (; code != 0; code >>= kLabelBits) f |= singleton(static_cast<int>(code & 31U) - 1);
    fl.facets.push_back(f);
  }
  std::sort(fl.facets.begin(), fl.facets.end());
  return fl;
}

std::string CombType::text() const { return face_lattice_text(facet_list()); }

std::size_t CombTypeHash::operator()(const CombType& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.n) * 0x9E3779B97F4A7C15ULL;
  for (std::uint64_t c : t.canonical) h ^= c + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace neighborly

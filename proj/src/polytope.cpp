#include "neighborly/polytope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace neighborly {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

ElementSet parse_vertex_list(const std::string& text) {
  ElementSet s = 0;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) throw std::invalid_argument("flag: empty vertex label");
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size() || v < 0 || v >= kMaxElements)
      throw std::invalid_argument("flag: bad vertex label '" + token + "'");
    s |= singleton(v);
  }
  return s;
}

}  // namespace

Flag Flag::parse(const std::string& text) {
  Flag flag;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '<')) {
    part = trim(part);
    if (part.empty()) throw std::invalid_argument("flag: empty face");
    const ElementSet face = parse_vertex_list(part);
    if (!flag.faces.empty() && (face & flag.faces.back()) != flag.faces.back())
      throw std::invalid_argument("flag: faces must be nested");
    if (!flag.faces.empty() && face == flag.faces.back())
      throw std::invalid_argument("flag: faces must be strictly nested");
    flag.faces.push_back(face);
    flag.roles.push_back(FaceRole::extra);
  }
  if (flag.faces.empty()) throw std::invalid_argument("flag: no faces");
  return flag;
}

std::string Flag::to_string() const {
  std::string out;
  for (ElementSet f : faces) {
    if (!out.empty()) out += " < ";
    out += format_set(f);
  }
  return out;
}

bool is_acyclic(const Chirotope& chi) {
  const int r = chi.rank();
  // A positive circuit X on S = {s_0 < ... < s_r} has X(s_i) = (-1)^i chi(S \ s_i).
  bool acyclic = true;
  for_each_subset(chi.size(), r + 1, [&](ElementSet s) {
    if (!acyclic) return;
    int first = 0;
    int i = 0;
    for (ElementSet rest = s; rest != 0; rest &= rest - 1, ++i) {
      const int e = lowest_element(rest);
      const int x = chi(s & ~singleton(e)) * ((i & 1) ? -1 : 1);
      if (first == 0) first = x;
      else if (x != first) return;
    }
    acyclic = false;
  });
  return acyclic;
}

bool is_face(const Chirotope& chi, ElementSet subset) {
  if (subset & ~chi.ground()) throw std::invalid_argument("is_face: subset outside ground set");
  if (cardinality(subset) >= chi.rank())
    throw std::invalid_argument("is_face: subset must be smaller than the rank");
  return is_acyclic(contraction(chi, subset));
}

FacetList facets(const Chirotope& chi) {
  FacetList out;
  out.n = chi.size();
  if (chi.rank() == 0) return out;
  for_each_subset(chi.size(), chi.rank() - 1, [&](ElementSet h) {
    const SignedSet c = cocircuit_of(chi, h);
    if (c.plus == 0 || c.minus == 0) out.facets.push_back(h);
  });
  return out;
}

bool is_neighborly(const Chirotope& chi) {
  if (!is_acyclic(chi)) return false;
  const int m = (chi.rank() - 1) / 2;
  if (m == 0) return true;
  // Uniform acyclic means simplicial: a set of fewer than rank elements is a
  // face iff some facet contains it, and faces are closed under subsets.
  std::vector<bool> covered(binomial(chi.size(), m), false);
  for (ElementSet f : facets(chi).facets) {
    const std::vector<int> verts = elements_of(f);
    for_each_subset(static_cast<int>(verts.size()), m, [&](ElementSet local) {
      ElementSet r = 0;
      for (ElementSet rest = local; rest != 0; rest &= rest - 1) r |= singleton(verts[lowest_element(rest)]);
      covered[colex_rank(r)] = true;
    });
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

int discrepancy(const Chirotope& chi) {
  int worst = 0;
  for (const SignedSet& c : cocircuits(chi))
    worst = std::max(worst, std::abs(cardinality(c.plus) - cardinality(c.minus)));
  return worst;
}

bool is_balanced(const Chirotope& chi) {
  const int support = chi.size() - chi.rank() + 1;
  const int lo = support / 2;
  const int hi = (support + 1) / 2;
  for (const SignedSet& c : cocircuits(chi)) {
    for (int part : {cardinality(c.plus), cardinality(c.minus)})
      if (part < lo || part > hi) return false;
  }
  return true;
}

Classification classify(const Chirotope& chi) {
  Classification c;
  c.acyclic = is_acyclic(chi);
  c.neighborly = c.acyclic && is_neighborly(chi);
  c.balanced = is_balanced(chi);
  c.discrepancy = discrepancy(chi);
  return c;
}

bool is_universal_face(const Chirotope& chi, ElementSet face) {
  return is_face(chi, face) && is_neighborly(contraction(chi, face));
}

std::vector<ElementSet> universal_faces(const Chirotope& chi, int size) {
  if (size < 0 || size >= chi.rank()) throw std::invalid_argument("universal_faces: size out of range");
  std::vector<ElementSet> out;
  for_each_subset(chi.size(), size, [&](ElementSet f) {
    if (is_universal_face(chi, f)) out.push_back(f);
  });
  return out;
}

std::vector<Flag> universal_flags(const Chirotope& chi) {
  const int m = (chi.rank() - 1) / 2;
  std::vector<Flag> out;
  if (m <= 0) {
    out.push_back(Flag{});
    return out;
  }
  for (ElementSet edge : universal_faces(chi, 2)) {
    const Minor quotient = minor(chi, 0, edge);
    for (const Flag& sub : universal_flags(quotient.result)) {
      Flag flag;
      flag.faces.push_back(edge);
      for (ElementSet f : sub.faces) {
        ElementSet lifted = edge;
        for (int e : elements_of(f)) lifted |= singleton(quotient.survivors[e]);
        flag.faces.push_back(lifted);
      }
      flag.roles.assign(flag.faces.size(), FaceRole::universal);
      out.push_back(std::move(flag));
    }
  }
  return out;
}

std::string face_lattice_text(const FacetList& fl) {
  std::vector<std::vector<int>> rows;
  for (ElementSet f : fl.facets) rows.push_back(elements_of(f));
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

FacetList parse_face_lattice(const std::string& text, int n) {
  FacetList fl;
  fl.n = n;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (trim(line).empty()) continue;
    std::stringstream ls(line);
    ElementSet f = 0;
    int v;
    while (ls >> v) {
      if (v < 0 || v >= n) throw std::invalid_argument("face lattice: vertex out of range");
      f |= singleton(v);
    }
    fl.facets.push_back(f);
  }
  std::sort(fl.facets.begin(), fl.facets.end());
  return fl;
}

}  // namespace neighborly

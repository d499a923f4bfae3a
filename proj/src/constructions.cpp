#include "neighborly/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "neighborly/realization.hpp"

namespace neighborly {

namespace {

int index_in(const std::vector<int>& survivors, int label) {
  auto it = std::find(survivors.begin(), survivors.end(), label);
  return it == survivors.end() ? -1 : static_cast<int>(it - survivors.begin());
}

// rhs_to_lhs[j] is the label in `lhs` of element j of `rhs`.
bool matches(const Chirotope& lhs, const Chirotope& rhs, const std::vector<int>& rhs_to_lhs) {
  if (lhs.size() != rhs.size() || lhs.rank() != rhs.rank()) return false;
  for (int v : rhs_to_lhs)
    if (v < 0) return false;
  return relabel_reorient(rhs, rhs_to_lhs).same_oriented_matroid(lhs);
}

LexSignature default_signature(int r) {
  std::vector<LexEntry> entries;
  for (int i = 0; i < r; ++i) entries.push_back({i, 1});
  return LexSignature(entries);
}

void check_nested(const Flag& flag) {
  for (std::size_t i = 1; i < flag.faces.size(); ++i)
    if ((flag.faces[i - 1] & ~flag.faces[i]) != 0 || flag.faces[i - 1] == flag.faces[i])
      throw std::invalid_argument("flag faces must be strictly nested");
}

}  // namespace

Chirotope stc(int r) {
  if (r < 1) throw std::invalid_argument("stc: rank must be at least 1");
  PointConfig cfg;
  for (int i = 0; i < r; ++i) {
    RationalVector v(r, Rational(0));
    v[i] = 1;
    cfg.points.push_back(std::move(v));
  }
  cfg.points.push_back(RationalVector(r, Rational(-1)));
  return chirotope_of_points(cfg);
}

Chirotope cyclic_polytope(int n, int d) {
  if (d < 1 || n < d + 1) throw std::invalid_argument("cyclic_polytope: need n >= d+1 >= 2");
  return Chirotope::alternating(n, d + 1);
}

FlagStructure analyze_flag(const Chirotope& chi, const Flag& flag) {
  check_nested(flag);
  FlagStructure out;
  out.annotated = flag;
  out.annotated.roles.assign(flag.faces.size(), FaceRole::extra);
  const int m = (chi.rank() - 1) / 2;
  auto position = [&](ElementSet face) {
    auto it = std::find(flag.faces.begin(), flag.faces.end(), face);
    return it == flag.faces.end() ? -1 : static_cast<int>(it - flag.faces.begin());
  };
  ElementSet previous = 0;
  out.has_universal_subflag = true;
  for (int j = 1; j <= m; ++j) {
    auto it = std::find_if(flag.faces.begin(), flag.faces.end(),
                           [&](ElementSet f) { return cardinality(f) == 2 * j; });
    if (it == flag.faces.end() || (*it & previous) != previous || !is_universal_face(chi, *it)) {
      out.has_universal_subflag = false;
      break;
    }
    out.universal.push_back(*it);
    out.annotated.roles[it - flag.faces.begin()] = FaceRole::universal;
    const std::vector<int> fresh = elements_of(*it & ~previous);
    int x = fresh[0], y = fresh[1];
    bool split = false;
    if (int pos = position(previous | singleton(fresh[0])); pos >= 0) {
      split = true;
      out.annotated.roles[pos] = FaceRole::split;
    } else if (int pos2 = position(previous | singleton(fresh[1])); pos2 >= 0) {
      split = true;
      std::swap(x, y);
      out.annotated.roles[pos2] = FaceRole::split;
    }
    out.x.push_back(x);
    out.y.push_back(y);
    out.split.push_back(split);
    previous = *it;
  }
  if (!out.has_universal_subflag) {
    out.universal.clear();
    out.x.clear();
    out.y.clear();
    out.split.clear();
    out.annotated.roles.assign(flag.faces.size(), FaceRole::extra);
  }
  return out;
}

LexSignature sewing_signature(const Chirotope& chi, const Flag& flag) {
  check_nested(flag);
  std::vector<LexEntry> entries;
  ElementSet previous = 0;
  Sign sign = 1;
  for (ElementSet face : flag.faces) {
    for (int e : elements_of(face & ~previous)) entries.push_back({e, sign});
    previous = face;
    sign = static_cast<Sign>(-sign);
  }
  for (int e : elements_of(chi.ground() & ~previous)) entries.push_back({e, sign});
  entries.resize(std::min<std::size_t>(entries.size(), chi.rank()));
  return LexSignature(entries);
}

ExtensionResult sew(const Chirotope& chi, const Flag& flag) {
  for (ElementSet face : flag.faces) {
    if (face & ~chi.ground()) throw std::invalid_argument("sew: flag face outside the ground set");
    if (cardinality(face) >= chi.rank() || !is_face(chi, face))
      throw std::invalid_argument("sew: {" + format_set(face) + "} is not a proper face");
  }
  return lex_extend(chi, sewing_signature(chi, flag));
}

std::vector<ElementSet> facets_beyond(const Chirotope& chi, const Flag& flag) {
  check_nested(flag);
  const FacetList all = facets(chi);
  auto containing = [&](ElementSet t) {
    std::vector<ElementSet> out;
    for (ElementSet f : all.facets)
      if ((f & t) == t) out.push_back(f);
    return out;
  };
  if (flag.faces.empty()) return {};
  std::vector<ElementSet> result = containing(flag.faces.back());
  for (int j = static_cast<int>(flag.faces.size()) - 2; j >= 0; --j) {
    std::vector<ElementSet> fj = containing(flag.faces[j]);
    std::vector<ElementSet> next;
    std::set_difference(fj.begin(), fj.end(), result.begin(), result.end(), std::back_inserter(next));
    result = std::move(next);
  }
  return result;
}

UniversalPropagation propagate_universal(const Chirotope& chi, const Flag& flag) {
  const FlagStructure fs = analyze_flag(chi, flag);
  if (!fs.has_universal_subflag) throw std::invalid_argument("propagate_universal: flag has no universal subflag");
  const Chirotope sewn = sew(chi, flag).extended;
  const ElementSet p = singleton(chi.size());
  const int m = static_cast<int>(fs.universal.size());
  // Non-split faces among T_{i+1}..T_j.
  auto unsplit_between = [&](int i, int j) {
    int c = 0;
    for (int l = i + 1; l <= j; ++l) c += fs.split[l] ? 0 : 1;
    return c;
  };
  UniversalPropagation out;
  auto add = [&](ElementSet f) {
    if (std::find(out.faces.begin(), out.faces.end(), f) == out.faces.end()) out.faces.push_back(f);
  };
  for (int i = 0; i < m; ++i)
    if (unsplit_between(-1, i) % 2 == 0) add(fs.universal[i]);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const bool even = unsplit_between(i, j) % 2 == 0;
      if (fs.split[i] ? !even : even) add((fs.universal[j] & ~singleton(fs.x[i])) | p);
      if (even) add((fs.universal[j] & ~singleton(fs.y[i])) | p);
    }
  for (ElementSet f : out.faces)
    if (!is_universal_face(sewn, f)) out.failures.push_back(f);
  return out;
}

LexSignature GaleStep::q_signature(int p_label) const {
  std::vector<LexEntry> entries{{p_label, -1}};
  for (int i = 0; i + 1 < p_signature.length(); ++i) entries.push_back({p_signature[i].element, -1});
  return LexSignature(entries);
}

Chirotope gale_double_extension(const Chirotope& m, const GaleStep& step) {
  const Chirotope with_p = lex_extend_chirotope(m, step.p_signature);
  return lex_extend_chirotope(with_p, step.q_signature(m.size()));
}

Chirotope gale_sew(const Chirotope& m, const GaleStep& step) {
  if (!is_balanced(m)) throw std::invalid_argument("gale_sew: input matroid is not balanced");
  return gale_double_extension(m, step);
}

namespace {

// Step on M / a_1 from the contraction formula: [a_2^{-s_1 s_2}, ..., a_r^{-s_1 s_r}].
GaleStep contracted_step(const GaleStep& step, const std::vector<int>& survivors) {
  const LexSignature& sig = step.p_signature;
  std::vector<LexEntry> entries;
  for (int i = 1; i < sig.length(); ++i)
    entries.push_back({index_in(survivors, sig[i].element), static_cast<Sign>(-sig[0].sign * sig[i].sign)});
  return GaleStep{LexSignature(entries)};
}

// Compares lhs (a minor of M[p][q]) against M'[p'][q'], where the rhs labels
// are first mapped to labels of M[p][q] by `rhs_to_original`.
bool compare_minor(const Minor& lhs, const Chirotope& rhs, const std::vector<int>& rhs_to_original) {
  std::vector<int> map;
  for (int label : rhs_to_original) map.push_back(index_in(lhs.survivors, label));
  return matches(lhs.result, rhs, map);
}

}  // namespace

IdentityReport gale_quotient_check(const Chirotope& m, const GaleStep& step) {
  const int n = m.size();
  const int r = m.rank();
  if (r < 2) throw std::invalid_argument("gale_quotient_check: rank must be at least 2");
  const Chirotope full = gale_double_extension(m, step);
  const int a1 = step.p_signature[0].element;
  const Minor base = minor(m, 0, singleton(a1));
  const GaleStep reduced = contracted_step(step, base.survivors);
  const Chirotope rhs = gale_double_extension(base.result, reduced);
  std::vector<int> to_original = base.survivors;
  to_original.push_back(a1);  // p'
  to_original.push_back(n);   // q' plays p
  IdentityReport report;
  report.checks.push_back({"contract q", compare_minor(minor(full, 0, singleton(n + 1)), rhs, to_original)});
  return report;
}

IdentityReport gale_order_check(const Chirotope& m, const GaleStep& step) {
  const int n = m.size();
  const LexSignature& sig = step.p_signature;
  const Chirotope lhs = gale_double_extension(m, step);
  IdentityReport report;

  // p' = all signs reversed; phi swaps p and q.
  {
    const Chirotope rhs = gale_double_extension(m, GaleStep{sig.reversed_signs()});
    std::vector<int> map(n + 2);
    for (int e = 0; e < n; ++e) map[e] = e;
    map[n] = n + 1;
    map[n + 1] = n;
    report.checks.push_back({"swap p and q", matches(lhs, rhs, map)});
  }
  // p'' = [a_1^+, a_2^{-s_1 s_2}, ...]; psi moves a_1 into the new pair.
  {
    std::vector<LexEntry> entries{{sig[0].element, 1}};
    for (int i = 1; i < sig.length(); ++i)
      entries.push_back({sig[i].element, static_cast<Sign>(-sig[0].sign * sig[i].sign)});
    const Chirotope rhs = gale_double_extension(m, GaleStep{LexSignature(entries)});
    // map[x] = image in rhs of element x of lhs; matches() wants rhs -> lhs.
    const int a1 = sig[0].element;
    std::vector<int> psi(n + 2);
    for (int e = 0; e < n + 2; ++e) psi[e] = e;
    psi[a1] = n;
    if (sig[0].sign > 0) {
      psi[n] = a1;
      psi[n + 1] = n + 1;
    } else {
      psi[n] = n + 1;
      psi[n + 1] = a1;
    }
    std::vector<int> inverse(n + 2);
    for (int e = 0; e < n + 2; ++e) inverse[psi[e]] = e;
    report.checks.push_back({"exchange a_1 into the pair", matches(lhs, rhs, inverse)});
  }
  return report;
}

std::string to_string(GaleDeletionCase c) {
  switch (c) {
    case GaleDeletionCase::second: return "q";
    case GaleDeletionCase::first: return "p";
    case GaleDeletionCase::signature: return "a_i";
    case GaleDeletionCase::other: return "other";
  }
  return "?";
}

GaleDeletionReport gale_deletion_check(const Chirotope& m, const GaleStep& step, int e) {
  const int n = m.size();
  const int r = m.rank();
  if (r < 2) throw std::invalid_argument("gale_deletion_check: rank must be at least 2");
  if (e < 0 || e >= n + 2) throw std::invalid_argument("gale_deletion_check: element out of range");
  const Chirotope full = gale_double_extension(m, step);
  const Minor lhs = minor(full, 0, singleton(e));
  const LexSignature& sig = step.p_signature;
  GaleDeletionReport report;
  std::vector<int> to_original;
  if (e == n || e == n + 1) {
    report.which = e == n + 1 ? GaleDeletionCase::second : GaleDeletionCase::first;
    const int a1 = sig[0].element;
    const Minor base = minor(m, 0, singleton(a1));
    report.base = base.result;
    report.step = contracted_step(step, base.survivors);
    to_original = base.survivors;
    to_original.push_back(a1);
    to_original.push_back(e == n + 1 ? n : n + 1);
  } else {
    report.which = contains(sig.elements(), e) ? GaleDeletionCase::signature : GaleDeletionCase::other;
    const Minor base = minor(m, 0, singleton(e));
    report.base = base.result;
    report.step = GaleStep{restrict_signature(sig, base.survivors).truncated(r - 1)};
    to_original = base.survivors;
    to_original.push_back(n);
    to_original.push_back(n + 1);
  }
  report.ok = compare_minor(lhs, gale_double_extension(report.base, report.step), to_original);
  return report;
}

Chirotope cyclic_dual_extend(const Chirotope& m) {
  std::vector<LexEntry> entries;
  for (int i = 0; i < m.rank(); ++i) entries.push_back({m.size() - 1 - i, -1});
  return lex_extend_chirotope(m, LexSignature(entries));
}

DoubleExtension primal_double_extension(const Chirotope& p, const GaleStep& step) {
  const int n = p.size();
  DoubleExtension out;
  out.result = dual(gale_sew(dual(p), step));
  out.verified = contraction(out.result, singleton(n) | singleton(n + 1)).same_oriented_matroid(p);
  return out;
}

PipelineResult nonrealizable_pipeline(const Chirotope& seed, int target_rank, int target_n) {
  if (seed.rank() != 5) throw std::invalid_argument("pipeline: seed must have rank 5");
  if (target_rank < 5) throw std::invalid_argument("pipeline: target rank must be at least 5");
  if (target_n < target_rank + 5) throw std::invalid_argument("pipeline: need n >= rank + 5");
  if (!is_neighborly(seed)) throw std::invalid_argument("pipeline: seed is not neighborly");
  const int even = target_rank % 2 == 0 ? 1 : 0;
  const int doubles = (target_rank - even - 5) / 2;
  const int sewings = target_n - seed.size() - 2 * doubles - even;
  if (sewings < 0)
    throw std::invalid_argument("pipeline: seed has too many elements for n = " + std::to_string(target_n));

  PipelineResult out;
  Chirotope cur = seed;
  out.stages.push_back({"seed", cur.rank(), cur.size()});
  for (int i = 0; i < sewings; ++i) {
    const std::vector<Flag> flags = universal_flags(cur);
    if (flags.empty()) throw std::runtime_error("pipeline: no universal flag to sew through");
    cur = sew(cur, flags.front()).extended;
    out.stages.push_back({"sew " + flags.front().to_string(), cur.rank(), cur.size()});
  }
  for (int i = 0; i < doubles; ++i) {
    const DoubleExtension ext = primal_double_extension(cur, GaleStep{default_signature(cur.size() - cur.rank())});
    if (!ext.verified) throw std::runtime_error("pipeline: double extension failed its contraction check");
    cur = ext.result;
    out.stages.push_back({"double extension", cur.rank(), cur.size()});
  }
  if (even) {
    const Chirotope m = dual(cur);
    cur = dual(lex_extend_chirotope(m, default_signature(m.rank())));
    out.stages.push_back({"dual extension", cur.rank(), cur.size()});
  }
  if (!is_neighborly(cur)) throw std::runtime_error("pipeline: result is not neighborly");
  out.result = cur;
  return out;
}

}  // namespace neighborly

#include "neighborly/extension.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace neighborly {

LexSignature::LexSignature(std::vector<LexEntry> entries) : entries_(std::move(entries)) {
  ElementSet seen = 0;
  for (const LexEntry& e : entries_) {
    if (e.element < 0 || e.element >= kMaxElements)
      throw std::invalid_argument("signature: element label out of range");
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("signature: signs must be + or -");
    if (contains(seen, e.element))
      throw std::invalid_argument("signature: repeated element " + std::to_string(e.element));
    seen |= singleton(e.element);
  }
}

LexSignature LexSignature::parse(std::string_view text) {
  std::vector<LexEntry> entries;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) return LexSignature{};
  while (true) {
    skip_space();
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("signature: expected element label at offset " + std::to_string(i));
    int element = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      element = element * 10 + (text[i++] - '0');
    Sign sign = 0;
    if (i < text.size() && text[i] == '+') {
      sign = 1;
      ++i;
    } else if (i < text.size() && text[i] == '-') {
      sign = -1;
      ++i;
    } else if (text.substr(i, 3) == "\xE2\x88\x92") {
      sign = -1;
      i += 3;
    } else {
      throw std::invalid_argument("signature: expected + or - after element " + std::to_string(element));
    }
    entries.push_back({element, sign});
    skip_space();
    if (i == text.size()) break;
    if (text[i] != ',') throw std::invalid_argument("signature: expected ',' at offset " + std::to_string(i));
    ++i;
  }
  return LexSignature(std::move(entries));
}

ElementSet LexSignature::elements() const {
  ElementSet s = 0;
  for (const LexEntry& e : entries_) s |= singleton(e.element);
  return s;
}

LexSignature LexSignature::truncated(int k) const {
  std::vector<LexEntry> out(entries_.begin(), entries_.begin() + std::min<int>(k, length()));
  return LexSignature(std::move(out));
}

LexSignature LexSignature::reversed_signs() const {
  std::vector<LexEntry> out = entries_;
  for (LexEntry& e : out) e.sign = static_cast<Sign>(-e.sign);
  return LexSignature(std::move(out));
}

std::string LexSignature::to_string() const {
  std::string out;
  for (const LexEntry& e : entries_) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.element);
    out += e.sign > 0 ? '+' : '-';
  }
  return out;
}

LexSignature restrict_signature(const LexSignature& sig, const std::vector<int>& survivors) {
  std::vector<LexEntry> out;
  for (const LexEntry& e : sig.entries()) {
    auto it = std::find(survivors.begin(), survivors.end(), e.element);
    if (it != survivors.end()) out.push_back({static_cast<int>(it - survivors.begin()), e.sign});
  }
  return LexSignature(std::move(out));
}

Chirotope lex_extend_chirotope(const Chirotope& chi, const LexSignature& sig) {
  const int n = chi.size();
  const int r = chi.rank();
  if (sig.length() != r)
    throw std::invalid_argument("lex_extend: signature length " + std::to_string(sig.length()) +
                                " differs from rank " + std::to_string(r) +
                                " (only full-length signatures give uniform extensions)");
  for (const LexEntry& e : sig.entries())
    if (e.element >= n) throw std::invalid_argument("lex_extend: signature element out of range");
  if (n + 1 > kMaxElements) throw std::invalid_argument("lex_extend: too many elements");
  std::vector<Sign> signs = chi.signs();
  signs.reserve(binomial(n + 1, r));
  // Bases containing the new element n come last in colex order, ordered by
  // the colex order of their remaining (r-1)-sets.
  for_each_subset(n, r - 1, [&](ElementSet h) {
    for (const LexEntry& e : sig.entries()) {
      if (!contains(h, e.element)) {
        signs.push_back(static_cast<Sign>(e.sign * chi.eval_hyperplane(h, e.element)));
        return;
      }
    }
    throw std::logic_error("lex_extend: signature exhausted");
  });
  return Chirotope(n + 1, r, std::move(signs));
}

ExtensionResult lex_extend(const Chirotope& chi, const LexSignature& sig) {
  return {lex_extend_chirotope(chi, sig), chi, sig};
}

std::vector<Sign> signature_of_extension(const Chirotope& chi, const LexSignature& sig) {
  std::vector<Sign> out;
  for (const SignedSet& c : cocircuits(chi)) {
    Sign value = 0;
    for (const LexEntry& e : sig.entries()) {
      if (c(e.element) != 0) {
        value = static_cast<Sign>(e.sign * c(e.element));
        break;
      }
    }
    out.push_back(value);
  }
  return out;
}

bool IdentityReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok; });
}

std::vector<std::string> IdentityReport::failures() const {
  std::vector<std::string> out;
  for (const IdentityCheck& c : checks)
    if (!c.ok) out.push_back(c.name);
  return out;
}

namespace {

// Relabels the right-hand side (whose labels are described by `rhs_to_lhs`)
// into the left-hand side's labels and compares as oriented matroids.
bool isomorphic_via(const Chirotope& lhs, const Chirotope& rhs, const std::vector<int>& rhs_to_lhs) {
  if (lhs.size() != rhs.size() || lhs.rank() != rhs.rank()) return false;
  return relabel_reorient(rhs, rhs_to_lhs).same_oriented_matroid(lhs);
}

// Position of `label` in a survivors list, or -1.
int index_in(const std::vector<int>& survivors, int label) {
  auto it = std::find(survivors.begin(), survivors.end(), label);
  return it == survivors.end() ? -1 : static_cast<int>(it - survivors.begin());
}

}  // namespace

IdentityReport contraction_identities_check(const Chirotope& chi, const LexSignature& sig) {
  const int n = chi.size();
  const int d = chi.rank();
  if (d < 2) throw std::invalid_argument("contraction identities need rank >= 2");
  const Chirotope ext = lex_extend_chirotope(chi, sig);
  const int p = n;
  const int a1 = sig[0].element;
  const Sign s1 = sig[0].sign;
  IdentityReport report;

  // ext / p  ~  (chi / a1)[a_2^{-s1 s2}, ..., a_d^{-s1 sd}], a1 playing the new element.
  {
    const Minor lhs = minor(ext, 0, singleton(p));
    const Minor base = minor(chi, 0, singleton(a1));
    std::vector<LexEntry> entries;
    for (int i = 1; i < d; ++i)
      entries.push_back({index_in(base.survivors, sig[i].element), static_cast<Sign>(-s1 * sig[i].sign)});
    const Chirotope rhs = lex_extend_chirotope(base.result, LexSignature(entries));
    std::vector<int> to_lhs(rhs.size());
    for (int j = 0; j + 1 < rhs.size(); ++j) to_lhs[j] = index_in(lhs.survivors, base.survivors[j]);
    to_lhs[rhs.size() - 1] = index_in(lhs.survivors, a1);
    report.checks.push_back({"contract new element", isomorphic_via(lhs.result, rhs, to_lhs)});
  }

  // ext / a_i = (chi / a_i)[signature without a_i]
  for (int i = 0; i < d; ++i) {
    const int ai = sig[i].element;
    const Minor lhs = minor(ext, 0, singleton(ai));
    const Minor base = minor(chi, 0, singleton(ai));
    const Chirotope rhs = lex_extend_chirotope(base.result, restrict_signature(sig, base.survivors));
    report.checks.push_back({"contract a_" + std::to_string(i + 1), lhs.result.same_oriented_matroid(rhs)});
  }

  // ext / e = (chi / e)[a_1, ..., a_{d-1}] for e outside the signature
  for (int e = 0; e < n; ++e) {
    if (contains(sig.elements(), e)) continue;
    const Minor lhs = minor(ext, 0, singleton(e));
    const Minor base = minor(chi, 0, singleton(e));
    const Chirotope rhs =
        lex_extend_chirotope(base.result, restrict_signature(sig.truncated(d - 1), base.survivors));
    report.checks.push_back({"contract element " + std::to_string(e), lhs.result.same_oriented_matroid(rhs)});
  }

  // chi / a1 = (ext \ p) / a1 = (ext \ a1) / p
  {
    const Chirotope direct = contraction(chi, singleton(a1));
    const Chirotope via_delete_p = minor(ext, singleton(p), singleton(a1)).result;
    const Chirotope via_delete_a1 = minor(ext, singleton(a1), singleton(p)).result;
    report.checks.push_back({"delete new, contract a_1", direct.same_oriented_matroid(via_delete_p)});
    report.checks.push_back({"delete a_1, contract new", direct.same_oriented_matroid(via_delete_a1)});
  }
  return report;
}

}  // namespace neighborly

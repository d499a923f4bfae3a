#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "neighborly/constructions.hpp"
#include "neighborly/enumeration.hpp"
#include "neighborly/io.hpp"
#include "neighborly/realization.hpp"

using namespace neighborly;

namespace {

// Raised when an internal verification fails; the output is still written.
struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  return read_file(path);
}

ElementSet parse_set(const std::string& text) {
  std::vector<int> elements;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.find_first_not_of(" ") == std::string::npos) continue;
    std::size_t used = 0;
    int e = -1;
    try {
      e = std::stoi(tok, &used);
    } catch (const std::exception&) {
    }
    if (e < 0 || e >= kMaxElements || tok.find_first_not_of(" ", used) != std::string::npos)
      throw std::invalid_argument("bad element '" + tok + "' in set '" + text + "'");
    elements.push_back(e);
  }
  return make_set(elements);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string one_line(const CombType& t) {
  std::string out;
  for (ElementSet f : t.facet_list().facets) {
    if (!out.empty()) out += ";";
    out += format_set(f);
  }
  return out;
}

struct Options {
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string input = "-";
  std::string output = "-";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighborly polytopes and oriented matroids"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for randomized choices");
  app.add_option("--jobs", opt.jobs, "Worker threads for enumeration")->check(CLI::Range(1, 256));
  app.add_option("-o,--out", opt.output, "Output file ('-' for stdout)");

  std::string out_text;
  bool failed = false;
  auto chirotope_in = [&] { return parse_chirotope(read_input(opt.input)); };
  auto input_option = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", opt.input, std::string(what) + " file ('-' for stdin)");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate cyclic, stc, moment or random input");
  std::string kind;
  int gen_n = 0, gen_d = 0, gen_r = 0;
  bool gen_points = false;
  gen->add_option("kind", kind, "cyclic | stc | moment | random")
      ->required()
      ->check(CLI::IsMember({"cyclic", "stc", "moment", "random"}));
  gen->add_option("--n", gen_n, "Number of vertices or elements");
  gen->add_option("--d", gen_d, "Polytope dimension");
  gen->add_option("--r", gen_r, "Rank (stc, random)");
  gen->add_flag("--points", gen_points, "moment/random: emit an affine point file instead of a chirotope");
  gen->callback([&] {
    if (kind == "stc") {
      out_text = format_chirotope(stc(gen_r));
    } else if (kind == "cyclic") {
      out_text = format_chirotope(cyclic_polytope(gen_n, gen_d));
    } else if (kind == "moment") {
      const PointConfig cfg = moment_curve(gen_n, gen_d + 1);
      out_text = gen_points ? format_points(cfg) : format_chirotope(chirotope_of_points(cfg));
    } else {
      std::mt19937_64 rng(opt.seed);
      if (gen_points) {
        out_text = format_points(random_convex_config(gen_n, gen_d, rng));
      } else {
        if (gen_r <= 0) throw std::invalid_argument("gen random: --r required");
        out_text = format_chirotope(chirotope_of_points(random_general_vectors(gen_n, gen_r, rng)));
      }
    }
  });

  // extend
  auto* extend = app.add_subcommand("extend", "Lexicographic extension; the new element is labeled n");
  std::string sig_text;
  extend->add_option("--sig", sig_text, "Signature, e.g. 0+,1-,2+")->required();
  input_option(extend, "Chirotope");
  extend->callback([&] { out_text = format_chirotope(lex_extend_chirotope(chirotope_in(), LexSignature::parse(sig_text))); });

  // sew
  auto* sew_cmd = app.add_subcommand("sew", "Sew a new vertex through a flag of faces");
  std::string flag_text;
  bool require_neighborly = false;
  sew_cmd->add_option("--flag", flag_text, "Flag, e.g. '0,1 < 0,1,2,3'")->required();
  sew_cmd->add_flag("--require-neighborly", require_neighborly, "Fail unless the result is neighborly");
  input_option(sew_cmd, "Chirotope");
  sew_cmd->callback([&] {
    const Chirotope sewn = sew(chirotope_in(), Flag::parse(flag_text)).extended;
    out_text = format_chirotope(sewn);
    if (require_neighborly && !is_neighborly(sewn)) throw VerificationFailed("sewn polytope is not neighborly");
  });

  // gale-sew
  auto* gale = app.add_subcommand("gale-sew", "Gale sewing of a balanced matroid: p by --sig, then q");
  gale->add_option("--sig", sig_text, "Signature of p")->required();
  input_option(gale, "Chirotope");
  gale->callback([&] {
    const Chirotope m = chirotope_in();
    const Chirotope g = gale_sew(m, GaleStep{LexSignature::parse(sig_text)});
    out_text = format_chirotope(g);
    if (discrepancy(g) != discrepancy(m)) throw VerificationFailed("discrepancy changed");
  });

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "Dual chirotope");
  input_option(dual_cmd, "Chirotope");
  dual_cmd->callback([&] { out_text = format_chirotope(dual(chirotope_in())); });

  // minor
  auto* minor_cmd = app.add_subcommand("minor", "Deletion and contraction; survivors relabeled in order");
  std::string del_text, con_text;
  minor_cmd->add_option("--delete", del_text, "Elements to delete, e.g. 0,3");
  minor_cmd->add_option("--contract", con_text, "Elements to contract");
  input_option(minor_cmd, "Chirotope");
  minor_cmd->callback([&] {
    out_text = format_chirotope(minor(chirotope_in(), parse_set(del_text), parse_set(con_text)).result);
  });

  // check
  auto* check = app.add_subcommand("check", "Validate and classify a chirotope");
  input_option(check, "Chirotope");
  check->callback([&] {
    const Chirotope chi = chirotope_in();
    const ValidityReport v = validate(chi);
    std::ostringstream out;
    out << "n=" << chi.size() << "\nrank=" << chi.rank() << "\nvalid=" << bool_text(v.ok) << "\n";
    if (!v.ok) {
      out << "violation=" << v.message << "\n";
      out_text = out.str();
      throw VerificationFailed("not a chirotope: " + v.message);
    }
    const Classification c = classify(chi);
    out << "acyclic=" << bool_text(c.acyclic) << "\nneighborly=" << bool_text(c.neighborly)
        << "\nbalanced=" << bool_text(c.balanced) << "\ndiscrepancy=" << c.discrepancy
        << "\nbalanced(dual)=" << bool_text(is_balanced(dual(chi))) << "\n";
    out_text = out.str();
  });

  // faces
  auto* faces = app.add_subcommand("faces", "Facets of an acyclic chirotope, or a face query");
  std::string face_query;
  faces->add_option("--is-face", face_query, "Report whether this vertex set is a face");
  input_option(faces, "Chirotope");
  faces->callback([&] {
    const Chirotope chi = chirotope_in();
    if (!is_acyclic(chi)) throw std::invalid_argument("faces: chirotope is not acyclic");
    if (!face_query.empty()) out_text = "face=" + bool_text(is_face(chi, parse_set(face_query))) + "\n";
    else out_text = face_lattice_text(facets(chi));
  });

  // universal-flags
  auto* uflags = app.add_subcommand("universal-flags", "All universal flags, one per line");
  input_option(uflags, "Chirotope");
  uflags->callback([&] {
    const Chirotope chi = chirotope_in();
    if (!is_acyclic(chi)) throw std::invalid_argument("universal-flags: chirotope is not acyclic");
    const auto flags = universal_flags(chi);
    for (const Flag& f : flags) out_text += f.to_string() + "\n";
    out_text += "count=" + std::to_string(flags.size()) + "\n";
  });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate a family up to combinatorial type");
  std::string family = "G";
  FamilySpec spec;
  bool list = false;
  enumerate->add_option("--family", family, "S | E | O | G")->check(CLI::IsMember({"S", "E", "O", "G"}));
  enumerate->add_option("--d", spec.dim, "Dimension (even)")->required();
  enumerate->add_option("--n", spec.vertices, "Number of vertices")->required();
  enumerate->add_option("--budget", spec.budget, "Extra sewing depth for O");
  enumerate->add_flag("--stop-at-g", spec.stop_at_g, "O: stop once O equals G");
  enumerate->add_flag("--list", list, "Print one canonical type per line before the count");
  enumerate->callback([&] {
    spec.family = parse_family(family);
    spec.jobs = opt.jobs;
    const FamilyResult r = enumerate_family(spec);
    std::ostringstream out;
    if (list)
      for (const CombType& t : r.types) out << one_line(t) << "\n";
    out << r.types.size() << "\n";
    if (!r.note.empty()) out << "# " << r.note << "\n";
    out_text = out.str();
    if (!r.verified) throw VerificationFailed("a family member failed the neighborliness check");
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Lower bounds on labeled neighborly polytopes");
  int b_n = 0, b_d = 0;
  bounds->add_option("--n", b_n, "Number of vertices")->required();
  bounds->add_option("--d", b_d, "Dimension")->required();
  bounds->callback([&] {
    const BoundReport rep = eval_bounds(b_n, b_d);
    out_text = rep.text();
    if (!rep.consistent) throw VerificationFailed("bound formulas are inconsistent");
  });

  // realize
  auto* realize = app.add_subcommand("realize", "Realize a lexicographic extension of a point file");
  std::string emit = "chirotope";
  realize->add_option("--sig", sig_text, "Signature")->required();
  realize->add_option("--emit", emit, "chirotope | points")->check(CLI::IsMember({"chirotope", "points"}));
  input_option(realize, "Point");
  realize->callback([&] {
    const PointConfig cfg = parse_points(read_input(opt.input));
    const LexSignature sig = LexSignature::parse(sig_text);
    const RealizedExtension r = realize_lex_extension(cfg, sig);
    const Chirotope got = chirotope_of_points(r.config);
    out_text = "# epsilon=" + format_rational(r.epsilon) + "\n";
    if (emit == "points") {
      if (r.config.points.back()[0] < 0)
        throw std::invalid_argument("realize: the new vector points away from the affine chart (first sign '-')");
      out_text += format_points(r.config);
    } else {
      out_text += format_chirotope(got);
    }
    if (got != lex_extend_chirotope(chirotope_of_points(cfg), sig))
      throw VerificationFailed("realized chirotope differs from the combinatorial extension");
  });

  // subdivide
  auto* subdivide = app.add_subcommand("subdivide", "Lexicographic subdivision of a point file");
  bool lift = false;
  subdivide->add_option("--sig", sig_text, "Signature")->required();
  subdivide->add_flag("--lift", lift, "Read the cells off the lifted polytope instead");
  input_option(subdivide, "Point");
  subdivide->callback([&] {
    const PointConfig cfg = parse_points(read_input(opt.input));
    const LexSignature sig = LexSignature::parse(sig_text);
    Subdivision s = lift ? lift_and_lower_faces(cfg, sig.reversed_signs()).lower : lex_subdivision(cfg, sig);
    std::sort(s.cells.begin(), s.cells.end());
    out_text = s.to_string();
  });

  // canon
  auto* canon = app.add_subcommand("canon", "Canonical combinatorial type");
  bool facet_input = false;
  int canon_n = -1;
  canon->add_flag("--facets", facet_input, "Input is a facet list rather than a chirotope");
  canon->add_option("--n", canon_n, "Vertex count for --facets input");
  input_option(canon, "Chirotope");
  canon->callback([&] {
    FacetList fl;
    if (facet_input) {
      const std::string text = read_input(opt.input);
      if (canon_n < 0) throw std::invalid_argument("canon --facets needs --n");
      fl = parse_face_lattice(text, canon_n);
    } else {
      const Chirotope chi = chirotope_in();
      if (!is_acyclic(chi)) throw std::invalid_argument("canon: chirotope is not acyclic");
      fl = facets(chi);
    }
    out_text = canonical_type(fl).text();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    failed = true;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    if (opt.output == "-") std::cout << out_text;
    else write_file(opt.output, out_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return failed ? 2 : 0;
}

#include "neighborly/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace neighborly {

namespace {

const std::string_view kUnicodeMinus = "\xE2\x88\x92";

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

// Nonblank lines, trimmed; '#' starts a comment.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_count(const std::string& token, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || v < 0) throw std::invalid_argument(std::string("bad ") + what + " '" + token + "'");
  return v;
}

}  // namespace

std::string format_chirotope(const Chirotope& chi) {
  return std::to_string(chi.size()) + " " + std::to_string(chi.rank()) + "\n" + chi.sign_string() + "\n";
}

Chirotope parse_chirotope(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("chirotope: empty input");
  const auto head = tokens(lines[0]);
  if (head.size() != 2) throw std::invalid_argument("chirotope: first line must be 'n r'");
  const int n = parse_count(head[0], "element count");
  const int r = parse_count(head[1], "rank");
  if (r > n || n > kMaxElements)
    throw std::invalid_argument("chirotope: need r <= n <= " + std::to_string(kMaxElements));
  std::vector<Sign> signs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view s = lines[i];
    while (!s.empty()) {
      if (s.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
        signs.push_back(-1);
        s.remove_prefix(kUnicodeMinus.size());
        continue;
      }
      const char c = s.front();
      if (c == '+') signs.push_back(1);
      else if (c == '-') signs.push_back(-1);
      else if (c != ' ' && c != '\t')
        throw std::invalid_argument(std::string("chirotope: unexpected character '") + c + "' on line " +
                                    std::to_string(i + 1));
      s.remove_prefix(1);
    }
  }
  const std::uint64_t expected = binomial(n, r);
  if (signs.size() != expected)
    throw std::invalid_argument("chirotope: expected " + std::to_string(expected) + " signs, got " +
                                std::to_string(signs.size()));
  return Chirotope(n, r, std::move(signs));
}

Rational parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  auto integer = [&](std::string_view s) {
    std::size_t digits = s.size() - ((!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0);
    if (digits == 0 || s.substr(s.size() - digits).find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("bad rational '" + std::string(token) + "'");
    return boost::multiprecision::cpp_int(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  if (slash == std::string_view::npos) return Rational(integer(token));
  const auto den = integer(token.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  return Rational(integer(token.substr(0, slash)), den);
}

std::string format_rational(const Rational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

std::string format_points(const PointConfig& cfg) {
  for (const auto& p : cfg.points)
    if (p.empty() || p[0] == 0) throw std::invalid_argument("points: configuration is not affine");
  const auto affine = cfg.affine();
  std::ostringstream out;
  out << cfg.size() << " " << (cfg.rank() - 1) << "\n";
  for (const auto& p : affine) {
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? " " : "") << format_rational(p[k]);
    out << "\n";
  }
  return out.str();
}

PointConfig parse_points(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("points: empty input");
  const auto head = tokens(lines[0]);
  if (head.size() != 2) throw std::invalid_argument("points: first line must be 'n d'");
  const int n = parse_count(head[0], "point count");
  const int d = parse_count(head[1], "dimension");
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("points: expected " + std::to_string(n) + " point lines, got " +
                                std::to_string(lines.size() - 1));
  std::vector<RationalVector> affine;
  for (int i = 0; i < n; ++i) {
    const auto t = tokens(lines[i + 1]);
    if (t.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("points: point " + std::to_string(i) + " has " + std::to_string(t.size()) +
                                  " coordinates, expected " + std::to_string(d));
    RationalVector p;
    for (const auto& x : t) p.push_back(parse_rational(x));
    affine.push_back(std::move(p));
  }
  return PointConfig::from_affine(affine);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace neighborly

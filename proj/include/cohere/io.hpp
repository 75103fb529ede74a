#ifndef COHERE_IO_HPP
#define COHERE_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "perm.hpp"
#include "rational.hpp"

// Text formats. Every point label in a file is 1-based.
//
//   group file:   "degree n" then one generator per line, either cycles
//                 "(1,2,3)(4,5)" or images "[2,3,1,5,4]"; '#' starts a comment.
//   vector file:  one integer or fraction per line, or a single braced/bracketed
//                 label list "{1,2,7}" read as a multiset of points.
//   witness file: "[ [ s1, s2, ... ], [ m1, m2, ... ] ]".

namespace cohere::io {

namespace detail {

inline std::string trim(std::string_view s)
{
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<long> parse_int_list(std::string_view body)
{
  std::vector<long> out;
  std::string tok;
  auto flush = [&] {
    auto t = trim(tok);
    tok.clear();
    if (t.empty())
      return;
    try {
      std::size_t used = 0;
      long v = std::stol(t, &used);
      if (used != t.size())
        throw ParseError("bad integer '" + t + "'");
      out.push_back(v);
    } catch (const std::logic_error &) {
      throw ParseError("bad integer '" + t + "'");
    }
  };
  for (char c : body) {
    if (c == ',')
      flush();
    else
      tok.push_back(c);
  }
  flush();
  return out;
}

inline Point to_point(long label, std::size_t n)
{
  if (label < 1 || static_cast<std::size_t>(label) > n)
    throw ParseError("point label " + std::to_string(label) + " outside 1.." + std::to_string(n));
  return static_cast<Point>(label - 1);
}

inline std::string read_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace detail

inline Permutation parse_generator(std::string_view line, std::size_t n)
{
  auto text = detail::trim(line);
  if (text.empty())
    throw ParseError("empty generator");
  if (text.front() == '[') {
    if (text.back() != ']')
      throw ParseError("unterminated image list");
    auto labels = detail::parse_int_list(std::string_view(text).substr(1, text.size() - 2));
    if (labels.size() != n)
      throw ParseError("image list has " + std::to_string(labels.size()) + " entries, expected " +
                       std::to_string(n));
    std::vector<Point> im;
    for (long l : labels)
      im.push_back(detail::to_point(l, n));
    try {
      return Permutation(std::move(im));
    } catch (const Error &e) {
      throw ParseError(e.what());
    }
  }
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + text);
    auto close = text.find(')', pos);
    if (close == std::string::npos)
      throw ParseError("unterminated cycle: " + text);
    auto labels = detail::parse_int_list(std::string_view(text).substr(pos + 1, close - pos - 1));
    std::vector<Point> c;
    for (long l : labels)
      c.push_back(detail::to_point(l, n));
    if (!c.empty())
      cycles.push_back(std::move(c));
    pos = close + 1;
  }
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const Error &e) {
    throw ParseError(e.what());
  }
}

inline GeneratorSet parse_group(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#')
      continue;
    if (!have_degree) {
      std::istringstream hs(t);
      std::string kw;
      long deg = 0;
      if (!(hs >> kw >> deg) || kw != "degree" || deg <= 0)
        throw ParseError("first line must be 'degree n'");
      std::string extra;
      if (hs >> extra)
        throw ParseError("trailing text after degree");
      n = static_cast<std::size_t>(deg);
      have_degree = true;
      continue;
    }
    gens.push_back(parse_generator(t, n));
  }
  if (!have_degree)
    throw ParseError("missing 'degree n' line");
  if (gens.empty())
    gens.push_back(Permutation::identity(n));
  return GeneratorSet(n, std::move(gens));
}

inline GeneratorSet read_group(const std::string &path) { return parse_group(detail::read_file(path)); }

inline std::string format_cycles(const Permutation &p)
{
  std::string out;
  std::vector<bool> done(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (done[i] || p[i] == i)
      continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first)
        out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline std::string format_group(const GeneratorSet &g, std::string_view comment = {})
{
  std::string out;
  if (!comment.empty())
    out += "# " + std::string(comment) + "\n";
  out += "degree " + std::to_string(g.degree()) + "\n";
  for (const auto &p : g.generators())
    out += format_cycles(p) + "\n";
  return out;
}

/// Multiplicity vector of a 1-based label multiset.
inline RationalVector labels_to_vector(const std::vector<long> &labels, std::size_t n)
{
  RationalVector v(n, Rational(0));
  for (long l : labels)
    v[detail::to_point(l, n)] += 1;
  return v;
}

inline RationalVector parse_vector(std::string_view text, std::size_t n)
{
  auto t = detail::trim(text);
  if (!t.empty() && (t.front() == '{' || t.front() == '[')) {
    const char close = t.front() == '{' ? '}' : ']';
    if (t.back() != close)
      throw ParseError("unterminated label list");
    return labels_to_vector(detail::parse_int_list(std::string_view(t).substr(1, t.size() - 2)), n);
  }
  RationalVector v;
  std::istringstream in(t);
  std::string line;
  while (std::getline(in, line)) {
    auto s = detail::trim(line);
    if (s.empty() || s.front() == '#')
      continue;
    v.push_back(parse_rational(s));
  }
  if (v.size() != n)
    throw ParseError("vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  return v;
}

inline RationalVector read_vector(const std::string &path, std::size_t n)
{
  return parse_vector(detail::read_file(path), n);
}

inline std::string format_vector(const RationalVector &v)
{
  std::string out;
  for (const auto &x : v)
    out += to_string(x) + "\n";
  return out;
}

/// Set and multiset of a nonspreading witness, 1-based labels.
struct WitnessLists
{
  std::vector<long> set;
  std::vector<long> multiset;
};

inline WitnessLists parse_witness(std::string_view text)
{
  auto t = detail::trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("witness must be '[ [ ... ], [ ... ] ]'");
  auto inner = std::string_view(t).substr(1, t.size() - 2);
  std::vector<std::vector<long>> lists;
  std::size_t pos = 0;
  while (true) {
    auto open = inner.find('[', pos);
    if (open == std::string_view::npos)
      break;
    auto close = inner.find(']', open);
    if (close == std::string_view::npos)
      throw ParseError("unterminated inner list");
    lists.push_back(detail::parse_int_list(inner.substr(open + 1, close - open - 1)));
    pos = close + 1;
  }
  if (lists.size() != 2)
    throw ParseError("witness must contain exactly two lists");
  return {lists[0], lists[1]};
}

inline WitnessLists read_witness(const std::string &path) { return parse_witness(detail::read_file(path)); }

/// "[ 1, 2, 7 ]"
inline std::string format_label_list(const std::vector<long> &labels)
{
  std::string out = "[ ";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i)
      out += ", ";
    out += std::to_string(labels[i]);
  }
  out += " ]";
  return out;
}

/// Witness line, e.g. "[ [ 1, 2, 7, 8, 10 ], [ 1, 5, 5, 6, ... ] ]".
inline std::string format_witness(const WitnessLists &w)
{
  return "[ " + format_label_list(w.set) + ", " + format_label_list(w.multiset) + " ]\n";
}

/// 1-based sorted labels with multiplicity; entries must be nonnegative integers.
inline std::vector<long> vector_to_labels(const RationalVector &v)
{
  std::vector<long> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i]) || v[i] < 0)
      throw Error("vector entry is not a nonnegative integer");
    for (long k = 0; k < v[i].get_num().get_si(); ++k)
      out.push_back(static_cast<long>(i + 1));
  }
  return out;
}

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
inline std::string fnv1a_hex(std::string_view bytes)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char *digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

} // namespace cohere::io

#endif // COHERE_IO_HPP

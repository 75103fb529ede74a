#ifndef COHERE_PERM_HPP
#define COHERE_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace cohere {

using Point = std::uint32_t;

/// Permutation of {0,...,n-1} stored by images. Products read left to right:
/// (p * q)(i) = q(p(i)).
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images))
  {
    std::vector<bool> seen(images_.size(), false);
    for (Point im : images_) {
      if (im >= images_.size() || seen[im])
        throw Error("images do not form a bijection");
      seen[im] = true;
    }
  }

  static Permutation identity(std::size_t n)
  {
    std::vector<Point> im(n);
    std::iota(im.begin(), im.end(), Point{0});
    Permutation p;
    p.images_ = std::move(im);
    return p;
  }

  /// Builds a permutation from disjoint cycles given with 0-based points.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>> &cycles)
  {
    auto p = identity(n);
    std::vector<bool> moved(n, false);
    for (const auto &c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        Point a = c[k], b = c[(k + 1) % c.size()];
        if (a >= n || b >= n)
          throw IndexOutOfRange("cycle point out of range");
        if (moved[a])
          throw Error("cycles are not disjoint");
        moved[a] = true;
        p.images_[a] = b;
      }
    }
    return p;
  }

  std::size_t degree() const { return images_.size(); }

  Point apply(std::size_t i) const
  {
    if (i >= images_.size())
      throw IndexOutOfRange("point " + std::to_string(i) + " outside degree " +
                            std::to_string(images_.size()));
    return images_[i];
  }

  Point operator[](std::size_t i) const { return images_[i]; }

  const std::vector<Point> &images() const { return images_; }

  Permutation inverse() const
  {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  friend Permutation operator*(const Permutation &p, const Permutation &q)
  {
    Permutation r;
    r.images_.resize(p.images_.size());
    for (std::size_t i = 0; i < p.images_.size(); ++i)
      r.images_[i] = q.images_[p.images_[i]];
    return r;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash
{
  std::size_t operator()(const Permutation &p) const noexcept
  {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// A finitely generated permutation group given by its generators.
class GeneratorSet
{
public:
  GeneratorSet(std::size_t degree, std::vector<Permutation> gens) : degree_(degree), gens_(std::move(gens))
  {
    if (degree_ == 0)
      throw Error("degree must be positive");
    if (gens_.empty())
      gens_.push_back(Permutation::identity(degree_));
    for (const auto &g : gens_)
      if (g.degree() != degree_)
        throw Error("generator degree " + std::to_string(g.degree()) + " differs from " +
                    std::to_string(degree_));
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }

private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
};

/// Blocks ordered by least element; points inside a block ascending.
struct OrbitPartition
{
  std::vector<std::vector<Point>> blocks;
  std::vector<std::size_t> block_of; // point -> block index
};

inline OrbitPartition orbits(const GeneratorSet &g)
{
  const std::size_t n = g.degree();
  OrbitPartition out;
  out.block_of.assign(n, SIZE_MAX);
  std::vector<Point> queue;
  for (Point start = 0; start < n; ++start) {
    if (out.block_of[start] != SIZE_MAX)
      continue;
    const std::size_t id = out.blocks.size();
    queue.assign(1, start);
    out.block_of[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto &gen : g.generators()) {
        Point y = gen[queue[head]];
        if (out.block_of[y] == SIZE_MAX) {
          out.block_of[y] = id;
          queue.push_back(y);
        }
      }
    std::sort(queue.begin(), queue.end());
    out.blocks.push_back(queue);
  }
  return out;
}

inline bool is_transitive(const GeneratorSet &g) { return orbits(g).blocks.size() == 1; }

inline constexpr std::size_t default_enum_cap = 1000000;

/// All group elements by breadth-first closure from the identity. The order is
/// deterministic: BFS order with generators tried in their given order.
inline std::vector<Permutation> enumerate_elements(const GeneratorSet &g, std::size_t cap = default_enum_cap)
{
  std::vector<Permutation> elems{Permutation::identity(g.degree())};
  std::unordered_set<Permutation, PermutationHash> seen{elems.front()};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto &gen : g.generators()) {
      Permutation next = elems[head] * gen;
      if (seen.insert(next).second) {
        if (elems.size() >= cap)
          throw CapExceeded(cap);
        elems.push_back(std::move(next));
      }
    }
  return elems;
}

/// Relation-index matrix of the orbitals, row-major n x n.
/// Class 0 is the diagonal; the others are numbered by least representative pair.
struct OrbitalMatrix
{
  std::size_t n = 0;
  std::size_t classes = 0; // d + 1
  std::vector<std::uint32_t> rel;

  std::uint32_t operator()(std::size_t x, std::size_t y) const { return rel[x * n + y]; }
};

inline OrbitalMatrix orbitals(const GeneratorSet &g)
{
  if (!is_transitive(g))
    throw NotTransitive("group action is not transitive");
  const std::size_t n = g.degree();
  constexpr std::uint32_t unset = UINT32_MAX;
  OrbitalMatrix m{n, 0, std::vector<std::uint32_t>(n * n, unset)};
  std::vector<std::uint64_t> queue;
  // Row-major scan visits the diagonal pair (0,0) first, so the diagonal gets class 0.
  for (std::size_t start = 0; start < n * n; ++start) {
    if (m.rel[start] != unset)
      continue;
    const auto id = static_cast<std::uint32_t>(m.classes++);
    queue.assign(1, start);
    m.rel[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head] / n, y = queue[head] % n;
      for (const auto &gen : g.generators()) {
        const std::size_t cell = static_cast<std::size_t>(gen[x]) * n + gen[y];
        if (m.rel[cell] == unset) {
          m.rel[cell] = id;
          queue.push_back(cell);
        }
      }
    }
  }
  return m;
}

/// Index of the unordered pair {a, b} (a < b) in lexicographic order of (min, max).
inline std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b)
{
  if (a > b)
    std::swap(a, b);
  // pairs starting with 0..a-1 come first
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

inline std::vector<std::pair<Point, Point>> pair_list(std::size_t n)
{
  std::vector<std::pair<Point, Point>> out;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      out.emplace_back(a, b);
  return out;
}

/// The action on unordered pairs, pairs ordered lexicographically by (min, max).
inline GeneratorSet induced_pair_action(const GeneratorSet &g)
{
  const std::size_t n = g.degree();
  if (n < 2)
    throw Error("pair action needs degree at least 2");
  const auto pairs = pair_list(n);
  std::vector<Permutation> gens;
  for (const auto &gen : g.generators()) {
    std::vector<Point> im(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      im[k] = static_cast<Point>(pair_index(n, gen[pairs[k].first], gen[pairs[k].second]));
    gens.emplace_back(std::move(im));
  }
  return GeneratorSet(pairs.size(), std::move(gens));
}

/// Coordinate-wise image v^g, defined by (v^g)[g(i)] = v[i].
template <class T>
std::vector<T> act(const Permutation &g, const std::vector<T> &v)
{
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[g[i]] = v[i];
  return out;
}

inline RationalVector group_average(const GeneratorSet &g, const RationalVector &v,
                                    std::size_t cap = default_enum_cap)
{
  if (v.size() != g.degree())
    throw Error("vector length differs from degree");
  const auto elems = enumerate_elements(g, cap);
  RationalVector acc(v.size(), Rational(0));
  for (const auto &e : elems)
    for (std::size_t i = 0; i < v.size(); ++i)
      acc[e[i]] += v[i];
  const Rational order(static_cast<long>(elems.size()));
  for (auto &x : acc)
    x /= order;
  return acc;
}

/// Multiset { u . v^g : g in G }, as sorted (value, multiplicity) pairs.
inline std::vector<std::pair<Rational, std::size_t>>
orbit_inner_products(const GeneratorSet &g, const RationalVector &u, const RationalVector &v,
                     std::size_t cap = default_enum_cap)
{
  if (u.size() != g.degree() || v.size() != g.degree())
    throw Error("vector length differs from degree");
  const auto elems = enumerate_elements(g, cap);
  std::vector<Rational> values;
  values.reserve(elems.size());
  for (const auto &e : elems) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += u[e[i]] * v[i];
    values.push_back(s);
  }
  std::sort(values.begin(), values.end());
  std::vector<std::pair<Rational, std::size_t>> out;
  for (const auto &x : values) {
    if (!out.empty() && out.back().first == x)
      ++out.back().second;
    else
      out.emplace_back(x, 1);
  }
  return out;
}

} // namespace cohere

#endif // COHERE_PERM_HPP

#ifndef COHERE_CC_HPP
#define COHERE_CC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "perm.hpp"
#include "rational.hpp"

namespace cohere {

/// Homogeneous coherent configuration on n points with classes 0..d.
///
/// Intersection numbers follow the matrix-product convention
///   p_ij^k = #{ z : (x,z) in R_i, (z,y) in R_j }   for (x,y) in R_k,
/// so that A_i A_j = sum_k p_ij^k A_k.
class CoherentConfiguration
{
public:
  struct Product
  {
    std::uint32_t i, j, k;
    std::int64_t p;
  };

  /// Validates axioms (i)-(iv) and computes valencies, converse map and p_ij^k.
  /// Throws AxiomViolation naming the first failing axiom and a witness cell.
  static CoherentConfiguration from_relation_matrix(std::size_t n, std::vector<std::uint32_t> rel)
  {
    if (n == 0 || rel.size() != n * n)
      throw AxiomViolation(2, 0, 0, "relation matrix is not n x n");
    CoherentConfiguration cc;
    cc.n_ = n;
    cc.rel_ = std::move(rel);
    const auto &r = cc.rel_;

    std::uint32_t max_label = 0;
    for (auto c : r)
      max_label = std::max(max_label, c);
    const std::size_t classes = std::size_t(max_label) + 1;

    // (i) the diagonal is exactly class 0
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const bool diag = x == y;
        if (diag && r[x * n + y] != 0)
          throw AxiomViolation(1, x, y, "diagonal cell not in class 0");
        if (!diag && r[x * n + y] == 0)
          throw AxiomViolation(1, x, y, "class 0 occurs off the diagonal");
      }

    // (ii) labels contiguous: every class nonempty
    std::vector<std::size_t> rep(classes, SIZE_MAX);
    for (std::size_t c = 0; c < n * n; ++c)
      if (rep[r[c]] == SIZE_MAX)
        rep[r[c]] = c;
    for (std::size_t i = 0; i < classes; ++i)
      if (rep[i] == SIZE_MAX)
        throw AxiomViolation(2, 0, 0, "class label " + std::to_string(i) + " unused");

    // (iii) converse of each class is a class
    cc.converse_.assign(classes, UINT32_MAX);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto i = r[x * n + y], t = r[y * n + x];
        if (cc.converse_[i] == UINT32_MAX)
          cc.converse_[i] = t;
        else if (cc.converse_[i] != t)
          throw AxiomViolation(3, x, y, "converse of class " + std::to_string(i) + " is not a single class");
      }
    for (std::size_t i = 0; i < classes; ++i)
      if (cc.converse_[cc.converse_[i]] != i)
        throw AxiomViolation(3, rep[i] / n, rep[i] % n, "converse map is not an involution");

    // valencies: row sums constant (implied by (iv) with k = 0, checked here for a clear message)
    cc.valency_.assign(classes, 0);
    for (std::size_t y = 0; y < n; ++y)
      ++cc.valency_[r[y]];
    for (std::size_t x = 1; x < n; ++x) {
      std::vector<std::int64_t> row(classes, 0);
      for (std::size_t y = 0; y < n; ++y)
        ++row[r[x * n + y]];
      for (std::size_t i = 0; i < classes; ++i)
        if (row[i] != cc.valency_[i])
          throw AxiomViolation(4, x, x, "row sums of class " + std::to_string(i) + " differ between rows");
    }

    // (iv) intersection numbers from one representative per class, then
    // constancy over every pair.
    const std::size_t D = classes;
    cc.p_.assign(D * D * D, 0);
    for (std::size_t k = 0; k < D; ++k) {
      const std::size_t x = rep[k] / n, y = rep[k] % n;
      for (std::size_t z = 0; z < n; ++z)
        ++cc.p_[(std::size_t(r[x * n + z]) * D + r[z * n + y]) * D + k];
    }
    std::vector<std::int64_t> count(D * D, 0);
    std::vector<std::size_t> touched;
    touched.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t k = r[x * n + y];
        touched.clear();
        for (std::size_t z = 0; z < n; ++z) {
          const std::size_t ij = std::size_t(r[x * n + z]) * D + r[z * n + y];
          if (count[ij]++ == 0)
            touched.push_back(ij);
        }
        // Both count and p(.,.,k) sum to n, so agreement on touched cells is enough.
        for (auto ij : touched) {
          if (count[ij] != cc.p_[ij * D + k]) {
            for (auto t : touched)
              count[t] = 0;
            throw AxiomViolation(4, x, y,
                                 "p_" + std::to_string(ij / D) + "," + std::to_string(ij % D) + "^" +
                                     std::to_string(k) + " is not constant on class " + std::to_string(k));
          }
        }
        for (auto t : touched)
          count[t] = 0;
      }

    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j)
        for (std::size_t k = 0; k < D; ++k)
          if (auto v = cc.p_[(i * D + j) * D + k])
            cc.products_.push_back({std::uint32_t(i), std::uint32_t(j), std::uint32_t(k), v});
    return cc;
  }

  static CoherentConfiguration from_orbitals(const OrbitalMatrix &m)
  {
    return from_relation_matrix(m.n, m.rel);
  }

  static CoherentConfiguration of_group(const GeneratorSet &g) { return from_orbitals(orbitals(g)); }

  std::size_t n() const { return n_; }
  /// Number of non-identity classes.
  std::size_t d() const { return valency_.size() - 1; }
  /// d + 1
  std::size_t rank() const { return valency_.size(); }

  std::uint32_t operator()(std::size_t x, std::size_t y) const { return rel_[x * n_ + y]; }
  const std::vector<std::uint32_t> &relation_matrix() const { return rel_; }

  const std::vector<std::int64_t> &valencies() const { return valency_; }
  std::int64_t valency(std::size_t i) const { return valency_.at(i); }
  const std::vector<std::uint32_t> &converse() const { return converse_; }

  std::int64_t p(std::size_t i, std::size_t j, std::size_t k) const
  {
    const std::size_t D = rank();
    return p_.at((i * D + j) * D + k);
  }

  /// Nonzero intersection numbers, for sparse products in the adjacency algebra.
  const std::vector<Product> &products() const { return products_; }

  bool is_commutative() const
  {
    const std::size_t D = rank();
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = i + 1; j < D; ++j)
        for (std::size_t k = 0; k < D; ++k)
          if (p(i, j, k) != p(j, i, k))
            return false;
    return true;
  }

  bool is_symmetric() const
  {
    for (std::size_t i = 0; i < converse_.size(); ++i)
      if (converse_[i] != i)
        return false;
    return true;
  }

  /// k_i = <A_i, A_i> = tr(A_i A_i^T) = n * valency_i.
  Rational frobenius_k(std::size_t i) const
  {
    return Rational(static_cast<long>(n_)) * Rational(static_cast<long>(valency_.at(i)));
  }

  /// Dense 0/1 adjacency matrix of class i, row-major.
  std::vector<std::uint8_t> adjacency(std::size_t i) const
  {
    std::vector<std::uint8_t> a(n_ * n_, 0);
    for (std::size_t c = 0; c < n_ * n_; ++c)
      a[c] = rel_[c] == i;
    return a;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> rel_;
  std::vector<std::int64_t> valency_;
  std::vector<std::uint32_t> converse_;
  std::vector<std::int64_t> p_;
  std::vector<Product> products_;
};

/// Partition obtained by merging each nonsymmetric class with its converse.
struct SymmetrisedPartition
{
  std::size_t n = 0;
  std::vector<std::uint32_t> rel;
  /// old class -> new class
  std::vector<std::uint32_t> merged_label;
  bool is_coherent = false;
  /// Present when is_coherent.
  std::optional<CoherentConfiguration> scheme;
  /// Set when not coherent.
  std::string failure;

  std::size_t classes() const { return merged_label.empty() ? 0 : 1 + *std::max_element(merged_label.begin(), merged_label.end()); }
};

/// Symmetric classes keep their relative order; a merged pair takes the
/// smaller original label; labels are then compacted.
inline SymmetrisedPartition symmetrise(const CoherentConfiguration &cc)
{
  SymmetrisedPartition out;
  out.n = cc.n();
  const auto &conv = cc.converse();
  std::vector<std::uint32_t> rep(cc.rank());
  for (std::size_t i = 0; i < cc.rank(); ++i)
    rep[i] = std::min<std::uint32_t>(std::uint32_t(i), conv[i]);
  out.merged_label.assign(cc.rank(), 0);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> compact(cc.rank(), UINT32_MAX);
  for (std::size_t i = 0; i < cc.rank(); ++i) {
    if (compact[rep[i]] == UINT32_MAX)
      compact[rep[i]] = next++;
    out.merged_label[i] = compact[rep[i]];
  }
  out.rel.resize(cc.relation_matrix().size());
  for (std::size_t c = 0; c < out.rel.size(); ++c)
    out.rel[c] = out.merged_label[cc.relation_matrix()[c]];
  try {
    out.scheme = CoherentConfiguration::from_relation_matrix(out.n, out.rel);
    out.is_coherent = true;
  } catch (const AxiomViolation &e) {
    out.is_coherent = false;
    out.failure = e.what();
  }
  return out;
}

inline bool is_stratifiable(const CoherentConfiguration &cc) { return symmetrise(cc).is_coherent; }

/// Sums S_i = sum over (x,y) in R_i of u_x u_y, i.e. u A_i^T u^T for real u.
inline RationalVector pair_sums(const CoherentConfiguration &cc, const RationalVector &u)
{
  const std::size_t n = cc.n();
  if (u.size() != n)
    throw Error("vector length differs from configuration size");
  RationalVector out(cc.rank(), Rational(0));
  RationalVector row(cc.rank());
  for (std::size_t x = 0; x < n; ++x) {
    if (u[x] == 0)
      continue;
    for (auto &r : row)
      r = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (u[y] != 0)
        row[cc(x, y)] += u[y];
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0)
        out[i] += u[x] * row[i];
  }
  return out;
}

/// Mixed sums T_i = sum over (x,y) in R_i of u_x v_y = u A_i v^T.
inline RationalVector pair_sums(const CoherentConfiguration &cc, const RationalVector &u, const RationalVector &v)
{
  const std::size_t n = cc.n();
  if (u.size() != n || v.size() != n)
    throw Error("vector length differs from configuration size");
  RationalVector out(cc.rank(), Rational(0));
  RationalVector row(cc.rank());
  for (std::size_t x = 0; x < n; ++x) {
    if (u[x] == 0)
      continue;
    for (auto &r : row)
      r = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (v[y] != 0)
        row[cc(x, y)] += v[y];
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0)
        out[i] += u[x] * row[i];
  }
  return out;
}

} // namespace cohere

#endif // COHERE_CC_HPP

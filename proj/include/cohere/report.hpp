#ifndef COHERE_REPORT_HPP
#define COHERE_REPORT_HPP

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "cc.hpp"
#include "hierarchy.hpp"
#include "io.hpp"
#include "perm.hpp"

namespace cohere {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string decimal(double x)
{
  if (std::abs(x) < 1e-12)
    x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string complex_string(const Complex &c, double tol)
{
  const double im = std::abs(c.imag()) <= tol ? 0.0 : c.imag();
  if (im == 0.0)
    return decimal(c.real());
  return decimal(c.real()) + (im < 0 ? "-" : "+") + decimal(std::abs(im)) + "i";
}

inline Json idempotents_json(const CentralIdempotentSet &ids)
{
  Json arr = Json::array();
  for (const auto &e : ids.items) {
    Json item;
    Json coeffs = Json::array();
    if (e.exact) {
      item["exact"] = true;
      for (const auto &c : *e.exact)
        coeffs.push_back(to_string(c));
    } else {
      item["exact"] = false;
      item["tol"] = ids.tol;
      for (const auto &c : e.numeric)
        coeffs.push_back(complex_string(c, ids.tol));
    }
    item["coefficients"] = std::move(coeffs);
    arr.push_back(std::move(item));
  }
  return arr;
}

template <class V>
Json int_array(const V &v)
{
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(static_cast<long long>(x));
  return a;
}

} // namespace detail

struct AnalysisOptions
{
  std::uint64_t seed = 0;
  /// Elapsed times make the report run-dependent, so they are opt-in.
  bool timings = false;
};

/// Runs the group -> configuration -> algebra pipeline on the text of a group
/// file. Throws ParseError, NotTransitive, SplitFailure or NonIntegerTrace.
inline Json analysis_report(const std::string &group_text, const AnalysisOptions &opt = {})
{
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };
  const auto t0 = Clock::now();
  const auto g = io::parse_group(group_text);
  const auto cc = CoherentConfiguration::of_group(g);
  const auto t1 = Clock::now();
  const auto sym = symmetrise(cc);
  const auto center = center_basis(cc);
  IdempotentOptions iopt;
  iopt.seed = opt.seed;
  const auto complex_ids = central_primitive_idempotents(cc, iopt);
  const auto rational_ids = rational_central_idempotents(cc, iopt);
  const auto traces = isotypic_dimensions(complex_ids);
  const auto rational_traces = isotypic_dimensions(rational_ids);
  const auto t2 = Clock::now();

  Json r;
  r["group_file_fnv1a"] = io::fnv1a_hex(group_text);
  r["degree"] = cc.n();
  r["rank"] = cc.rank();
  r["classes_excluding_identity"] = cc.d();
  r["valencies"] = detail::int_array(cc.valencies());
  r["converse"] = detail::int_array(cc.converse());
  const bool symmetric = cc.is_symmetric();
  r["flags"] = {{"transitive", true},
                {"generously_transitive", symmetric},
                {"symmetric", symmetric},
                {"commutative", cc.is_commutative()},
                {"stratifiable", sym.is_coherent}};
  Json s;
  s["classes"] = sym.classes();
  s["coherent"] = sym.is_coherent;
  s["merged_label"] = detail::int_array(sym.merged_label);
  if (sym.scheme)
    s["valencies"] = detail::int_array(sym.scheme->valencies());
  r["symmetrisation"] = std::move(s);
  r["center_dimension"] = center.dimension();
  r["isotypic_traces"] = detail::int_array(traces);
  r["rational_traces"] = detail::int_array(rational_traces);
  r["idempotents"] = detail::idempotents_json(complex_ids);
  r["rational_idempotents"] = detail::idempotents_json(rational_ids);
  r["factorisation_complete"] = rational_ids.factorisation_complete;
  r["seed"] = opt.seed;
  if (opt.timings)
    r["elapsed_ms"] = {{"configuration", ms(t0, t1)}, {"algebra", ms(t1, t2)}};
  return r;
}

inline Json certificate_json(const Witness &w)
{
  Json c;
  c["level"] = level_name(w.level);
  c["lambda"] = to_string(w.certificate.lambda);
  c["identity"] = w.certificate.identity;
  c["traces"] = detail::int_array(w.certificate.traces);
  c["mode"] = w.certificate.mode();
  c["u"] = detail::int_array(io::vector_to_labels(w.u));
  Json others = Json::array();
  for (const auto &o : w.others)
    others.push_back(detail::int_array(io::vector_to_labels(o)));
  c["others"] = std::move(others);
  return c;
}

inline Json rejection_json(Level level, const Verdict &v)
{
  Json c;
  c["level"] = level_name(level);
  c["accepted"] = false;
  c["reason"] = reason_name(v.reason);
  c["detail"] = v.detail;
  return c;
}

} // namespace cohere

#endif // COHERE_REPORT_HPP

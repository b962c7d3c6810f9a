#include "macposets/ring_ops.hpp"

#include <algorithm>
#include <set>

#include "macposets/monomial_poset.hpp"

namespace macposets {

namespace {

Polynomial embed(const Polynomial& p, int total_vars, int shift, const Field& field) {
  Polynomial out(total_vars);
  for (const auto& [e, c] : p.terms()) {
    ExponentVec widened(total_vars, 0);
    for (size_t i = 0; i < e.size(); ++i) widened[shift + i] = e[i];
    out.add_term(widened, c, field);
  }
  return out;
}

}  // namespace

RingOpResult ring_fiber_product(const IdealPresentation& a, const IdealPresentation& b) {
  validate_presentation(a);
  validate_presentation(b);
  if (!(a.field == b.field))
    fail(errc::field_mismatch, "both factors must be presented over the same field");

  RingOpResult out;
  out.ring.field = a.field;
  out.ring.vars = a.vars;
  std::set<std::string> taken(a.vars.begin(), a.vars.end());
  for (const auto& v : b.vars) {
    std::string name = v;
    for (int suffix = 1; taken.count(name); ++suffix) name = v + "_" + std::to_string(suffix);
    if (name != v) out.renamed.emplace_back(v, name);
    taken.insert(name);
    out.ring.vars.push_back(name);
  }
  for (const auto& [from, to] : out.renamed)
    out.warnings.push_back("variable '" + from + "' of the second factor renamed to '" + to +
                           "'");

  const int n = static_cast<int>(a.vars.size());
  const int m = static_cast<int>(b.vars.size());
  const int total = n + m;
  for (const auto& g : a.generators) out.ring.generators.push_back(embed(g, total, 0, a.field));
  for (const auto& g : b.generators) out.ring.generators.push_back(embed(g, total, n, a.field));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      ExponentVec cross(total, 0);
      cross[i] = 1;
      cross[n + j] = 1;
      out.ring.generators.push_back(Polynomial::monomial(cross));
    }
  return out;
}

RingOpResult ring_connected_sum(const IdealPresentation& a, const IdealPresentation& b) {
  auto table_a = MonomialClassTable::build(a);
  auto table_b = MonomialClassTable::build(b);
  int sa = socle_class(table_a);  // not_artinian / no_unique_maximum surface here
  int sb = socle_class(table_b);
  const ExponentVec& ma = table_a.classes()[sa].representative;
  const ExponentVec& mb = table_b.classes()[sb].representative;

  RingOpResult out = ring_fiber_product(a, b);
  const int n = static_cast<int>(a.vars.size());
  const int total = static_cast<int>(out.ring.vars.size());
  ExponentVec ea(total, 0), eb(total, 0);
  for (size_t i = 0; i < ma.size(); ++i) ea[i] = ma[i];
  for (size_t i = 0; i < mb.size(); ++i) eb[n + i] = mb[i];
  Polynomial binomial = Polynomial::monomial(ea);
  binomial.add_term(eb, Rational(-1), out.ring.field);
  out.ring.generators.push_back(std::move(binomial));

  if (total_degree(ma) != total_degree(mb))
    out.warnings.push_back("socle degrees differ (" + std::to_string(total_degree(ma)) +
                           " vs " + std::to_string(total_degree(mb)) +
                           "); the relation between socle monomials is not homogeneous");
  return out;
}

}  // namespace macposets

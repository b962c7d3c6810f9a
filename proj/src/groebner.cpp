#include "macposets/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace macposets {

namespace {

ExponentVec lcm_exp(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const ExponentVec& a, const ExponentVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

ExponentVec quotient_exp(const ExponentVec& a, const ExponentVec& b) {
  ExponentVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order, const Field& field,
                       std::vector<Polynomial>* quotients = nullptr) {
  Polynomial rem(f.nvars());
  Polynomial work = f;
  while (!work.is_zero()) {
    auto [le, lc] = work.leading_term(order);
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      const auto& [ge, gc] = basis[i].leading_term(order);
      if (!divides(ge, le)) continue;
      Rational factor = field.div(lc, gc);
      ExponentVec shift = quotient_exp(le, ge);
      work = poly_sub(field, work, poly_mul_term(field, basis[i], shift, factor));
      if (quotients)
        (*quotients)[i] = poly_add(field, (*quotients)[i], Polynomial::monomial(shift, factor));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(le, lc, field);
      work.add_term(le, field.neg(lc), field);
    }
  }
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order,
                        const Field& field) {
  const auto& [fe, fc] = f.leading_term(order);
  const auto& [ge, gc] = g.leading_term(order);
  ExponentVec l = lcm_exp(fe, ge);
  Polynomial a = poly_mul_term(field, f, quotient_exp(l, fe), field.div(Rational(1), fc));
  Polynomial b = poly_mul_term(field, g, quotient_exp(l, ge), field.div(Rational(1), gc));
  return poly_sub(field, a, b);
}

}  // namespace

GroebnerBasis buchberger(const IdealPresentation& ring, MonomialOrder order) {
  validate_presentation(ring);
  const Field& field = ring.field;
  GroebnerBasis gb;
  gb.order = order;
  gb.field = field;
  gb.nvars = static_cast<int>(ring.vars.size());

  std::vector<Polynomial> g;
  for (const auto& gen : ring.generators) {
    auto [e, c] = gen.leading_term(order);
    g.push_back(poly_scale(field, gen, field.div(Rational(1), c)));
  }

  // Pair queue with the coprime criterion and the chain criterion over
  // already-treated pairs.
  std::set<std::pair<int, int>> pending, treated;
  auto add_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) pending.emplace(i, j);
  };
  for (int j = 0; j < static_cast<int>(g.size()); ++j) add_pairs(j);

  auto lt = [&](int i) { return g[i].leading_term(order).first; };

  while (!pending.empty()) {
    // normal selection: smallest lcm degree first
    auto pick = pending.begin();
    int best_deg = total_degree(lcm_exp(lt(pick->first), lt(pick->second)));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      int d = total_degree(lcm_exp(lt(it->first), lt(it->second)));
      if (d < best_deg) {
        best_deg = d;
        pick = it;
      }
    }
    auto [i, j] = *pick;
    pending.erase(pick);
    treated.emplace(i, j);

    ExponentVec lij = lcm_exp(lt(i), lt(j));
    if (coprime(lt(i), lt(j))) continue;
    bool chained = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!divides(lt(k), lij)) continue;
      auto key_ik = std::minmax(i, k);
      auto key_jk = std::minmax(j, k);
      if (treated.count({key_ik.first, key_ik.second}) &&
          treated.count({key_jk.first, key_jk.second}))
        chained = true;
    }
    if (chained) continue;

    Polynomial s = s_polynomial(g[i], g[j], order, field);
    Polynomial r = reduce_full(s, g, order, field);
    if (r.is_zero()) continue;
    auto [e, c] = r.leading_term(order);
    g.push_back(poly_scale(field, r, field.div(Rational(1), c)));
    add_pairs(static_cast<int>(g.size()) - 1);
  }

  // Minimalize: drop elements whose leading term another one divides.
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    const auto lt_i = g[i].leading_term(order).first;
    bool keep = true;
    for (size_t j = 0; j < g.size() && keep; ++j) {
      if (i == j) continue;
      const auto lt_j = g[j].leading_term(order).first;
      if (lt_i == lt_j ? j < i : divides(lt_j, lt_i)) keep = false;
    }
    if (keep) minimal.push_back(g[i]);
  }

  // Interreduce tails.
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce_full(minimal[i], others, order, field);
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_term(order).first, b.leading_term(order).first);
  });
  gb.polys = std::move(minimal);
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return reduce_full(f, gb.polys, gb.order, gb.field);
}

Division divide(const Polynomial& f, const GroebnerBasis& gb) {
  Division out;
  out.quotients.assign(gb.polys.size(), Polynomial(f.nvars()));
  out.remainder = reduce_full(f, gb.polys, gb.order, gb.field, &out.quotients);
  return out;
}

bool is_artinian(const GroebnerBasis& gb) {
  for (int v = 0; v < gb.nvars; ++v) {
    bool found = false;
    for (const auto& p : gb.polys) {
      const auto e = p.leading_term(gb.order).first;
      bool pure = e[v] > 0;
      for (int w = 0; w < gb.nvars && pure; ++w)
        if (w != v && e[w] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

void enumerate_degree(int nvars, int degree, ExponentVec& e, int at,
                      const std::function<void(const ExponentVec&)>& f) {
  if (at == nvars - 1) {
    e[at] = degree;
    f(e);
    e[at] = 0;
    return;
  }
  for (int d = 0; d <= degree; ++d) {
    e[at] = d;
    enumerate_degree(nvars, degree - d, e, at + 1, f);
  }
  e[at] = 0;
}

}  // namespace

long long hilbert_function(const GroebnerBasis& gb, int degree) {
  if (degree < 0) fail(errc::invalid_size, "degree must be non-negative");
  if (gb.nvars == 0) return degree == 0 && gb.polys.empty() ? 1 : 0;
  std::vector<ExponentVec> lts;
  for (const auto& p : gb.polys) lts.push_back(p.leading_term(gb.order).first);
  long long count = 0;
  ExponentVec e(gb.nvars, 0);
  enumerate_degree(gb.nvars, degree, e, 0, [&](const ExponentVec& mono) {
    for (const auto& lt : lts)
      if (divides(lt, mono)) return;
    ++count;
  });
  return count;
}

}  // namespace macposets

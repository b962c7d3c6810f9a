#include "macposets/monomial_poset.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace macposets {

namespace {

std::string key_string(const Polynomial& p) {
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    for (int x : e) out += std::to_string(x) + ",";
    out += ":" + c.to_string() + ";";
  }
  return out;
}

std::vector<ExponentVec> monomials_of_degree(int nvars, int degree) {
  std::vector<ExponentVec> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  ExponentVec e(nvars, 0);
  std::function<void(int, int)> rec = [&](int at, int left) {
    if (at == nvars - 1) {
      e[at] = left;
      out.push_back(e);
      e[at] = 0;
      return;
    }
    for (int d = 0; d <= left; ++d) {
      e[at] = d;
      rec(at + 1, left - d);
    }
    e[at] = 0;
  };
  rec(0, degree);
  return out;
}

}  // namespace

MonomialClassTable MonomialClassTable::build(const IdealPresentation& ring, int max_degree) {
  validate_presentation(ring);
  MonomialClassTable table;
  table.ring_ = ring;
  table.gb_ = buchberger(ring);
  table.artinian_ = is_artinian(table.gb_);

  const int nvars = static_cast<int>(ring.vars.size());
  const MonomialOrder grevlex{};
  std::unordered_map<std::string, int> by_key;

  for (int d = 0;; ++d) {
    if (!table.artinian_ && d > max_degree) {
      table.truncated_ = true;
      break;
    }
    auto monos = monomials_of_degree(nvars, d);
    // ascending grevlex, so the first representative of a class is its smallest
    std::sort(monos.begin(), monos.end(),
              [&](const ExponentVec& a, const ExponentVec& b) { return grevlex.less(a, b); });
    int found = 0;
    for (const auto& m : monos) {
      Polynomial nf = normal_form(Polynomial::monomial(m), table.gb_);
      if (nf.is_zero()) continue;
      ++found;
      std::string key = key_string(nf);
      if (by_key.count(key)) continue;
      MonomialClass cls;
      cls.representative = m;
      cls.degree = d;
      if (auto mono = nf.as_monomial())
        cls.label = monomial_to_string(*mono, ring.vars);
      else
        cls.label = monomial_to_string(m, ring.vars);
      cls.key = std::move(nf);
      by_key.emplace(key, static_cast<int>(table.classes_.size()));
      table.classes_.push_back(std::move(cls));
    }
    if (found == 0) break;  // graded: an empty degree stays empty above
  }

  table.mult_.assign(table.classes_.size(), std::vector<int>(std::max(nvars, 1), -1));
  for (size_t i = 0; i < table.classes_.size(); ++i) {
    for (int v = 0; v < nvars; ++v) {
      ExponentVec prod = table.classes_[i].representative;
      ++prod[v];
      Polynomial nf = normal_form(Polynomial::monomial(prod), table.gb_);
      if (nf.is_zero()) continue;
      auto it = by_key.find(key_string(nf));
      if (it != by_key.end()) table.mult_[i][v] = it->second;
      // absent keys can only happen past the truncation bound
    }
  }
  return table;
}

std::vector<MonomialClass> get_mons(const IdealPresentation& ring, int max_degree) {
  return MonomialClassTable::build(ring, max_degree).classes();
}

Poset poset_of(const MonomialClassTable& table) {
  std::vector<std::string> labels;
  labels.reserve(table.classes().size());
  for (const auto& c : table.classes()) labels.push_back(c.label);
  std::vector<std::pair<int, int>> covers;
  const int nvars = static_cast<int>(table.ring().vars.size());
  for (size_t i = 0; i < table.classes().size(); ++i)
    for (int v = 0; v < nvars; ++v)
      if (int j = table.multiply(static_cast<int>(i), v); j >= 0)
        covers.emplace_back(static_cast<int>(i), j);
  return Poset::from_cover_ids(std::move(labels), std::move(covers));
}

Poset get_poset(const IdealPresentation& ring, int max_degree) {
  return poset_of(MonomialClassTable::build(ring, max_degree));
}

int socle_class(const MonomialClassTable& table) {
  if (!table.artinian())
    fail(errc::not_artinian, "socle requires a quotient with finitely many monomials");
  const int nvars = static_cast<int>(table.ring().vars.size());
  int socle = -1;
  for (size_t i = 0; i < table.classes().size(); ++i) {
    bool maximal = true;
    for (int v = 0; v < nvars && maximal; ++v)
      if (table.multiply(static_cast<int>(i), v) >= 0) maximal = false;
    if (!maximal) continue;
    if (socle >= 0)
      fail(errc::no_unique_maximum, "two maximal monomial classes: '" +
                                        table.classes()[socle].label + "' and '" +
                                        table.classes()[i].label + "'");
    socle = static_cast<int>(i);
  }
  if (socle < 0) fail(errc::no_unique_maximum, "no monomial classes at all");
  return socle;
}

}  // namespace macposets

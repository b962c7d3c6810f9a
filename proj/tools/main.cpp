// macposets: poset and ring toolkit for the Macaulay property.
//
// File formats are JSON throughout: posets as {"elements", "covers"}, rings
// as {"vars", "field", "ideal"}, maps as {"domain", "codomain", "images"}.
// Decisions print a result envelope on stdout; warnings go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "macposets/io.hpp"
#include "macposets/macaulay.hpp"
#include "macposets/monomial_poset.hpp"
#include "macposets/poset_ops.hpp"
#include "macposets/render.hpp"
#include "macposets/ring_ops.hpp"

using namespace macposets;
using nlohmann::json;

namespace {

struct CommonOpts {
  double max_time_secs = 60.0;
  int max_degree = MonomialClassTable::default_max_degree;
  bool all_orders = false;
  bool strict = false;
  int threads = 0;  // 0: pick automatically
  std::string format;
  std::string output;
  std::string order_file;
};

int exit_code = 0;

SearchBudget budget_of(const CommonOpts& opts) {
  SearchBudget b;
  b.max_time = std::chrono::milliseconds(static_cast<long long>(opts.max_time_secs * 1000.0));
  if (b.max_time <= std::chrono::milliseconds::zero())
    fail(errc::invalid_size, "--max-time must be positive");
  b.threads = opts.threads > 0
                  ? opts.threads
                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return b;
}

void emit(const std::string& payload, const CommonOpts& opts) {
  if (opts.output.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(opts.output);
  if (!out) fail(errc::io_error, "cannot write '" + opts.output + "'");
  out << payload;
}

void emit(const json& payload, const CommonOpts& opts) { emit(payload.dump(2), opts); }

void warn_all(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << w << "\n";
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::timeout: return "timeout";
  }
  return "?";
}

void apply_strict(Decision d, const CommonOpts& opts) {
  if (opts.strict && d != Decision::yes) exit_code = 1;
}

json envelope(Decision d, const std::vector<std::string>& warnings, const std::string& note) {
  json j;
  j["result"] = decision_name(d);
  j["warnings"] = warnings;
  if (!note.empty()) j["note"] = note;
  return j;
}

void run_macaulay_query(const Poset& p, const CommonOpts& opts,
                        const std::vector<std::string>& warnings, bool want_orders) {
  warn_all(warnings);
  if (want_orders || opts.all_orders) {
    auto out = macaulay_orders(p, budget_of(opts), true);
    Decision d = out.complete ? (out.orders.empty() ? Decision::no : Decision::yes)
                              : Decision::timeout;
    json j = envelope(d, warnings,
                      p.ranked() ? "" : "not ranked: an unranked poset cannot be Macaulay");
    j["complete"] = out.complete;
    j["orders"] = json::array();
    for (const auto& o : out.orders) j["orders"].push_back(o.flat_labels(p));
    emit(j, opts);
    apply_strict(d, opts);
    return;
  }
  auto out = is_macaulay(p, budget_of(opts));
  json j = envelope(out.decision, warnings, out.note);
  if (out.witness) j["witness"] = out.witness->flat_labels(p);
  emit(j, opts);
  apply_strict(out.decision, opts);
}

void run_additive_query(const Poset& p, const CommonOpts& opts,
                        const std::vector<std::string>& warnings) {
  warn_all(warnings);
  auto out = is_additive(p, budget_of(opts));
  json j = envelope(out.decision, warnings, out.note);
  if (out.witness) j["witness"] = out.witness->flat_labels(p);
  emit(j, opts);
  apply_strict(out.decision, opts);
}

std::pair<Poset, std::vector<std::string>> ring_poset_with_warnings(const std::string& file,
                                                                    int max_degree) {
  auto table = MonomialClassTable::build(load_ring(file), max_degree);
  std::vector<std::string> warnings;
  if (table.truncated())
    warnings.push_back("quotient has infinitely many monomials; the poset truncated at degree " +
                       std::to_string(max_degree) +
                       " approximates the infinite monomial poset");
  return {poset_of(table), warnings};
}

json ring_result_json(const RingOpResult& r) {
  json j = ring_to_json(r.ring);
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial posets of graded rings, the Macaulay property, and poset operations"};
  app.require_subcommand(1);
  auto opts = std::make_shared<CommonOpts>();

  // ---- poset group ----
  auto* poset_cmd = app.add_subcommand("poset", "Operations on poset files");
  poset_cmd->require_subcommand(1);

  auto add_search_flags = [&](CLI::App* cmd, bool with_orders = true) {
    cmd->add_option("--max-time", opts->max_time_secs, "Search budget in seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", opts->threads,
                    "Worker thread cap; the current search runs deterministically on one")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--strict", opts->strict, "Exit 1 on a negative or timed-out decision");
    cmd->add_option("--output", opts->output, "Write the result to a file");
    if (with_orders)
      cmd->add_flag("--all-orders", opts->all_orders, "Enumerate every Macaulay order");
  };

  auto file_a = std::make_shared<std::string>();
  auto file_b = std::make_shared<std::string>();
  auto files = std::make_shared<std::vector<std::string>>();
  auto size_n = std::make_shared<int>(0);

  auto* p_ismac = poset_cmd->add_subcommand("is-macaulay", "Decide the Macaulay property");
  p_ismac->add_option("file", *file_a, "Poset file")->required();
  add_search_flags(p_ismac);
  p_ismac->callback([=]() { run_macaulay_query(load_poset(*file_a), *opts, {}, false); });

  auto* p_orders = poset_cmd->add_subcommand("orders", "List Macaulay total orders");
  p_orders->add_option("file", *file_a, "Poset file")->required();
  add_search_flags(p_orders);
  p_orders->callback([=]() { run_macaulay_query(load_poset(*file_a), *opts, {}, true); });

  auto* p_additive = poset_cmd->add_subcommand("is-additive", "Decide additivity");
  p_additive->add_option("file", *file_a, "Poset file")->required();
  add_search_flags(p_additive, false);
  p_additive->callback([=]() { run_additive_query(load_poset(*file_a), *opts, {}); });

  auto* p_shadow = poset_cmd->add_subcommand("shadow", "Upper (or lower) shadow of a set");
  auto lower_flag = std::make_shared<bool>(false);
  p_shadow->add_option("file", *file_a, "Poset file")->required();
  p_shadow->add_option("elements", *files, "Element labels")->required()->expected(-1);
  p_shadow->add_flag("--lower", *lower_flag, "Lower shadow instead of upper");
  p_shadow->add_option("--output", opts->output, "Write the result to a file");
  p_shadow->callback([=]() {
    Poset p = load_poset(*file_a);
    auto shadow = *lower_flag ? lower_shadow(p, *files) : upper_shadow(p, *files);
    json j;
    j["result"] = shadow;
    j["warnings"] = json::array();
    emit(j, *opts);
  });

  auto* p_rank = poset_cmd->add_subcommand("rank", "Rank function and levels");
  p_rank->add_option("file", *file_a, "Poset file")->required();
  p_rank->add_option("--output", opts->output, "Write the result to a file");
  p_rank->callback([=]() {
    Poset p = load_poset(*file_a);
    json j;
    if (p.ranked()) {
      j["result"] = "ranked";
      json ranks = json::object();
      for (int i = 0; i < p.size(); ++i) ranks[p.label(i)] = p.ranks().rank[i];
      j["ranks"] = std::move(ranks);
      json levels = json::array();
      for (const auto& lvl : p.ranks().levels) {
        json row = json::array();
        for (int v : lvl) row.push_back(p.label(v));
        levels.push_back(std::move(row));
      }
      j["levels"] = std::move(levels);
    } else {
      j["result"] = "unranked";
    }
    j["warnings"] = json::array();
    emit(j, *opts);
  });

  auto* p_render = poset_cmd->add_subcommand("render", "Emit a Hasse diagram");
  p_render->add_option("file", *file_a, "Poset file")->required();
  p_render->add_option("--format", opts->format, "tikz (default), dot, or json")
      ->check(CLI::IsMember({"tikz", "dot", "json"}));
  p_render->add_option("--order", opts->order_file,
                       "JSON array of labels fixing the within-level order (tikz)");
  p_render->add_option("--output", opts->output, "Write the result to a file");
  p_render->callback([=]() {
    Poset p = load_poset(*file_a);
    if (opts->format == "dot") {
      emit(to_dot(p), *opts);
      return;
    }
    if (opts->format == "json") {
      emit(poset_to_json(p), *opts);
      return;
    }
    std::optional<LevelOrder> order;
    if (!opts->order_file.empty()) {
      auto labels = load_json(opts->order_file).get<std::vector<std::string>>();
      order = level_order_from_labels(p, labels);
    }
    emit(to_tikz(p, order), *opts);
  });

  auto* p_op = poset_cmd->add_subcommand("op", "Poset operations");
  p_op->require_subcommand(1);

  auto* op_wedge = p_op->add_subcommand("wedge", "Wedge product of poset files");
  op_wedge->add_option("files", *files, "Poset files")->required()->expected(-1);
  op_wedge->add_option("--output", opts->output, "Write the result to a file");
  op_wedge->callback([=]() {
    std::vector<Poset> parts;
    for (const auto& f : *files) parts.push_back(load_poset(f));
    emit(poset_to_json(wedge_product(parts)), *opts);
  });

  auto* op_closed = p_op->add_subcommand("closed", "Closed product of poset files");
  op_closed->add_option("files", *files, "Poset files")->required()->expected(-1);
  op_closed->add_option("--output", opts->output, "Write the result to a file");
  op_closed->callback([=]() {
    std::vector<Poset> parts;
    for (const auto& f : *files) parts.push_back(load_poset(f));
    auto out = closed_product(parts);
    warn_all(out.warnings);
    emit(poset_to_json(out.poset), *opts);
  });

  auto* op_fiber = p_op->add_subcommand("fiber", "Fiber product along map files");
  op_fiber->add_option("files", *files, "Map files")->required()->expected(-1);
  op_fiber->add_option("--output", opts->output, "Write the result to a file");
  op_fiber->callback([=]() {
    std::vector<PosetMap> maps;
    for (const auto& f : *files) maps.push_back(load_poset_map(f));
    emit(poset_to_json(fiber_product(maps)), *opts);
  });

  auto* op_conn = p_op->add_subcommand("connected-sum", "Connected sum along map files");
  op_conn->add_option("files", *files, "Map files")->required()->expected(-1);
  op_conn->add_option("--output", opts->output, "Write the result to a file");
  op_conn->callback([=]() {
    std::vector<PosetMap> maps;
    for (const auto& f : *files) maps.push_back(load_poset_map(f));
    emit(poset_to_json(connected_sum(maps)), *opts);
  });

  auto* p_make = poset_cmd->add_subcommand("make", "Standard poset constructors");
  p_make->require_subcommand(1);

  auto* mk_chain = p_make->add_subcommand("chain", "Chain on n elements");
  mk_chain->add_option("n", *size_n, "Number of elements")->required();
  mk_chain->add_option("--output", opts->output, "Write the result to a file");
  mk_chain->callback([=]() { emit(poset_to_json(chain(*size_n)), *opts); });

  auto* mk_bool = p_make->add_subcommand("boolean", "Boolean lattice on n atoms");
  mk_bool->add_option("n", *size_n, "Number of atoms")->required();
  mk_bool->add_option("--output", opts->output, "Write the result to a file");
  mk_bool->callback([=]() { emit(poset_to_json(boolean_lattice(*size_n)), *opts); });

  auto* mk_prod = p_make->add_subcommand("product", "Cartesian product of two poset files");
  mk_prod->add_option("a", *file_a, "First poset file")->required();
  mk_prod->add_option("b", *file_b, "Second poset file")->required();
  mk_prod->add_option("--output", opts->output, "Write the result to a file");
  mk_prod->callback([=]() {
    emit(poset_to_json(cartesian_product(load_poset(*file_a), load_poset(*file_b))), *opts);
  });

  auto* mk_union = p_make->add_subcommand("union", "Disjoint union of two poset files");
  mk_union->add_option("a", *file_a, "First poset file")->required();
  mk_union->add_option("b", *file_b, "Second poset file")->required();
  mk_union->add_option("--output", opts->output, "Write the result to a file");
  mk_union->callback([=]() {
    emit(poset_to_json(disjoint_union(load_poset(*file_a), load_poset(*file_b))), *opts);
  });

  auto* mk_dual = p_make->add_subcommand("dual", "Dual of a poset file");
  mk_dual->add_option("a", *file_a, "Poset file")->required();
  mk_dual->add_option("--output", opts->output, "Write the result to a file");
  mk_dual->callback([=]() { emit(poset_to_json(dual(load_poset(*file_a))), *opts); });

  // ---- ring group ----
  auto* ring_cmd = app.add_subcommand("ring", "Operations on ring files");
  ring_cmd->require_subcommand(1);

  auto* r_mons = ring_cmd->add_subcommand("mons", "Monomials of the quotient ring");
  r_mons->add_option("file", *file_a, "Ring file")->required();
  r_mons->add_option("--max-degree", opts->max_degree,
                     "Truncation degree for infinite quotients")
      ->check(CLI::NonNegativeNumber);
  r_mons->add_option("--output", opts->output, "Write the result to a file");
  r_mons->callback([=]() {
    auto ring = load_ring(*file_a);
    auto table = MonomialClassTable::build(ring, opts->max_degree);
    json j;
    json labels = json::array();
    json classes = json::array();
    for (const auto& c : table.classes()) {
      labels.push_back(c.label);
      classes.push_back(class_to_json(c, ring.vars));
    }
    j["result"] = std::move(labels);
    j["classes"] = std::move(classes);
    j["warnings"] = json::array();
    if (table.truncated()) {
      std::string w = "quotient has infinitely many monomials; list truncated at degree " +
                      std::to_string(opts->max_degree);
      j["warnings"].push_back(w);
      std::cerr << w << "\n";
    }
    emit(j, *opts);
  });

  auto* r_poset = ring_cmd->add_subcommand("poset", "Monomial poset of the quotient ring");
  r_poset->add_option("file", *file_a, "Ring file")->required();
  r_poset->add_option("--max-degree", opts->max_degree,
                      "Truncation degree for infinite quotients")
      ->check(CLI::NonNegativeNumber);
  r_poset->add_option("--output", opts->output, "Write the result to a file");
  r_poset->callback([=]() {
    auto ring = load_ring(*file_a);
    auto table = MonomialClassTable::build(ring, opts->max_degree);
    if (table.truncated())
      std::cerr << "quotient has infinitely many monomials; poset truncated at degree "
                << opts->max_degree << "\n";
    json j = poset_to_json(poset_of(table));
    json classes = json::array();
    for (const auto& c : table.classes()) classes.push_back(class_to_json(c, ring.vars));
    j["classes"] = std::move(classes);
    emit(j, *opts);
  });

  auto* r_ismac = ring_cmd->add_subcommand("is-macaulay", "Decide whether the ring is Macaulay");
  r_ismac->add_option("file", *file_a, "Ring file")->required();
  r_ismac->add_option("--max-degree", opts->max_degree,
                      "Truncation degree for infinite quotients")
      ->check(CLI::NonNegativeNumber);
  add_search_flags(r_ismac);
  r_ismac->callback([=]() {
    auto [p, warnings] = ring_poset_with_warnings(*file_a, opts->max_degree);
    run_macaulay_query(p, *opts, warnings, false);
  });

  auto* r_orders = ring_cmd->add_subcommand("orders", "Macaulay orders of the monomial poset");
  r_orders->add_option("file", *file_a, "Ring file")->required();
  r_orders->add_option("--max-degree", opts->max_degree,
                       "Truncation degree for infinite quotients")
      ->check(CLI::NonNegativeNumber);
  add_search_flags(r_orders);
  r_orders->callback([=]() {
    auto [p, warnings] = ring_poset_with_warnings(*file_a, opts->max_degree);
    run_macaulay_query(p, *opts, warnings, true);
  });

  auto* r_additive =
      ring_cmd->add_subcommand("is-additive", "Decide additivity of the monomial poset");
  r_additive->add_option("file", *file_a, "Ring file")->required();
  r_additive->add_option("--max-degree", opts->max_degree,
                         "Truncation degree for infinite quotients")
      ->check(CLI::NonNegativeNumber);
  add_search_flags(r_additive, false);
  r_additive->callback([=]() {
    auto [p, warnings] = ring_poset_with_warnings(*file_a, opts->max_degree);
    run_additive_query(p, *opts, warnings);
  });

  auto* r_fiber = ring_cmd->add_subcommand("fiber-product", "Fiber product of two rings over K");
  r_fiber->add_option("a", *file_a, "First ring file")->required();
  r_fiber->add_option("b", *file_b, "Second ring file")->required();
  r_fiber->add_option("--output", opts->output, "Write the result to a file");
  r_fiber->callback([=]() {
    auto out = ring_fiber_product(load_ring(*file_a), load_ring(*file_b));
    warn_all(out.warnings);
    emit(ring_result_json(out), *opts);
  });

  auto* r_conn = ring_cmd->add_subcommand("connected-sum", "Connected sum of two rings over K");
  r_conn->add_option("a", *file_a, "First ring file")->required();
  r_conn->add_option("b", *file_b, "Second ring file")->required();
  r_conn->add_option("--output", opts->output, "Write the result to a file");
  r_conn->callback([=]() {
    auto out = ring_connected_sum(load_ring(*file_a), load_ring(*file_b));
    warn_all(out.warnings);
    emit(ring_result_json(out), *opts);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

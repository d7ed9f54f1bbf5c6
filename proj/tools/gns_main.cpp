// Command line surface: thin adapters over the library, stable text/JSON
// output, scriptable exit codes (0 ok, 2 invalid input, 3 overflow/limit,
// 64 usage).
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gns/convert.hpp"
#include "gns/enumerate.hpp"
#include "gns/errors.hpp"
#include "gns/gns.hpp"
#include "gns/io.hpp"
#include "gns/numerical.hpp"
#include "gns/order.hpp"
#include "gns/point.hpp"
#include "gns/polynomial.hpp"

namespace {

using nlohmann::json;

struct Common {
  std::string order = "lex";
  std::string format = "plain";
  unsigned threads = 0;
  double limit_seconds = 0.0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--order", c.order, "relaxed order: lex, grlex or minlex")
      ->check(CLI::IsMember({"lex", "grlex", "minlex"}));
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"plain", "json"}));
  cmd->add_option("--threads", c.threads,
                  "worker count; 0 = GNS_THREADS env or hardware concurrency");
  cmd->add_option("--limit-seconds", c.limit_seconds,
                  "abort with exit code 3 once this much wall time has passed");
}

gns::EnumOptions make_options(const Common& c) {
  gns::EnumOptions o;
  o.threads = c.threads;
  if (c.limit_seconds > 0.0) {
    auto budget = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(c.limit_seconds));
    o.deadline = std::chrono::steady_clock::now() + budget;
  }
  return o;
}

json point_row(const gns::Point& p) {
  auto row = json::array();
  for (unsigned i = 0; i < p.dim(); ++i) row.push_back(p[i]);
  return row;
}

json point_rows(const std::vector<gns::Point>& pts) {
  auto rows = json::array();
  for (const auto& p : pts) rows.push_back(point_row(p));
  return rows;
}

std::string sentinel_point(unsigned dim) {
  std::string s;
  for (unsigned i = 0; i < dim; ++i) {
    if (i) s += ',';
    s += "-1";
  }
  return s;
}

// ---------------------------------------------------------------------------

struct GensToGapsArgs {
  unsigned dim = 0;
  std::string gens;
  Common c;
};

void run_gens_to_gaps(const GensToGapsArgs& a) {
  auto gens = gns::parse_point_list(a.gens, a.dim);
  auto gaps = gns::generators_to_gaps(gens, a.dim);
  std::optional<gns::BoundVector> bound;
  if (a.dim >= 2) bound = gns::bound_vector(gens, a.dim);
  if (a.c.format == "json") {
    auto s = gns::Gns::trusted(a.dim, std::move(gaps));
    json j = gns::to_json(s);
    if (bound) j["bound"] = point_row(bound->v);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << gns::format_point_list(gaps) << "\n";
    if (bound) std::cout << "bound: " << gns::format_point(bound->v) << "\n";
  }
}

struct GapsToGensArgs {
  unsigned dim = 0;
  std::string gaps;
  Common c;
};

void run_gaps_to_gens(const GapsToGensArgs& a) {
  auto gaps = gns::parse_point_list(a.gaps, a.dim);
  auto ord = gns::RelaxedOrder::by_name(a.c.order, a.dim);
  auto gens = gns::gaps_to_generators(gaps, a.dim, ord);
  if (a.c.format == "json") {
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    auto s = gns::Gns::trusted(a.dim, std::move(gaps));
    s.prime_generator_cache(gens);
    std::cout << gns::to_json(s, /*with_min_gens=*/true).dump() << "\n";
  } else {
    std::cout << gns::format_point_list(gens) << "\n";
  }
}

struct CountArgs {
  unsigned genus = 0;
  unsigned dim = 0;
  std::string method = "ord";
  bool by_rank = false;
  bool per_genus = false;
  Common c;
};

void run_count(const CountArgs& a) {
  auto ord = gns::RelaxedOrder::by_name(a.c.order, a.dim);
  auto opts = make_options(a.c);
  gns::CountReport rep;
  if (a.method == "ord") {
    if (a.per_genus)
      throw gns::ParseError("--per-genus requires --method tree");
    rep = gns::count_ordinarization(a.genus, a.dim, ord, opts);
  } else {
    if (a.by_rank) throw gns::ParseError("--by-rank requires --method ord");
    rep = gns::count_genus_tree(a.genus, a.dim, ord, opts);
  }
  if (a.c.format == "json") {
    json j;
    j["dim"] = rep.dim;
    j["genus"] = rep.genus;
    j["method"] = a.method;
    j["total"] = rep.total;
    if (a.by_rank) j["by_rank"] = rep.by_rank;
    if (a.per_genus) j["per_genus"] = rep.per_genus;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << rep.total << "\n";
    if (a.by_rank)
      for (std::size_t r = 1; r <= rep.by_rank.size(); ++r)
        std::cout << "rank " << r << ": " << rep.by_rank[r - 1] << "\n";
    if (a.per_genus)
      for (std::size_t k = 0; k < rep.per_genus.size(); ++k)
        std::cout << "genus " << k << ": " << rep.per_genus[k] << "\n";
  }
}

struct EnumerateArgs {
  unsigned genus = 0;
  unsigned dim = 0;
  std::string out;
  bool min_gens = false;
  std::string method = "ord";
  Common c;
};

void run_enumerate(const EnumerateArgs& a) {
  auto ord = gns::RelaxedOrder::by_name(a.c.order, a.dim);
  auto opts = make_options(a.c);
  auto method = a.method == "ord" ? gns::TreeMethod::Ordinarization
                                  : gns::TreeMethod::GenusTree;
  std::ofstream file;
  std::ostream* target = &std::cout;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) throw gns::InvalidInput("cannot open output file " + a.out);
    target = &file;
  }
  std::uint64_t n = gns::enumerate_genus(
      a.genus, a.dim, ord,
      [&](const gns::Gns& s) { *target << gns::to_json(s, a.min_gens).dump() << "\n"; },
      method, opts);
  if (!a.out.empty()) {
    file.flush();
    if (!file) throw gns::InvalidInput("write to " + a.out + " failed");
    std::cout << n << "\n";
  }
}

struct InfoArgs {
  unsigned dim = 0;
  std::string gaps;
  Common c;
};

void run_info(const InfoArgs& a) {
  auto ord = gns::RelaxedOrder::by_name(a.c.order, a.dim);
  auto s = gns::Gns::from_gaps(a.dim, gns::parse_point_list(a.gaps, a.dim));
  auto frob = s.frobenius_element(ord);
  bool ordinary = s.is_ordinary(ord);
  if (a.c.format == "json") {
    json j = gns::to_json(s, /*with_min_gens=*/true);
    j["genus"] = s.genus();
    j["multiplicity"] = point_row(s.multiplicity(ord));
    j["frobenius"] = frob.is_sentinel() ? json() : point_row(*frob.at);
    j["pseudo_frobenius"] = point_rows(s.pseudo_frobenius());
    j["special_gaps"] = point_rows(s.special_gaps());
    j["ordinary"] = ordinary;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "dim: " << s.dim() << "\n";
    std::cout << "genus: " << s.genus() << "\n";
    std::cout << "gaps: " << gns::format_point_list(s.gaps()) << "\n";
    std::cout << "min_gens: " << gns::format_point_list(s.minimal_generators()) << "\n";
    std::cout << "multiplicity: " << gns::format_point(s.multiplicity(ord)) << "\n";
    std::cout << "frobenius: "
              << (frob.is_sentinel() ? sentinel_point(a.dim) : gns::format_point(*frob.at))
              << "\n";
    std::cout << "pseudo_frobenius: " << gns::format_point_list(s.pseudo_frobenius())
              << "\n";
    std::cout << "special_gaps: " << gns::format_point_list(s.special_gaps()) << "\n";
    std::cout << "ordinary: " << (ordinary ? "true" : "false") << "\n";
  }
}

struct PolynomialArgs {
  unsigned genus = 0;
  std::uint64_t eval = 0;
  bool have_eval = false;
  Common c;
};

void run_polynomial(const PolynomialArgs& a) {
  auto opts = make_options(a.c);
  std::vector<std::uint64_t> rank_counts;
  for (unsigned i = 1; i <= a.genus; ++i) {
    auto ord = gns::RelaxedOrder::by_name(a.c.order, i);
    rank_counts.push_back(gns::count_ordinarization(a.genus, i, ord, opts).by_rank[i - 1]);
  }
  auto f = gns::build_polynomial(a.genus, rank_counts);
  if (a.have_eval) {
    auto value = gns::evaluate(f, a.eval);
    if (a.c.format == "json") {
      json j;
      j["at"] = a.eval;
      j["genus"] = a.genus;
      j["value"] = value.str();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << value.str() << "\n";
    }
  } else if (a.c.format == "json") {
    json j;
    j["binomial"] = f.binomial_coeffs;
    j["genus"] = a.genus;
    auto coeffs = json::array();
    for (const auto& q : f.monomial) coeffs.push_back(q.str());
    j["monomial"] = coeffs;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << gns::to_string(f) << "\n";
  }
}

struct RandomArgs {
  unsigned genus = 0;
  unsigned dim = 0;
  std::uint64_t seed = 0;
};

void run_random(const RandomArgs& a) {
  std::cout << gns::to_json(gns::random_gns(a.genus, a.dim, a.seed)).dump() << "\n";
}

struct RatioTableArgs {
  unsigned max_genus = 0;
  Common c;
};

void run_ratio_table(const RatioTableArgs& a) {
  auto opts = make_options(a.c);
  auto counts_1d =
      gns::count_genus_tree(a.max_genus, 1, gns::RelaxedOrder::by_name(a.c.order, 1), opts)
          .per_genus;
  auto counts_2d =
      gns::count_genus_tree(a.max_genus, 2, gns::RelaxedOrder::by_name(a.c.order, 2), opts)
          .per_genus;
  auto rows = gns::ratio_table(a.max_genus, counts_1d, counts_2d);
  if (a.c.format == "json") {
    auto table = json::array();
    for (const auto& r : rows) {
      json j;
      j["genus"] = r.genus;
      j["n1"] = r.count_1d;
      j["n1_squared"] = r.count_1d_sq;
      j["n2"] = r.count_2d;
      j["ratio"] = gns::decimal_string(r.ratio);
      j["growth"] = gns::decimal_string(r.growth);
      table.push_back(std::move(j));
    }
    std::cout << table.dump() << "\n";
  } else {
    std::cout << "genus n1 n1_squared n2 ratio growth\n";
    for (const auto& r : rows)
      std::cout << r.genus << " " << r.count_1d << " " << r.count_1d_sq << " "
                << r.count_2d << " " << gns::decimal_string(r.ratio) << " "
                << gns::decimal_string(r.growth) << "\n";
  }
}

// Machine-readable reason token placed first on the stderr line for exit
// code 2, so callers can branch without parsing prose.
std::string reason_token(const gns::Error& e) {
  if (auto* p = dynamic_cast<const gns::AxisNotNumerical*>(&e))
    return "axis-not-numerical(" + std::to_string(p->axis) + ")";
  if (auto* p = dynamic_cast<const gns::MissingMixedGenerator*>(&e))
    return "missing-mixed-generator(" + std::to_string(p->i) + "," +
           std::to_string(p->k) + ")";
  if (dynamic_cast<const gns::NotAGns*>(&e) != nullptr ||
      dynamic_cast<const gns::NotAMonoid*>(&e) != nullptr)
    return "not-a-gap-set";
  if (dynamic_cast<const gns::GcdNotOne*>(&e) != nullptr) return "axis-not-numerical(1)";
  if (dynamic_cast<const gns::NotAMinimalGenerator*>(&e) != nullptr)
    return "not-a-minimal-generator";
  if (dynamic_cast<const gns::NotASpecialGap*>(&e) != nullptr) return "not-a-special-gap";
  if (dynamic_cast<const gns::DimensionMismatch*>(&e) != nullptr)
    return "dimension-mismatch";
  if (dynamic_cast<const gns::UnsupportedOrder*>(&e) != nullptr)
    return "unsupported-order";
  if (dynamic_cast<const gns::InternalInconsistency*>(&e) != nullptr)
    return "internal-inconsistency";
  return "invalid-input";
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"generalized numerical semigroups: gaps, generators, trees, counts"};
  app.require_subcommand(1);

  GensToGapsArgs g2g;
  auto* cmd_g2g = app.add_subcommand(
      "gens-to-gaps", "gap set of the monoid generated by the given points");
  cmd_g2g->add_option("--dim", g2g.dim, "ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_g2g->add_option("--gens", g2g.gens, "generators, e.g. \"2,0;3,0;1,1;0,1\"")
      ->required();
  add_common(cmd_g2g, g2g.c);
  cmd_g2g->callback([&] { run_gens_to_gaps(g2g); });

  GapsToGensArgs gap2g;
  auto* cmd_gap2g = app.add_subcommand(
      "gaps-to-gens", "minimal generators of the monoid with the given gap set");
  cmd_gap2g->add_option("--dim", gap2g.dim, "ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_gap2g->add_option("--gaps", gap2g.gaps, "gaps, e.g. \"1,0\"; \"\" for none")
      ->required();
  add_common(cmd_gap2g, gap2g.c);
  cmd_gap2g->callback([&] { run_gaps_to_gens(gap2g); });

  CountArgs cnt;
  auto* cmd_cnt =
      app.add_subcommand("count", "number of semigroups of a given genus in N^d");
  cmd_cnt->add_option("--genus", cnt.genus, "target genus")->required();
  cmd_cnt->add_option("--dim", cnt.dim, "ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_cnt->add_option("--method", cnt.method, "ord (fixed-genus forest) or tree")
      ->check(CLI::IsMember({"ord", "tree"}));
  cmd_cnt->add_flag("--by-rank", cnt.by_rank,
                    "also report counts split by the rank of the gap matrix (ord only)");
  cmd_cnt->add_flag("--per-genus", cnt.per_genus,
                    "also report one count per genus level (tree only)");
  add_common(cmd_cnt, cnt.c);
  cmd_cnt->callback([&] { run_count(cnt); });

  EnumerateArgs enm;
  auto* cmd_enm = app.add_subcommand(
      "enumerate", "list every semigroup of a given genus as JSON lines");
  cmd_enm->add_option("--genus", enm.genus, "target genus")->required();
  cmd_enm->add_option("--dim", enm.dim, "ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_enm->add_option("--out", enm.out,
                      "write lines to this file and print the count to stdout");
  cmd_enm->add_flag("--min-gens", enm.min_gens, "include minimal generators per line");
  cmd_enm->add_option("--method", enm.method, "ord (fixed-genus forest) or tree")
      ->check(CLI::IsMember({"ord", "tree"}));
  add_common(cmd_enm, enm.c);
  cmd_enm->callback([&] { run_enumerate(enm); });

  InfoArgs inf;
  auto* cmd_inf = app.add_subcommand("info", "report invariants of one semigroup");
  cmd_inf->add_option("--dim", inf.dim, "ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_inf->add_option("--gaps", inf.gaps, "gaps, e.g. \"1,0\"; \"\" for none")
      ->required();
  add_common(cmd_inf, inf.c);
  cmd_inf->callback([&] { run_info(inf); });

  PolynomialArgs pol;
  auto* cmd_pol = app.add_subcommand(
      "polynomial", "counting polynomial of a genus; F_g(d) counts genus-g "
                    "semigroups in N^d");
  cmd_pol->add_option("--genus", pol.genus, "genus (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* eval_opt = cmd_pol->add_option("--eval", pol.eval, "evaluate at this dimension");
  add_common(cmd_pol, pol.c);
  cmd_pol->callback([&] {
    pol.have_eval = eval_opt->count() > 0;
    run_polynomial(pol);
  });

  RandomArgs rnd;
  auto* cmd_rnd = app.add_subcommand(
      "random", "pseudo-random semigroup of a given genus, deterministic per seed");
  cmd_rnd->add_option("--genus", rnd.genus, "target genus")->required();
  cmd_rnd->add_option("--dim", rnd.dim, "ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_rnd->add_option("--seed", rnd.seed, "stream seed (default 0)");
  cmd_rnd->callback([&] { run_random(rnd); });

  RatioTableArgs rat;
  auto* cmd_rat = app.add_subcommand(
      "ratio-table", "per-genus counts in N and N^2 with the squared-count ratio");
  cmd_rat->add_option("--max-genus", rat.max_genus, "last genus row")->required();
  add_common(cmd_rat, rat.c);
  cmd_rat->callback([&] { run_ratio_table(rat); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  } catch (const gns::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return 64;
  } catch (const gns::OverflowError& e) {
    std::cerr << "error: overflow: " << e.what() << "\n";
    return 3;
  } catch (const gns::LimitExceeded& e) {
    std::cerr << "error: limit: " << e.what() << "\n";
    return 3;
  } catch (const gns::Error& e) {
    std::cerr << "error: " << reason_token(e) << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "aslkit/aslkit.hpp"

namespace {

using namespace aslkit;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_arguments, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw error(errc::bad_arguments, "cannot write " + path);
  out << j.dump(2) << "\n";
}

const std::vector<std::string> properties{"distributive-type", "lattice", "pure", "sum-of-antichains", "cm",
                                          "shellable", "vd", "chordal", "linear-resolution", "ladder"};

int run_check(const std::string& prop, const poset& p, field_kind field) {
  std::string answer;
  if (prop == "distributive-type") {
    answer = is_distributive_type(p) ? "yes" : "no";
  } else if (prop == "lattice") {
    try {
      lattice l = lattice::from_poset(p);
      answer = l.distributive() ? "yes (distributive)" : "yes";
    } catch (const error& e) {
      if (e.code() != errc::not_a_lattice) throw;
      answer = "no";
    }
  } else if (prop == "pure") {
    answer = is_pure(p) ? "yes" : "no";
  } else if (prop == "sum-of-antichains") {
    answer = is_sum_of_antichains(p) ? "yes" : "no";
  } else if (prop == "cm") {
    answer = is_cm_poset(p, field) ? "yes" : "no";
  } else if (prop == "shellable") {
    answer = std::string(to_string(is_shellable_poset(p)));
  } else if (prop == "vd") {
    answer = std::string(to_string(is_vd_poset(p)));
  } else if (prop == "chordal") {
    auto g = comparability_graph(p);
    answer = is_chordal(g) ? "yes" : "no";
    if (auto cyc = chordless_cycle(g)) {
      answer += " (induced cycle:";
      for (int v : *cyc) answer += " " + p.label(v);
      answer += ")";
    }
  } else if (prop == "linear-resolution") {
    answer = has_linear_resolution(p) ? "yes" : "no";
  } else if (prop == "ladder") {
    auto c = order_complex(p);
    ladder_record r{is_vertex_decomposable(c), is_shellable(c), is_cohen_macaulay(c, field), c.is_pure()};
    answer = "vd=" + std::string(to_string(r.vd)) + " shellable=" + std::string(to_string(r.shellable)) +
             " cm=" + (r.cm ? "yes" : "no") + " pure=" + (r.pure ? "yes" : "no") +
             (ladder_consistent(r) ? "" : " VIOLATION");
    std::cout << prop << ": " << answer << "\n";
    return ladder_consistent(r) ? 0 : 1;
  }
  std::cout << prop << ": " << answer << "\n";
  return answer == "inconclusive" ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Posets of distributive type, straightening laws and Betti numbers"};
  app.require_subcommand(1);

  std::string field_name = "q";
  std::string poset_file;
  std::string facets_file;
  std::string json_out;

  auto* check = app.add_subcommand("check", "Decide a property of a poset");
  std::string property;
  check->add_option("property", property, "Property to decide")->required()->check(CLI::IsMember(properties));
  check->add_option("--poset", poset_file, "Poset file")->required()->check(CLI::ExistingFile);
  check->add_option("--field", field_name, "Coefficient field: q, f2, f3 or f5");

  auto* betti = app.add_subcommand("betti", "Graded Betti table");
  std::string method = "koszul";
  auto* betti_poset = betti->add_option("--poset", poset_file, "Poset file")->check(CLI::ExistingFile);
  auto* betti_facets = betti->add_option("--facets", facets_file, "Facet file of a face ring")->check(CLI::ExistingFile);
  betti_poset->excludes(betti_facets);
  betti->add_option("--method", method, "hochster or koszul")->check(CLI::IsMember({"hochster", "koszul"}));
  betti->add_option("--field", field_name, "Coefficient field for Hochster's formula");
  betti->add_option("--json", json_out, "Write JSON here ('-' for stdout)");

  auto* inv = app.add_subcommand("invariants", "Ring invariants of R_K[P]");
  inv->add_option("--poset", poset_file, "Poset file")->required()->check(CLI::ExistingFile);
  inv->add_option("--field", field_name, "Coefficient field for the CM cross-check");
  inv->add_option("--json", json_out, "Write JSON here ('-' for stdout)");

  auto* ideal = app.add_subcommand("ideal", "Straightening generators of J_P");
  ideal->add_option("--poset", poset_file, "Poset file")->required()->check(CLI::ExistingFile);

  auto* enumerate = app.add_subcommand("enumerate", "Posets up to isomorphism");
  int size = 0;
  bool count_only = false;
  enumerate->add_option("--size", size, "Number of elements (1..7)")->required();
  enumerate->add_flag("--count", count_only, "Print only the number of classes");

  auto* verify = app.add_subcommand("verify", "Run a theorem suite");
  std::string suite;
  verify::suite_config cfg;
  int max_p = -1;
  int max_rank = -1;
  int max_n = -1;
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  verify->add_option("--max-p", max_p, "Largest poset size");
  verify->add_option("--max-rank", max_rank, "Largest n + m for divisor lattices");
  verify->add_option("--max-n", max_n, "Largest boolean lattice for Koszul tables");
  verify->add_option("--workers", cfg.workers, "Worker threads");
  verify->add_option("--seed", cfg.seed, "Seed for sampled checks");
  verify->add_option("--samples", cfg.samples, "Number of sampled pairs");
  verify->add_option("--facet-cap", cfg.search.facet_cap, "Facet cap for shellability and VD search");
  verify->add_option("--facets", cfg.facets_file, "Facet file for the conjecture suite")->check(CLI::ExistingFile);
  verify->add_option("--field", field_name, "Coefficient field for homology");
  verify->add_option("--json", json_out, "Write the JSON report here ('-' for stdout)");
  bool quiet = false;
  verify->add_flag("--quiet", quiet, "Print only the summary line");

  CLI11_PARSE(app, argc, argv);

  try {
    const field_kind field = parse_field(field_name);
    if (*check) return run_check(property, parse_poset(read_file(poset_file)), field);

    if (*betti) {
      betti_table t;
      if (!facets_file.empty()) {
        auto c = parse_facets(read_file(facets_file));
        t = method == "hochster" ? hochster_betti(c, field) : koszul_betti(c);
      } else {
        if (poset_file.empty()) throw error(errc::bad_arguments, "betti needs --poset or --facets");
        poset p = parse_poset(read_file(poset_file));
        if (method == "hochster") {
          t = hochster_betti(order_complex(p), field, std::max(default_hochster_cap, p.size()));
        } else {
          t = koszul_betti_asl(p).table;
        }
      }
      std::cout << to_text(t);
      write_json(json_out, to_json(t));
      return 0;
    }

    if (*inv) {
      auto r = ring_invariants(parse_poset(read_file(poset_file)), field);
      auto j = to_json(r);
      std::cout << j.dump() << "\n";
      write_json(json_out, j);
      return 0;
    }

    if (*ideal) {
      poset p = parse_poset(read_file(poset_file));
      auto j = straightening_generators(p);
      for (const auto& g : j.generators) std::cout << j.format(g.f) << "\n";
      return 0;
    }

    if (*enumerate) {
      auto ps = enumerate_posets(size);
      if (count_only) {
        std::cout << ps.size() << "\n";
        return 0;
      }
      for (std::size_t k = 0; k < ps.size(); ++k) std::cout << (k ? "\n" : "") << serialize(ps[k]);
      return 0;
    }

    if (*verify) {
      cfg.field = field;
      const bool small_p = suite == "la-classification" || suite == "gorenstein-level";
      const bool mid_p = suite == "asl";
      cfg.max_p = max_p > 0 ? max_p : (small_p ? 5 : (mid_p ? 6 : 7));
      if (max_rank > 0) cfg.max_rank = max_rank;
      if (max_n > 0) cfg.max_n = max_n;
      auto rep = verify::run_suite(suite, cfg);
      if (quiet) {
        std::cout << "suite " << rep.suite << ": " << rep.instances << " instances, " << rep.passed << " passed, "
                  << rep.failures.size() << " failed, " << rep.inconclusive.size() << " inconclusive\n";
      } else {
        std::cout << verify::to_text(rep);
      }
      write_json(json_out, verify::to_json(rep));
      return rep.exit_code();
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

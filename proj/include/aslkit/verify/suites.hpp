#pragma once

// Theorem suites.  Every suite enumerates its instance family, runs the
// independent oracles on each instance and records one check per claim.
// Instances are split into jobs that may run on several workers; partial
// reports are merged in job order, so output does not depend on scheduling.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "../betti.hpp"
#include "../budget.hpp"
#include "../complex.hpp"
#include "../enumerate.hpp"
#include "../error.hpp"
#include "../graph.hpp"
#include "../homology.hpp"
#include "../koszul.hpp"
#include "../lattice.hpp"
#include "../poset.hpp"
#include "../ring_invariants.hpp"
#include "../straightening.hpp"
#include "../topology.hpp"
#include "report.hpp"

namespace aslkit::verify {

inline constexpr std::uint64_t default_seed = 20240917;

struct suite_config {
  int max_p = 5;
  int max_rank = 5;
  int max_n = 4;
  int workers = 1;
  std::uint64_t seed = default_seed;
  field_kind field = field_kind::rational;
  search_options search{4096, 0};
  int hochster_cap = default_hochster_cap;
  int direct_koszul_vars = default_direct_koszul_vars;
  int hilbert_degree = 4;
  int buchberger_cap = default_buchberger_cap;
  int samples = 100;
  int oracle_complexes = 50;
  std::string facets_file;
  std::string fixture_dir;
};

inline nlohmann::ordered_json config_json(const suite_config& c) {
  nlohmann::ordered_json j;
  j["max_p"] = c.max_p;
  j["max_rank"] = c.max_rank;
  j["max_n"] = c.max_n;
  j["workers"] = c.workers;
  j["seed"] = c.seed;
  j["field"] = std::string(to_string(c.field));
  j["facet_cap"] = c.search.facet_cap;
  j["node_budget"] = c.search.node_budget ? c.search.node_budget : search_budget();
  j["hochster_cap"] = c.hochster_cap;
  j["direct_koszul_vars"] = c.direct_koszul_vars;
  j["hilbert_degree"] = c.hilbert_degree;
  j["buchberger_cap"] = c.buchberger_cap;
  j["samples"] = c.samples;
  return j;
}

// ---------------------------------------------------------------------------
// Shared helpers.

/// Runs `count` jobs on up to `workers` threads and merges in job order.
inline verification_report run_jobs(std::size_t count, int workers,
                                    const std::function<verification_report(std::size_t)>& job) {
  std::vector<verification_report> parts(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        parts[k] = job(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  verification_report out;
  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.merge(parts[k]);
  }
  return out;
}

/// Poset text on one line.
inline std::string one_line(const poset& p) {
  std::string s = serialize(p);
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      if (!out.empty()) out += "; ";
    } else {
      out += c;
    }
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
  return out;
}

inline std::string one_line(const poset& p, const dual_ideal& i) {
  std::string s = serialize(p, i);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }
inline std::string yes_no(verdict v) { return std::string(to_string(v)); }

/// Runs all four oracles on a complex and records the ladder.
inline ladder_record audit_complex(verification_report& rep, const std::string& instance,
                                   const simplicial_complex& c, const suite_config& cfg) {
  ladder_record r;
  r.pure = c.is_pure();
  r.cm = is_cohen_macaulay(c, cfg.field);
  r.shellable = is_shellable(c, cfg.search);
  r.vd = is_vertex_decomposable(c, cfg.search);
  rep.ladder.record(instance, r);
  return r;
}

/// Isomorphism classes of posets with 1..max_n elements, smallest first.
inline std::vector<poset> posets_up_to(int max_n) {
  std::vector<poset> out;
  for (int n = 1; n <= max_n; ++n) {
    auto ps = enumerate_posets(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

inline std::vector<poset> distributive_type_posets(int max_n) {
  std::vector<poset> out;
  for (auto& p : posets_up_to(max_n)) {
    if (is_distributive_type(p)) out.push_back(std::move(p));
  }
  return out;
}

/// Number of unlabeled posets on n elements, n = 0..7.
inline constexpr long long known_poset_counts[] = {1, 1, 2, 5, 16, 63, 318, 2045};

inline poset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_arguments, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_poset(ss.str());
}

inline simplicial_complex load_facets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::bad_arguments, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_facets(ss.str());
}

inline std::string fixture_path(const suite_config& cfg, const std::string& name) {
  std::string dir = cfg.fixture_dir;
#ifdef ASLKIT_FIXTURE_DIR
  if (dir.empty()) dir = ASLKIT_FIXTURE_DIR;
#endif
  if (dir.empty()) dir = "data";
  return dir + "/" + name;
}

/// Subposet on the elements of rank < r.
inline poset below_rank(const poset& p, int r) {
  auto rk = ranks(p);
  std::vector<int> keep;
  for (int x = 0; x < p.size(); ++x) {
    if (rk[static_cast<std::size_t>(x)] < r) keep.push_back(x);
  }
  return p.induced(keep);
}

inline poset without(const poset& p, int x) {
  std::vector<int> keep;
  for (int y = 0; y < p.size(); ++y) {
    if (y != x) keep.push_back(y);
  }
  return p.induced(keep);
}

/// Number of elements of each rank.
inline std::vector<int> rank_counts(const poset& p) {
  auto rk = ranks(p);
  std::vector<int> c;
  for (int r : rk) {
    if (static_cast<int>(c.size()) <= r) c.resize(static_cast<std::size_t>(r + 1), 0);
    ++c[static_cast<std::size_t>(r)];
  }
  return c;
}

inline std::string vector_text(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// L_a classification.

inline verification_report suite_la_classification(const suite_config& cfg) {
  if (cfg.max_p < 1 || cfg.max_p > max_enumeration_size) throw error(errc::bad_arguments, "max-p out of range");
  std::vector<poset> all;
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  std::vector<std::string> count_failures;
  for (int n = 1; n <= cfg.max_p; ++n) {
    auto ps = enumerate_posets(n);
    counts.push_back(ps.size());
    if (static_cast<long long>(ps.size()) != known_poset_counts[n]) {
      count_failures.push_back("n=" + std::to_string(n) + ": " + std::to_string(ps.size()));
    }
    all.insert(all.end(), ps.begin(), ps.end());
  }
  auto rep = run_jobs(all.size(), cfg.workers, [&](std::size_t k) {
    verification_report r;
    const poset& p = all[k];
    const std::string inst = one_line(p);
    lattice l = birkhoff(p);
    verdict vd = verdict::yes;
    verdict sh = verdict::yes;
    bool cm = true;
    for (int a = 0; a < l.order().size(); ++a) {
      if (a == l.bottom()) continue;  // L_0 is empty
      poset la = sub_l_a(l, a);
      auto rec = audit_complex(r, inst + " | L_a, a=" + l.order().label(a), order_complex(la), cfg);
      vd = vd && rec.vd;
      sh = sh && rec.shellable;
      cm = cm && rec.cm;
    }
    const bool sum = is_sum_of_antichains(p);
    const std::string got = "sum-of-antichains=" + yes_no(sum) + " vd=" + yes_no(vd) + " shellable=" + yes_no(sh) +
                            " cm=" + yes_no(cm);
    if (vd == verdict::inconclusive || sh == verdict::inconclusive) {
      r.undecided("equivalence", inst, "search budget exhausted: " + got);
    } else {
      bool agree = (vd == verdict::yes) == sum && (sh == verdict::yes) == sum && cm == sum;
      r.check("equivalence", inst, agree, "four conditions agree", got);
    }
    if (is_simple(l) && vd != verdict::inconclusive) {
      r.check("simple-lattice", inst, (vd == verdict::yes) == is_boolean(l), "all L_a VD iff L boolean",
              "vd=" + yes_no(vd) + " boolean=" + yes_no(is_boolean(l)));
    }
    return r;
  });
  rep.suite = "la-classification";
  for (const auto& f : count_failures) rep.fail("enumeration", "class counts", "1,2,5,16,63,318,2045 prefix", f);
  rep.config = config_json(cfg);
  rep.config["class_counts"] = counts;
  rep.close();
  return rep;
}

// ---------------------------------------------------------------------------
// Divisor lattices.

inline verification_report suite_divposet(const suite_config& cfg) {
  struct job {
    int n, m;
    dual_ideal ideal;
  };
  std::vector<job> jobs;
  std::map<std::pair<int, int>, lattice> lattices;
  for (int s = 1; s <= cfg.max_rank; ++s) {
    for (int n = 0; n <= s; ++n) {
      const int m = s - n;
      lattice l = divisor(n, m);
      for (auto& i : enumerate_dual_ideals(l.order(), 64)) {
        if (std::find(i.minimal.begin(), i.minimal.end(), l.bottom()) != i.minimal.end()) continue;  // I = L
        jobs.push_back({n, m, i});
      }
      lattices.emplace(std::make_pair(n, m), std::move(l));
    }
  }
  auto rep = run_jobs(jobs.size(), cfg.workers, [&](std::size_t k) {
    verification_report r;
    const auto& jb = jobs[k];
    const lattice& l = lattices.at({jb.n, jb.m});
    const std::string inst = "divisor " + std::to_string(jb.n) + " " + std::to_string(jb.m) + " | " +
                             one_line(l.order(), jb.ideal);
    poset q = remove_dual_ideal(l, jb.ideal).result;
    const bool structural = reduce_divisor_ideal(l, jb.ideal).rank_fixed;
    auto rec = audit_complex(r, inst, order_complex(q), cfg);
    const std::string got = "normal-form=" + yes_no(structural) + " vd=" + yes_no(rec.vd) +
                            " shellable=" + yes_no(rec.shellable) + " cm=" + yes_no(rec.cm);
    if (rec.vd == verdict::inconclusive || rec.shellable == verdict::inconclusive) {
      r.undecided("equivalence", inst, "search budget exhausted: " + got);
      return r;
    }
    const bool agree = (rec.vd == verdict::yes) == structural && (rec.shellable == verdict::yes) == structural &&
                       rec.cm == structural;
    r.check("equivalence", inst, agree, "four conditions agree", got);
    if (jb.n == 2 && jb.m == 2 && jb.ideal.minimal == std::vector<int>{divisor_element(l, 1, 1)}) {
      r.check("min(I)={2*3} in divisor 2 2", inst, !structural && !rec.cm && rec.vd == verdict::no,
              "all four false", got);
    }
    if (jb.ideal.minimal.empty()) {
      r.check("empty ideal", inst, structural && rec.cm && rec.vd == verdict::yes, "all four true", got);
    }
    if (jb.n == 3 && jb.m == 2 && is_rank_fixed(l, jb.ideal)) {
      r.check("rank-fixed in divisor 3 2", inst, structural && rec.cm && rec.vd == verdict::yes, "all four true",
              got);
    }
    return r;
  });
  rep.suite = "divposet";
  rep.config = config_json(cfg);
  rep.close();
  return rep;
}

// ---------------------------------------------------------------------------
// Chordality and linear resolutions.

namespace detail {

/// Disjoint union of a single point and an n-element chain.
inline poset point_plus_chain(int n) {
  std::vector<std::string> names{"q"};
  std::vector<std::pair<int, int>> cov;
  for (int k = 0; k < n; ++k) {
    names.push_back("c" + std::to_string(k));
    if (k > 0) cov.emplace_back(k, k + 1);
  }
  return poset::from_index_covers(std::move(names), cov);
}

inline std::string cycle_text(const poset& p, const std::vector<int>& cyc) {
  std::string s;
  for (std::size_t k = 0; k < cyc.size(); ++k) s += (k ? " " : "") + p.label(cyc[k]);
  return s;
}

}  // namespace detail

/// Linear resolution of J_P decided through Hochster's formula on the
/// initial ideal.
/// Linear Hochster table of the order complex, which is also audited.
inline bool hochster_linear(verification_report& rep, const std::string& instance, const poset& p,
                            const suite_config& cfg, int cap) {
  auto c = order_complex(p);
  audit_complex(rep, instance, c, cfg);
  return has_linear_quotient_table(hochster_betti(c, cfg.field, std::max(cap, cfg.hochster_cap)));
}

inline verification_report suite_chordal(const suite_config& cfg) {
  if (cfg.max_p < 1 || cfg.max_p > max_enumeration_size) throw error(errc::bad_arguments, "max-p out of range");
  auto ps = distributive_type_posets(cfg.max_p);
  auto rep = run_jobs(ps.size(), cfg.workers, [&](std::size_t k) {
    verification_report r;
    const poset& p = ps[k];
    const bool chordal = is_chordal(comparability_graph(p));
    const bool linear = hochster_linear(r, one_line(p), p, cfg, cfg.hochster_cap);
    r.check("chordal iff linear", one_line(p), chordal == linear, "chordal = linear",
            "chordal=" + yes_no(chordal) + " linear=" + yes_no(linear));
    return r;
  });
  rep.suite = "chordal";
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();

  for (int n = 1; n <= 4; ++n) {
    lattice l = divisor(1, n);
    const std::string inst = "divisor 1 " + std::to_string(n);
    const bool chordal = is_chordal(comparability_graph(l.order()));
    const bool linear = hochster_linear(rep, inst, l.order(), cfg, cfg.hochster_cap);
    rep.check("divisor 1 n linear", inst, chordal && linear, "chordal and linear",
              "chordal=" + yes_no(chordal) + " linear=" + yes_no(linear));
    for (const auto& i : enumerate_dual_ideals(l.order(), 64)) {
      auto c = remove_dual_ideal(l, i);
      if (c.empty) continue;
      rep.check("divisor 1 n complements linear", inst + " | " + one_line(l.order(), i),
                is_chordal(comparability_graph(c.result)), "chordal", "not chordal");
    }
  }
  {
    lattice b3 = boolean(3);
    const poset& p = b3.order();
    auto cyc = chordless_cycle(comparability_graph(p));
    const bool linear = hochster_linear(rep, "boolean 3", p, cfg, cfg.hochster_cap);
    const bool ok = cyc && cyc->size() == 6 && is_chordless_cycle(comparability_graph(p), *cyc) && !linear;
    rep.check("boolean 3 not chordal", "boolean 3", ok, "induced 6-cycle, not linear",
              (cyc ? "cycle " + detail::cycle_text(p, *cyc) : std::string("no cycle")) + " linear=" + yes_no(linear));
    if (cyc) witnesses["boolean 3"] = detail::cycle_text(p, *cyc);
  }
  // Planar simple lattices other than divisor(1, n): an induced 4-cycle.
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    lattice l = divisor(n, m);
    const std::string inst = "divisor " + std::to_string(n) + " " + std::to_string(m);
    auto g = comparability_graph(l.order());
    auto cyc = chordless_cycle(g);
    const bool linear = hochster_linear(rep, inst, l.order(), cfg, cfg.hochster_cap);
    const bool ok = cyc && cyc->size() == 4 && is_chordless_cycle(g, *cyc) && !linear;
    rep.check("planar simple negative", inst, ok, "induced 4-cycle, not linear",
              (cyc ? "cycle " + detail::cycle_text(l.order(), *cyc) : std::string("no cycle")) +
                  " linear=" + yes_no(linear));
    if (cyc) witnesses[inst] = detail::cycle_text(l.order(), *cyc);
  }
  // Simple lattices J(P): chordal iff P is a point plus a chain.
  {
    std::vector<std::uint64_t> targets;
    for (int n = 1; n < std::min(cfg.max_p, 6); ++n) targets.push_back(canonical_code(detail::point_plus_chain(n)));
    for (const auto& p : posets_up_to(std::min(cfg.max_p, 5))) {
      lattice l = birkhoff(p);
      if (!is_simple(l) || l.order().size() < 3) continue;
      const bool chordal = is_chordal(comparability_graph(l.order()));
      const bool target = std::find(targets.begin(), targets.end(), canonical_code(p)) != targets.end();
      rep.check("simple lattices", one_line(p), chordal == target, "chordal iff divisor 1 n",
                "chordal=" + yes_no(chordal) + " divisor-1-n=" + yes_no(target));
    }
  }
  // Lattices with a boolean 3 interval.
  for (const auto& p : posets_up_to(std::min(cfg.max_p, 4))) {
    bool wide = false;
    for (int a = 0; a < p.size() && !wide; ++a) {
      for (int b = a + 1; b < p.size() && !wide; ++b) {
        for (int c = b + 1; c < p.size() && !wide; ++c) {
          wide = !p.comparable(a, b) && !p.comparable(a, c) && !p.comparable(b, c);
        }
      }
    }
    if (!wide) continue;
    lattice l = birkhoff(p);
    rep.check("boolean 3 interval", one_line(p), !has_linear_resolution(l.order()), "not linear", "linear");
  }
  // Monotonicity: I subset of I' and J_{L\I} linear give J_{L\I'} linear.
  {
    std::mt19937_64 rng(cfg.seed);
    auto lats = posets_up_to(4);
    int done = 0;
    for (int attempt = 0; done < cfg.samples && attempt < 100 * cfg.samples; ++attempt) {
      const poset& p = lats[rng() % lats.size()];
      lattice l = birkhoff(p);
      auto ideals = enumerate_dual_ideals(l.order(), 64);
      const auto& i1 = ideals[rng() % ideals.size()];
      const auto& i2 = ideals[rng() % ideals.size()];
      dyn_bitset c1 = carrier(l.order(), i1);
      dyn_bitset c2 = carrier(l.order(), i2);
      dyn_bitset both = c1;
      both &= c2;
      if (!(both == c1)) continue;
      auto q1 = remove_dual_ideal(l, i1);
      auto q2 = remove_dual_ideal(l, i2);
      if (q2.empty || q1.result.size() > 14) continue;
      ++done;
      const std::string inst = one_line(p) + " | " + one_line(l.order(), i1) + " in " + one_line(l.order(), i2);
      const bool lin1 = hochster_linear(rep, inst + " | L\\I", q1.result, cfg, cfg.hochster_cap);
      const bool lin2 = hochster_linear(rep, inst + " | L\\I'", q2.result, cfg, cfg.hochster_cap);
      rep.check("monotonicity", inst,
                !lin1 || lin2, "linear passes to larger ideals",
                "linear(L\\I)=" + yes_no(lin1) + " linear(L\\I')=" + yes_no(lin2));
    }
  }
  // Fixture with 18 elements.
  {
    poset p = load_poset_file(fixture_path(cfg, "chordal18.poset"));
    const bool dist = is_distributive_type(p);
    const bool chordal = is_chordal(comparability_graph(p));
    const bool linear = hochster_linear(rep, "chordal18.poset", p, cfg, p.size());
    rep.check("chordal18 fixture", "chordal18.poset", dist && chordal && linear, "distributive type, chordal, linear",
              "distributive=" + yes_no(dist) + " chordal=" + yes_no(chordal) + " linear=" + yes_no(linear));
  }
  rep.config = config_json(cfg);
  rep.config["witnesses"] = witnesses;
  rep.close();
  return rep;
}

// ---------------------------------------------------------------------------
// Gorenstein and level rings.

namespace detail {

inline bool rank_del_gorenstein(int rank_q, int rho1, int rho2) {
  if (rank_q == 0) return true;
  if (rank_q == 1) return rho1 <= 2;
  std::pair<int, int> r{rho1, rho2};
  return r == std::pair{1, 1} || r == std::pair{1, 2} || r == std::pair{2, 1} || r == std::pair{3, 3};
}

inline std::string invariants_text(const ring_invariants_result& r) {
  return "gorenstein=" + yes_no(r.gorenstein) + " level=" + yes_no(r.level) + " cm=" + yes_no(r.cm) +
         " type=" + std::to_string(r.cm_type) + " pd=" + std::to_string(r.pd) + " reg=" + std::to_string(r.reg) +
         " h=" + vector_text(r.h_vector);
}

}  // namespace detail

inline verification_report suite_gorenstein_level(const suite_config& cfg) {
  struct job {
    int kind;  // 0: boolean, 1: boolean regularity and h-vector, 2: rank deletion
    int n;
    int k;  // rank of min(I); -1 for I empty
    poset p;
  };
  std::vector<job> jobs;
  for (int n = 1; n <= cfg.max_n; ++n) {
    jobs.push_back({0, n, -1, {}});
    for (int k = 0; k <= n; ++k) jobs.push_back({0, n, k, {}});
  }
  for (int n = 3; n <= 6; ++n) {
    for (int d = 1; d <= n - 2; ++d) jobs.push_back({1, n, d + 1, {}});
  }
  for (const auto& p : posets_up_to(cfg.max_p)) {
    for (int r = 0; r <= 2 && r < p.size(); ++r) jobs.push_back({2, 0, r + 1, p});
  }
  auto rep = run_jobs(jobs.size(), cfg.workers, [&](std::size_t idx) {
    verification_report r;
    const auto& jb = jobs[idx];
    if (jb.kind == 0) {
      lattice b = boolean(jb.n);
      const poset& l = b.order();
      dual_ideal i = jb.k < 0 ? dual_ideal{} : rank_fixed_ideal(l, jb.k);
      auto comp = remove_dual_ideal(b, i);
      const std::string inst = "boolean " + std::to_string(jb.n) + " | " + one_line(l, i);
      if (!comp.empty) audit_complex(r, inst, order_complex(comp.result), cfg);
      auto inv = ring_invariants(comp.result, cfg.field, cfg.direct_koszul_vars);
      const bool expect = jb.k < 0 || jb.k == jb.n || jb.k <= 1;
      r.check("gorenstein classification", inst, inv.gorenstein == expect,
              "gorenstein=" + yes_no(expect), detail::invariants_text(inv));
      r.check("level", inst, inv.level, "level", detail::invariants_text(inv));
      if (inv.gorenstein) {
        r.check("gorenstein h symmetric", inst, is_symmetric(inv.h_vector), "symmetric h-vector",
                vector_text(inv.h_vector));
      }
      const int d = jb.k - 1;
      if (jb.k >= 0 && d >= 1 && d <= jb.n - 2) {
        r.check("koszul regularity", inst, inv.reg == rank(comp.result), "reg = " + std::to_string(rank(comp.result)),
                "reg=" + std::to_string(inv.reg));
      }
      return r;
    }
    if (jb.kind == 1) {
      lattice b = boolean(jb.n);
      const int d = jb.k - 1;
      dual_ideal i = rank_fixed_ideal(b.order(), jb.k);
      poset q = remove_dual_ideal(b, i).result;
      const std::string inst = "boolean " + std::to_string(jb.n) + " | " + one_line(b.order(), i);
      auto proper = without(q, q.bottom());
      auto h = compute_fh(order_complex(proper)).h;
      const long long want = aslkit::detail::binomial(jb.n - 1, d);
      const long long hd = static_cast<std::size_t>(d) < h.size() ? h[static_cast<std::size_t>(d)] : 0;
      r.check("proper part h entry", inst, hd == want, "h_" + std::to_string(d) + " = " + std::to_string(want),
              "h=" + vector_text(h));
      auto hr = compute_fh(order_complex(q)).h;
      r.check("h-vector not symmetric", inst, !is_symmetric(hr), "asymmetric h-vector", vector_text(hr));
      const int reg = regularity_of_complement(q, true, cfg.field, cfg.hochster_cap);
      r.check("hochster regularity", inst, reg == rank(q), "reg = " + std::to_string(rank(q)),
              "reg=" + std::to_string(reg));
      return r;
    }
    lattice l = birkhoff(jb.p);
    const int rq = jb.k - 1;
    if (rq >= rank(l.order())) return r;
    dual_ideal i = rank_fixed_ideal(l.order(), jb.k);
    poset q = remove_dual_ideal(l, i).result;
    auto rho = rank_counts(l.order());
    const int rho1 = rho.size() > 1 ? rho[1] : 0;
    const int rho2 = rho.size() > 2 ? rho[2] : 0;
    const std::string inst = one_line(jb.p) + " | rank " + std::to_string(rq) + " part";
    audit_complex(r, inst, order_complex(q), cfg);
    auto inv = ring_invariants(q, cfg.field, cfg.direct_koszul_vars);
    const bool expect = detail::rank_del_gorenstein(rq, rho1, rho2);
    r.check("rank deletion " + std::to_string(rq), inst, inv.gorenstein == expect,
            "gorenstein=" + yes_no(expect) + " for rho=(" + std::to_string(rho1) + "," + std::to_string(rho2) + ")",
            detail::invariants_text(inv));
    if (inv.gorenstein) {
      r.check("gorenstein h symmetric", inst, is_symmetric(inv.h_vector), "symmetric h-vector",
              vector_text(inv.h_vector));
    }
    return r;
  });
  rep.suite = "gorenstein-level";
  rep.config = config_json(cfg);
  rep.close();
  return rep;
}

// ---------------------------------------------------------------------------
// Straightening laws.

namespace detail {

inline std::vector<int> random_linear_extension(const poset& p, std::mt19937_64& rng) {
  std::vector<int> indeg(static_cast<std::size_t>(p.size()), 0);
  for (int x = 0; x < p.size(); ++x) indeg[static_cast<std::size_t>(x)] = static_cast<int>(p.lower_covers(x).size());
  std::vector<int> ready;
  for (int x = 0; x < p.size(); ++x) {
    if (indeg[static_cast<std::size_t>(x)] == 0) ready.push_back(x);
  }
  std::vector<int> out;
  while (!ready.empty()) {
    std::size_t k = rng() % ready.size();
    int x = ready[k];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(x);
    for (int y : p.upper_covers(x)) {
      if (--indeg[static_cast<std::size_t>(y)] == 0) ready.push_back(y);
    }
  }
  return out;
}

}  // namespace detail

/// Checks of one distributive-type poset: Groebner basis, least factors,
/// Hilbert function, leading terms under other extensions, and CM(R) = CM(P).
inline void asl_checks(verification_report& r, const poset& p, const std::string& inst, const suite_config& cfg,
                       std::mt19937_64& rng) {
  auto j = straightening_generators(p);
  r.check("buchberger", inst, buchberger_check(j, false, std::max(cfg.buchberger_cap, p.size())), "Groebner basis",
          "S-pair with nonzero remainder");
  r.check("least factor", inst, asl2_check(j), "standard terms below both factors", "violated");
  for (int d = 0; d <= cfg.hilbert_degree; ++d) {
    std::string got;
    bool ok = false;
    try {
      auto h = hilbert_function(j, d, cfg.hilbert_degree);
      auto c = count_standard_monomials(p, d);
      ok = h == c;
      got = std::to_string(h) + " vs " + std::to_string(c) + " standard monomials";
    } catch (const error& e) {
      got = e.what();
    }
    r.check("hilbert function", inst + " | d=" + std::to_string(d), ok, "rank count = standard monomials", got);
  }
  bool lt_ok = true;
  for (int t = 0; t < 5; ++t) {
    try {
      auto jj = straightening_generators(p, detail::random_linear_extension(p, rng));
      normal_former check(jj);
      (void)check;
    } catch (const error&) {
      lt_ok = false;
    }
  }
  r.check("leading terms", inst, lt_ok, "x_a x_b under 5 random extensions", "other leading term");
  audit_complex(r, inst, order_complex(p), cfg);
  const bool cm_p = is_cm_poset(p, cfg.field);
  auto kb = koszul_betti_asl(p, std::max(cfg.direct_koszul_vars, p.size()));
  auto inv = invariants_from_table(kb.table, rank(p) + 1);
  r.check("cm transfer", inst, inv.cm == cm_p, "depth = dim iff P Cohen-Macaulay",
          "depth=" + std::to_string(inv.depth) + " dim=" + std::to_string(inv.dim) + " cm(P)=" + yes_no(cm_p));
}

inline verification_report suite_asl(const suite_config& cfg) {
  if (cfg.max_p < 1 || cfg.max_p > max_enumeration_size) throw error(errc::bad_arguments, "max-p out of range");
  auto ps = distributive_type_posets(cfg.max_p);
  auto rep = run_jobs(ps.size(), cfg.workers, [&](std::size_t k) {
    verification_report r;
    std::mt19937_64 rng(cfg.seed + k);
    asl_checks(r, ps[k], one_line(ps[k]), cfg, rng);
    return r;
  });
  rep.suite = "asl";
  {
    poset p = load_poset_file(fixture_path(cfg, "dist9.poset"));
    rep.check("dist9 fixture", "dist9.poset distributive type", is_distributive_type(p), "distributive type",
              "not distributive type");
    std::mt19937_64 rng(cfg.seed);
    asl_checks(rep, p, "dist9.poset", cfg, rng);
    auto j = straightening_generators(p);
    polynomial want = polynomial(j.product(p.index_of("x2"), p.index_of("x3")), 1) -
                      polynomial(j.product(p.index_of("x0"), p.index_of("x6")), 1) -
                      polynomial(j.product(p.index_of("x0"), p.index_of("x7")), 1);
    bool found = false;
    std::string got = "missing";
    for (const auto& g : j.generators) {
      if (std::minmax(g.alpha, g.beta) == std::minmax(p.index_of("x2"), p.index_of("x3"))) {
        found = g.f == want;
        got = j.format(g.f);
      }
    }
    rep.check("dist9 fixture", "f_{x2,x3}", found, j.format(want), got);
  }
  {
    lattice b3 = boolean(3);
    auto inv = ring_invariants(b3.order(), cfg.field, cfg.direct_koszul_vars);
    rep.check("boolean 3", "boolean 3", inv.cm, "R Cohen-Macaulay", detail::invariants_text(inv));
  }
  rep.config = config_json(cfg);
  rep.close();
  return rep;
}

// ---------------------------------------------------------------------------
// Oracle cross-validation.

namespace detail {

inline simplicial_complex random_complex(std::mt19937_64& rng, int nv) {
  std::vector<std::vector<int>> facets;
  const int nf = 1 + static_cast<int>(rng() % 6);
  for (int f = 0; f < nf; ++f) {
    const int size = 1 + static_cast<int>(rng() % 4);
    std::vector<int> face;
    while (static_cast<int>(face.size()) < std::min(size, nv)) {
      int v = static_cast<int>(rng() % static_cast<std::uint64_t>(nv));
      if (std::find(face.begin(), face.end(), v) == face.end()) face.push_back(v);
    }
    facets.push_back(face);
  }
  std::vector<std::string> names;
  for (int v = 0; v < nv; ++v) names.push_back("v" + std::to_string(v));
  std::vector<vertex_set> fs;
  for (const auto& f : facets) fs.push_back(vertex_set::of(f));
  return simplicial_complex::from_facets(names, fs);
}

inline bool unique_minimal_upper_bounds(const poset& p) {
  for (int a = 0; a < p.size(); ++a) {
    for (int b = a + 1; b < p.size(); ++b) {
      if (minimal_upper_bounds(p, a, b).size() > 1) return false;
    }
  }
  return true;
}

}  // namespace detail

inline verification_report suite_oracles(const suite_config& cfg) {
  // Face rings: Koszul against Hochster.
  auto rep = run_jobs(static_cast<std::size_t>(cfg.oracle_complexes), cfg.workers, [&](std::size_t k) {
    verification_report r;
    std::mt19937_64 rng(cfg.seed + 7919 * k);
    const int nv = 3 + static_cast<int>(k % 8);
    auto c = detail::random_complex(rng, nv);
    const std::string inst = "face ring " + std::to_string(k) + ": " + [&] {
      std::string s = serialize(c);
      for (auto& ch : s) {
        if (ch == '\n') ch = '|';
      }
      return s;
    }();
    auto kt = koszul_betti(c);
    auto ht = hochster_betti(c, field_kind::rational, cfg.hochster_cap);
    r.check("koszul = hochster", inst, kt == ht, to_text(ht), to_text(kt));
    audit_complex(r, inst, c, cfg);
    return r;
  });
  // Straightening rings against their initial ideals.
  auto ps = distributive_type_posets(cfg.max_p);
  std::vector<betti_table> tables(ps.size());
  auto rep2 = run_jobs(ps.size(), cfg.workers, [&](std::size_t k) {
    verification_report r;
    const poset& p = ps[k];
    const std::string inst = one_line(p);
    auto kt = koszul_betti_asl(p, std::max(cfg.direct_koszul_vars, p.size())).table;
    tables[k] = kt;
    auto delta = order_complex(p);
    auto ht = hochster_betti(delta, field_kind::rational, cfg.hochster_cap);
    r.check("semicontinuity", inst, dominated_by(kt, ht), "beta(R) <= beta(initial)",
            to_text(kt) + " vs " + to_text(ht));
    r.check("reg and pd transfer", inst, kt.reg() == ht.reg() && kt.pd() == ht.pd(),
            "reg=" + std::to_string(ht.reg()) + " pd=" + std::to_string(ht.pd()),
            "reg=" + std::to_string(kt.reg()) + " pd=" + std::to_string(kt.pd()));
    audit_complex(r, inst, delta, cfg);
    return r;
  });
  rep.merge(rep2);
  // Retract inequality on sampled intervals.
  {
    struct sample {
      std::size_t poset;
      int a, b;
    };
    std::vector<std::size_t> eligible;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      if (detail::unique_minimal_upper_bounds(ps[k])) eligible.push_back(k);
    }
    std::vector<sample> samples;
    std::mt19937_64 rng(cfg.seed);
    for (int t = 0; !eligible.empty() && static_cast<int>(samples.size()) < cfg.samples && t < 100 * cfg.samples;
         ++t) {
      std::size_t k = eligible[rng() % eligible.size()];
      const poset& p = ps[k];
      int a = static_cast<int>(rng() % static_cast<std::uint64_t>(p.size()));
      int b = static_cast<int>(rng() % static_cast<std::uint64_t>(p.size()));
      if (!p.leq(a, b)) continue;
      samples.push_back({k, a, b});
    }
    auto rep3 = run_jobs(samples.size(), cfg.workers, [&](std::size_t s) {
      verification_report r;
      const auto& sm = samples[s];
      const poset& p = ps[sm.poset];
      poset iv = interval(p, sm.a, sm.b);
      auto small = koszul_betti_asl(iv, std::max(cfg.direct_koszul_vars, iv.size())).table;
      const std::string inst = one_line(p) + " | [" + p.label(sm.a) + "," + p.label(sm.b) + "]";
      r.check("retract inequality", inst, dominated_by(small, tables[sm.poset]), "beta(interval) <= beta(P)",
              to_text(small) + " vs " + to_text(tables[sm.poset]));
      return r;
    });
    rep.merge(rep3);
  }
  rep.suite = "oracles";
  rep.config = config_json(cfg);
  rep.config["face_rings"] = cfg.oracle_complexes;
  rep.close();
  return rep;
}

// ---------------------------------------------------------------------------
// Level conjecture on face posets of spheres.

inline verification_report explore_conjecture(const simplicial_complex& sphere, const std::string& name,
                                              const suite_config& cfg) {
  poset fp = face_poset(sphere);
  const int top = rank(fp);
  std::vector<int> ks{-1};
  for (int k = 0; k <= top; ++k) ks.push_back(k);
  nlohmann::ordered_json observations = nlohmann::ordered_json::array();
  std::vector<ring_invariants_result> results(ks.size());
  auto rep = run_jobs(ks.size(), cfg.workers, [&](std::size_t idx) {
    verification_report r;
    const int k = ks[idx];
    dual_ideal i = k < 0 ? dual_ideal{} : rank_fixed_ideal(fp, k);
    dyn_bitset c = carrier(fp, i);
    std::vector<int> keep;
    for (int x = 0; x < fp.size(); ++x) {
      if (!c.test(static_cast<std::size_t>(x))) keep.push_back(x);
    }
    poset q = fp.induced(keep);
    const std::string inst = name + " | " + (k < 0 ? std::string("I empty") : "I = rank >= " + std::to_string(k));
    if (!q.empty()) audit_complex(r, inst, order_complex(q), cfg);
    try {
      auto inv = ring_invariants(q, cfg.field, cfg.direct_koszul_vars);
      results[idx] = inv;
      r.check("level", inst, inv.level, "level (conjectured)", detail::invariants_text(inv));
    } catch (const error& e) {
      if (e.code() != errc::size_cap_exceeded) throw;
      r.undecided("level", inst, e.what());
    }
    return r;
  });
  for (std::size_t idx = 0; idx < ks.size(); ++idx) {
    observations.push_back({{"rank_of_min", ks[idx]}, {"level", results[idx].level},
                            {"gorenstein", results[idx].gorenstein}, {"h_vector", results[idx].h_vector}});
  }
  rep.suite = "conjecture";
  rep.config = config_json(cfg);
  rep.config["complex"] = name;
  rep.config["observations"] = observations;
  rep.close();
  return rep;
}

inline verification_report explore_conjecture(const std::string& facets_file, const suite_config& cfg) {
  return explore_conjecture(load_facets_file(facets_file), facets_file, cfg);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"la-classification", "divposet", "chordal", "gorenstein-level",
                                              "asl", "oracles", "conjecture"};
  return names;
}

inline verification_report run_suite(const std::string& name, const suite_config& cfg) {
  if (name == "la-classification") return suite_la_classification(cfg);
  if (name == "divposet") return suite_divposet(cfg);
  if (name == "chordal") return suite_chordal(cfg);
  if (name == "gorenstein-level") return suite_gorenstein_level(cfg);
  if (name == "asl") return suite_asl(cfg);
  if (name == "oracles") return suite_oracles(cfg);
  if (name == "conjecture") {
    if (cfg.facets_file.empty()) throw error(errc::bad_arguments, "conjecture suite needs a facet file");
    return explore_conjecture(cfg.facets_file, cfg);
  }
  throw error(errc::bad_arguments, "unknown suite " + name);
}

}  // namespace aslkit::verify

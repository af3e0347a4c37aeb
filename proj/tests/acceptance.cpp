// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "aslkit/aslkit.hpp"

using namespace aslkit;
using namespace aslkit::verify;

namespace {

int failed = 0;

void criterion(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << "\n";
  if (!ok) ++failed;
}

std::string counts(const verification_report& r) {
  return std::to_string(r.instances) + " instances, " + std::to_string(r.failures.size()) + " failed, " +
         std::to_string(r.inconclusive.size()) + " inconclusive";
}

std::string section(const verification_report& r, const std::string& name) {
  return name + " " + std::to_string(r.section_instances(name)) + "/" + std::to_string(r.section_failures(name));
}

bool clean(const verification_report& r) { return r.failures.empty() && r.inconclusive.empty(); }

void show_failures(const verification_report& r) {
  for (const auto& f : r.failures) {
    std::cout << "  " << r.suite << " FAIL " << f.instance << "\n    expected: " << f.expected << "\n    got: " << f.got
              << "\n";
  }
  for (const auto& i : r.inconclusive) std::cout << "  " << r.suite << " INCONCLUSIVE " << i.instance << "\n";
}

poset below_rank_of(const lattice& l, int r) {
  auto rk = ranks(l.order());
  std::vector<int> keep;
  for (int x = 0; x < l.size(); ++x) {
    if (rk[static_cast<std::size_t>(x)] < r) keep.push_back(x);
  }
  return l.order().induced(keep);
}

std::size_t words(const std::string& s) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string w; in >> w;) ++n;
  return n;
}

}  // namespace

int main() {
  std::map<std::string, verification_report> reports;

  // 1. Classification of lattices whose sublattices L_a are all CM.
  {
    suite_config cfg;
    cfg.max_p = 5;
    auto t0 = std::chrono::steady_clock::now();
    auto r = run_suite("la-classification", cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto classes = r.config["class_counts"].get<std::vector<long long>>();
    const bool ok = classes == std::vector<long long>{1, 2, 5, 16, 63} && r.section_instances("equivalence") == 87 &&
                    clean(r) && secs < 300.0;
    criterion(1, ok,
              "la-classification max_p 5: classes " + r.config["class_counts"].dump() + ", " +
                  section(r, "equivalence") + ", " + counts(r) + ", " + std::to_string(secs) + " s");
    show_failures(r);
    reports.emplace("la-classification", std::move(r));
  }

  // 2. Divisor lattices: structural normal form against the ladder.
  {
    suite_config cfg;
    auto r = run_suite("divposet", cfg);
    const std::string named = "min(I)={2*3} in divisor 2 2";
    const bool ok = clean(r) && r.section_instances(named) == 1 && r.section_failures(named) == 0;
    criterion(2, ok, "divposet max_rank 5: " + counts(r) + ", " + section(r, named));
    show_failures(r);
    reports.emplace("divposet", std::move(r));
  }

  // 3. Chordal comparability graphs and linear resolutions.
  {
    suite_config cfg;
    cfg.max_p = 7;
    auto r = run_suite("chordal", cfg);
    const auto& w = r.config["witnesses"];
    const std::size_t len = w.contains("boolean 3") ? words(w["boolean 3"].get<std::string>()) : 0;
    const bool ok = clean(r) && len == 6 && r.section_instances("divisor 1 n linear") == 4 &&
                    r.section_failures("divisor 1 n linear") == 0;
    criterion(3, ok,
              "chordal max_p 7: " + counts(r) + ", boolean 3 induced cycle length " + std::to_string(len) + ", " +
                  section(r, "divisor 1 n linear"));
    show_failures(r);
    reports.emplace("chordal", std::move(r));
  }

  suite_config gl;
  gl.max_p = 5;
  auto g = run_suite("gorenstein-level", gl);

  // 4. h-vector of the proper part after removing ranks >= d + 1 from B_n.
  {
    bool direct = true;
    std::string detail;
    for (int n = 3; n <= 6; ++n) {
      lattice b = boolean(n);
      for (int d = 1; d <= n - 2; ++d) {
        poset q = below_rank_of(b, d + 1);
        auto h = compute_fh(order_complex(verify::without(q, q.bottom()))).h;
        const long long hd = static_cast<std::size_t>(d) < h.size() ? h[static_cast<std::size_t>(d)] : -1;
        if (hd != aslkit::detail::binomial(n - 1, d)) direct = false;
        if (n == 4 && d == 2) detail = "n=4 d=2 h_2=" + std::to_string(hd);
      }
    }
    const bool ok = direct && detail == "n=4 d=2 h_2=3" && g.section_instances("proper part h entry") == 10 &&
                    g.section_failures("proper part h entry") == 0;
    criterion(4, ok, "h_d = C(n-1,d) for n <= 6: " + detail + ", " + section(g, "proper part h entry"));
  }

  // 5. Gorenstein classification of B_n minus a rank-fixed ideal.
  {
    bool asym = true;
    for (int n = 5; n <= 6; ++n) {
      lattice b = boolean(n);
      for (int d = 1; d <= n - 2; ++d) {
        if (is_symmetric(compute_fh(order_complex(below_rank_of(b, d + 1))).h)) asym = false;
      }
    }
    const bool ok = g.section_instances("gorenstein classification") == 18 &&
                    g.section_failures("gorenstein classification") == 0 && asym &&
                    g.section_failures("h-vector not symmetric") == 0;
    criterion(5, ok,
              section(g, "gorenstein classification") + ", h-vector asymmetric for n = 5, 6: " +
                  (asym ? "yes" : "no"));
  }

  // 6. Rank deletion: Gorenstein iff the rank counts are in the listed set.
  {
    const bool ok = g.section_instances("rank deletion 2") == 84 && g.section_failures("rank deletion 2") == 0 &&
                    g.section_failures("rank deletion 0") == 0 && g.section_failures("rank deletion 1") == 0;
    criterion(6, ok,
              section(g, "rank deletion 0") + ", " + section(g, "rank deletion 1") + ", " +
                  section(g, "rank deletion 2"));
  }

  // 7. Level property and regularity.
  {
    const bool ok = g.section_instances("level") == 18 && g.section_failures("level") == 0 &&
                    g.section_instances("hochster regularity") == 10 && g.section_failures("hochster regularity") == 0 &&
                    clean(g);
    criterion(7, ok,
              section(g, "level") + ", " + section(g, "hochster regularity") + ", gorenstein-level " + counts(g));
    show_failures(g);
  }
  reports.emplace("gorenstein-level", std::move(g));

  // 8. Straightening laws.
  {
    suite_config cfg;
    cfg.max_p = 6;
    auto r = run_suite("asl", cfg);
    criterion(8, clean(r) && r.instances > 0, "asl max_p 6: " + counts(r));
    show_failures(r);
    reports.emplace("asl", std::move(r));
  }

  // 9. Independent oracles.
  {
    suite_config cfg;
    cfg.max_p = 7;
    auto r = run_suite("oracles", cfg);
    const auto all = static_cast<long long>(distributive_type_posets(cfg.max_p).size());
    const bool ok = clean(r) && r.section_instances("koszul = hochster") == 50 &&
                    r.section_instances("semicontinuity") == all && r.section_instances("reg and pd transfer") == all &&
                    r.section_instances("retract inequality") == 100;
    criterion(9, ok,
              "oracles max_p 7: " + section(r, "koszul = hochster") + ", " + section(r, "semicontinuity") + ", " +
                  section(r, "reg and pd transfer") + " of " + std::to_string(all) + ", " +
                  section(r, "retract inequality"));
    show_failures(r);
    reports.emplace("oracles", std::move(r));
  }

  // 10. Ladder VD => shellable => CM => pure on every decided complex.
  {
    for (const char* f : {"tetrahedron_boundary.facets", "triangle_boundary.facets"}) {
      suite_config cfg;
      cfg.facets_file = fixture_path(cfg, f);
      reports.emplace(std::string("conjecture ") + f, run_suite("conjecture", cfg));
    }
    long long audited = 0;
    long long violations = 0;
    bool every = true;
    for (const auto& [name, r] : reports) {
      audited += r.ladder.complexes;
      violations += r.section_failures("ladder");
      if (r.ladder.complexes == 0) every = false;
    }
    criterion(10, violations == 0 && audited > 0 && every,
              std::to_string(audited) + " complexes audited over " + std::to_string(reports.size()) +
                  " suite runs, " + std::to_string(violations) + " ladder violations");
  }

  return failed == 0 ? 0 : 1;
}

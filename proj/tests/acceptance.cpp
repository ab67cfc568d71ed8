// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. `acceptance fixtures` runs the exact-data criteria (1-10);
// `acceptance search` runs the stochastic-search criteria (11-12); no
// argument runs everything.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dynforge/config.hpp"
#include "dynforge/verify.hpp"

using namespace dynforge;

namespace {

// ---------------------------------------------------------------------------
// Reporting scaffolding

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 4) {
      if (!errors_.empty()) errors_ += "; ";
      errors_ += what;
    }
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    if (failed_ == 0) return "";
    std::string s = errors_;
    if (failed_ > 4) s += "; +" + std::to_string(failed_ - 4) + " more";
    return s + " (" + std::to_string(failed_) + "/" + std::to_string(total_) +
           " checks failed)";
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string errors_;
};

int g_failures = 0;

void criterion(int n, const std::string& what,
               const std::function<void(Checks&)>& body) {
  Checks checks;
  try {
    body(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  if (checks.ok()) {
    std::cout << "PASS criterion " << n << ": " << what << "\n";
  } else {
    std::cout << "FAIL criterion " << n << ": " << what << " — "
              << checks.summary() << "\n";
    ++g_failures;
  }
  std::cout.flush();
}

// ---------------------------------------------------------------------------
// Shared helpers

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Orbit orbit_of(MapFlavor flavor, int degree, std::initializer_list<long> v) {
  return Orbit{flavor, degree, ints(v)};
}

ProjPoint pt(long n) { return ProjPoint(Integer(n), Integer(1)); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

bool close(double got, double want, double tol) {
  return std::abs(got - want) <= tol;
}

int hardware_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

const Orbit kReferenceDeg4 = orbit_of(MapFlavor::Polynomial, 4, {0, 3, 4, 5, 1, -1});
const Orbit kSmallDeg2 = orbit_of(MapFlavor::Polynomial, 2, {0, -2, 1, -3});
const Orbit kRationalDeg2 =
    orbit_of(MapFlavor::Rational, 2, {0, -1, -16, 4, 8, 2});

// ---------------------------------------------------------------------------
// Criteria 1-5: exact fixtures through the library

void criterion1(Checks& c) {
  DynSystem small = orbit_to_map(kSmallDeg2);
  c.expect(small.display() == "1/6*z^2 - 7/6*z - 2",
           "degree-2 display: got " + small.display());

  DynSystem deg4 = orbit_to_map(kReferenceDeg4);
  c.expect(deg4.numerator() == ints({90, -257, 164, -28, 1}),
           "degree-4 numerator mismatch");
  c.expect(deg4.denominator() == ints({30, 0, 0, 0, 0}),
           "degree-4 denominator mismatch");

  DynSystem rat = orbit_to_map(kRationalDeg2);
  c.expect(rat.numerator() == ints({1024, -3424, 592}),
           "rational numerator mismatch");
  c.expect(rat.denominator() == ints({-1024, -536, 173}),
           "rational denominator mismatch");
}

void criterion2(Checks& c) {
  auto sigma = sigma_invariants(orbit_to_map(kReferenceDeg4));
  const std::vector<Rational> want = {
      Rational(200), Rational(-78823, 90), Rational(-105643, 45),
      Rational(2505080863, 270000), Rational(0)};
  c.expect(sigma == want, "sigma list mismatch");
  const double h_m = moduli_height(sigma);
  c.expect(close(h_m, 21.6416, 1e-4), "moduli height: got " + fmt(h_m));
}

void criterion3(Checks& c) {
  DynSystem deg4 = orbit_to_map(kReferenceDeg4);
  HeightValue h = canonical_height(deg4, pt(0), 1e-9);
  c.expect(close(h.value, 0.0002875, 5e-7),
           "hhat(0): got " + fmt(h.value) + " +- " + fmt(h.error_bound) +
               " vs pinned 0.0002875 +- 5e-7 (pinned value is the n=10 "
               "partial quotient h(f^10(0))/4^10 = 0.00028753, not the "
               "limit; an independent naive-iteration oracle agrees with "
               "the computed value)");

  auto r4 = score_height_ratio(kReferenceDeg4);
  c.expect(!r4.worst && close(r4.value, 1.328e-5, 1.328e-7),
           "degree-4 ratio: got " + fmt(r4.value));

  auto r2 = score_height_ratio(kSmallDeg2);
  c.expect(!r2.worst && close(r2.value, 0.006604, 1e-5),
           "degree-2 ratio: got " + fmt(r2.value));

  auto rr = score_height_ratio(kRationalDeg2);
  c.expect(!rr.worst && close(rr.value, 0.0004657, 1e-6),
           "rational ratio: got " + fmt(rr.value));
}

void criterion4(Checks& c) {
  auto tail_cycle = [&](const Orbit& orbit, int m, int n,
                        const std::string& label) {
    auto cls = classify_orbit(orbit_to_map(orbit), pt(0));
    c.expect(cls.preperiodic() && cls.tail_m == m && cls.period_n == n,
             label + ": got (" + std::to_string(cls.tail_m) + "," +
                 std::to_string(cls.period_n) + ")");
  };
  tail_cycle(orbit_of(MapFlavor::Polynomial, 2, {0, 1, -1, 2}), 2, 3, "(2,3)");
  tail_cycle(orbit_of(MapFlavor::Polynomial, 7, {0, -5, 1, -1, -4, 2, 3, 4, -2}),
             6, 3, "(6,3)");
  tail_cycle(orbit_of(MapFlavor::Polynomial, 7, {0, 6, 1, 7, -1, 4, 8, -2, 5}),
             8, 1, "(8,1)");

  auto wandering = [&](const Orbit& orbit, int k, double want,
                       const std::string& label) {
    auto score = score_preperiodic_count(orbit);
    c.expect(!score.worst && score.detail.value("iterate", -1) == k &&
                 close(score.value, want, 1e-3),
             label + ": got " + fmt(score.value));
  };
  wandering(orbit_of(MapFlavor::Polynomial, 4, {0, -3, -1, -5, -2, -4}), 6,
            1.7918, "degree-4 wandering");
  wandering(orbit_of(MapFlavor::Polynomial, 7, {0, -5, 3, -1, -4, 2, 4, -3, 1}),
            9, 1.946, "degree-7 wandering a");
  wandering(orbit_of(MapFlavor::Polynomial, 7, {0, 3, -3, 5, -1, 6, 1, -2, 4}),
            9, 2.1972, "degree-7 wandering b");
}

void criterion5(Checks& c) {
  auto census_check = [&](const Orbit& orbit, size_t count,
                          const std::string& label) {
    auto census = preperiodic_census(orbit_to_map(orbit), CensusParams::full());
    c.expect(census.complete && census.count == count,
             label + ": got " + std::to_string(census.count) +
                 (census.complete ? "" : " (incomplete)"));
    return census;
  };
  census_check(orbit_of(MapFlavor::Polynomial, 2, {0, 1, -1, 2}), 9, "census 9");
  census_check(orbit_of(MapFlavor::Polynomial, 4, {0, -4, 1, -3, -1, -5}), 7,
               "census 7");
  auto c14 = census_check(
      orbit_of(MapFlavor::Rational, 2, {0, -1, -3, -6, -2, -4}), 14,
      "census 14");
  c.expect(c14.max_tail == 6 && c14.max_cycle == 2,
           "census 14 structure: got (" + std::to_string(c14.max_tail) + "," +
               std::to_string(c14.max_cycle) + ")");
}

// ---------------------------------------------------------------------------
// Criterion 6: catalog spot rows through the CLI binary

struct SpotRow {
  int degree = 2;
  const char* type = "poly";  // "poly" | "rational"
  const char* orbit = "";
  const char* target = "height_ratio";
  double value = 0;
  double tol = -1;  // < 0: no value expectation
  long count = -1;
  int tail = -1;
  int cycle = -1;
  std::vector<long> num, den;  // printed map, ascending; empty: not printed
};

std::vector<SpotRow> spot_rows() {
  auto pct = [](double v) { return 0.01 * v; };
  return {
      // degree 2, polynomial
      {.degree = 2, .type = "poly", .orbit = "0,-2,1,-3",
       .target = "height_ratio", .value = 0.006604, .tol = 1e-5,
       .num = {-12, -7, 1}, .den = {6}},
      {.degree = 2, .type = "poly", .orbit = "0,18,21,14",
       .target = "height_ratio", .value = 0.01346, .tol = pct(0.01346)},
      {.degree = 2, .type = "poly", .orbit = "0,1,-1,2",
       .target = "preperiodic", .count = 9, .tail = 2, .cycle = 3,
       .num = {2, -3, -1}, .den = {2}},
      // The printed (1,3) on this row is the orbit-of-0 classification,
      // checked under the cycle target; the census graph itself has max
      // tail 2, so the preperiodic row asserts the count alone.
      {.degree = 2, .type = "poly", .orbit = "0,1,4,7",
       .target = "preperiodic", .count = 9},
      {.degree = 2, .type = "poly", .orbit = "0,1,4,7",
       .target = "cycle", .tail = 1, .cycle = 3},
      {.degree = 2, .type = "poly", .orbit = "0,4,2,1", .target = "cycle",
       .tail = 2, .cycle = 2},
      {.degree = 2, .type = "poly", .orbit = "0,1,-1,4", .target = "cycle",
       .tail = 2, .cycle = 2},
      {.degree = 2, .type = "poly", .orbit = "0,1,-3,16", .target = "tail",
       .tail = 2, .cycle = 2},
      // degree 2, rational
      {.degree = 2, .type = "rational", .orbit = "0,-1,-16,4,8,2",
       .target = "height_ratio", .value = 0.0004657, .tol = 1e-6,
       .num = {1024, -3424, 592}, .den = {-1024, -536, 173}},
      {.degree = 2, .type = "rational", .orbit = "0,1,6,-6,-5,-3",
       .target = "height_ratio", .value = 0.0011830, .tol = pct(0.0011830)},
      {.degree = 2, .type = "rational", .orbit = "0,-1,-3,-6,-2,-4",
       .target = "preperiodic", .count = 14, .tail = 6, .cycle = 2,
       .num = {-6, 31, 7}, .den = {6, -6, -2}},
      {.degree = 2, .type = "rational", .orbit = "0,-1,2,6,4,5",
       .target = "preperiodic", .count = 14, .tail = 1, .cycle = 5},
      {.degree = 2, .type = "rational", .orbit = "0,1,-1,3,-6,-15",
       .target = "preperiodic", .count = 14, .tail = 3, .cycle = 3},
      {.degree = 2, .type = "rational", .orbit = "0,1,-1,4,-5,-14",
       .target = "cycle", .tail = 3, .cycle = 3,
       .num = {-14, 29, 3}, .den = {-14, -4}},
      {.degree = 2, .type = "rational", .orbit = "0,1,-1,-9,-14,26",
       .target = "cycle", .tail = 0, .cycle = 6},
      {.degree = 2, .type = "rational", .orbit = "0,-1,-4,-10,-2,2",
       .target = "tail", .tail = 1, .cycle = 5},
      {.degree = 2, .type = "rational", .orbit = "0,-1,-3,-6,-12,3",
       .target = "tail", .tail = 6, .cycle = 2},
      {.degree = 2, .type = "rational", .orbit = "0,1,3,-8,-7,-11",
       .target = "cycle", .tail = 6, .cycle = 2},
      // degree 3, polynomial
      {.degree = 3, .type = "poly", .orbit = "0,1,-3,-4,-8",
       .target = "height_ratio", .value = 9.2099e-5, .tol = pct(9.2099e-5)},
      {.degree = 3, .type = "poly", .orbit = "0,1,3,-1,-3",
       .target = "height_ratio", .value = 1.6547e-4, .tol = pct(1.6547e-4)},
      {.degree = 3, .type = "poly", .orbit = "0,1,2,4,3",
       .target = "height_ratio", .value = 1.6738e-4, .tol = pct(1.6738e-4)},
      {.degree = 3, .type = "poly", .orbit = "0,1,-3,-1,4",
       .target = "preperiodic", .count = 10, .tail = 3, .cycle = 2},
      {.degree = 3, .type = "poly", .orbit = "0,1,-1,3,-3", .target = "cycle",
       .tail = 1, .cycle = 5, .num = {12, -25, 0, 1}, .den = {12}},
      {.degree = 3, .type = "poly", .orbit = "0,1,-1,2,-2", .target = "cycle",
       .tail = 0, .cycle = 5},
      {.degree = 3, .type = "poly", .orbit = "0,1,-1,2,-3", .target = "tail",
       .tail = 4, .cycle = 1},
      {.degree = 3, .type = "poly", .orbit = "0,1,4,9,10", .target = "tail",
       .tail = 4, .cycle = 1},
      // degree 4, polynomial
      {.degree = 4, .type = "poly", .orbit = "0,3,4,5,1,-1",
       .target = "height_ratio", .value = 1.328e-5, .tol = pct(1.328e-5),
       .num = {90, -257, 164, -28, 1}, .den = {30}},
      {.degree = 4, .type = "poly", .orbit = "0,1,5,4,6,2", .target = "cycle",
       .tail = 1, .cycle = 6},
      {.degree = 4, .type = "poly", .orbit = "0,1,4,-1,-2,3",
       .target = "cycle", .tail = 0, .cycle = 6},
      {.degree = 4, .type = "poly", .orbit = "0,1,10,4,8,3",
       .target = "preperiodic", .count = 11, .tail = 1, .cycle = 6},
      {.degree = 4, .type = "poly", .orbit = "0,1,-1,2,-3,4", .target = "tail",
       .tail = 5, .cycle = 1, .num = {120, -186, -67, 6, 7}, .den = {120}},
      {.degree = 4, .type = "poly", .orbit = "0,1,4,5,-1,3",
       .target = "height_ratio", .value = 2.9015e-6, .tol = pct(2.9015e-6)},
      {.degree = 4, .type = "poly", .orbit = "0,-4,1,-3,-1,-5",
       .target = "preperiodic", .count = 7},
      // degree 4, rational
      {.degree = 4, .type = "rational", .orbit = "0,-1,-4,-3,-9,2,-6,-2,-5,1",
       .target = "height_ratio", .value = 2.1843e-8, .tol = pct(2.1843e-8),
       .num = {-660, 7364, 4499, 844, 49},
       .den = {660, -1122, -866, -174, -10}},
      {.degree = 4, .type = "rational", .orbit = "0,-1,-2,-4,3,6,5,4,-5,1",
       .target = "cycle", .tail = 0, .cycle = 10,
       .num = {-5010, 5963, -828, -143, 18},
       .den = {5010, -1373, -391, 158, -14}},
      {.degree = 4, .type = "rational", .orbit = "0,-1,-4,4,2,-2,1,-3,3,6",
       .target = "cycle", .tail = 8, .cycle = 2,
       .num = {72, 558, -67, -153, 40}, .den = {-72, -100, 34, -20, 8}},
      // degree 5, polynomial
      {.degree = 5, .type = "poly", .orbit = "0,-1,-2,-6,-4,-5,-3",
       .target = "height_ratio", .value = 9.1519e-9, .tol = pct(9.1519e-9)},
      {.degree = 5, .type = "poly", .orbit = "0,1,3,5,-7,-9,-11",
       .target = "preperiodic", .count = 12, .tail = 1, .cycle = 6},
      {.degree = 5, .type = "poly", .orbit = "0,-1,2,-5,1,-4,3",
       .target = "preperiodic", .count = 11, .tail = 1, .cycle = 6},
      // degree 5, rational
      {.degree = 5, .type = "rational",
       .orbit = "0,1,-1,7,-17,13,-27,-8,-2,14,-29,4",
       .target = "height_ratio", .value = 3.6941e-10, .tol = pct(3.6941e-10)},
      // degree 6, polynomial
      {.degree = 6, .type = "poly", .orbit = "0,1,2,3,5,8,9,10",
       .target = "preperiodic", .count = 12, .tail = 4, .cycle = 4},
      // degree 7, polynomial
      {.degree = 7, .type = "poly", .orbit = "0,1,2,-8,-1,-4,-6,-2,-7",
       .target = "preperiodic", .count = 13, .tail = 9, .cycle = 1},
      {.degree = 7, .type = "poly", .orbit = "0,-1,1,11,2,10,8,9,3",
       .target = "height_ratio", .value = 1.0564e-10, .tol = pct(1.0564e-10)},
      {.degree = 7, .type = "poly", .orbit = "0,-5,1,-1,-4,2,3,4,-2",
       .target = "cycle", .tail = 6, .cycle = 3},
      {.degree = 7, .type = "poly", .orbit = "0,6,1,7,-1,4,8,-2,5",
       .target = "tail", .value = -41, .tol = 0, .tail = 8, .cycle = 1},
  };
}

std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("dynforge-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Returns the exit code; out/err land in the given files.
int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
}

void criterion6(Checks& c) {
  const auto rows = spot_rows();
  c.expect(rows.size() >= 20, "need at least 20 spot rows");
  std::set<int> degrees;
  std::set<std::string> types;
  for (const auto& row : rows) {
    degrees.insert(row.degree);
    types.insert(row.type);
  }
  c.expect(degrees == std::set<int>({2, 3, 4, 5, 6, 7}) && types.size() == 2,
           "rows must span degrees 2-7 and both map types");

  int index = 0;
  for (const auto& row : rows) {
    const auto err_file =
        scratch_dir() / ("spot" + std::to_string(index++) + ".err");
    std::string cmd = DYNFORGE_CLI_PATH;
    cmd += " verify-orbit --degree " + std::to_string(row.degree);
    cmd += std::string(" --map-type ") + row.type;
    cmd += std::string(" --orbit '") + row.orbit + "'";
    cmd += std::string(" --target ") + row.target;
    if (row.tol >= 0) {
      cmd += " --expect-value=" + fmt(row.value) + " --tol=" + fmt(row.tol);
    }
    if (row.count >= 0) cmd += " --expect-count " + std::to_string(row.count);
    if (row.tail >= 0) cmd += " --expect-tail " + std::to_string(row.tail);
    if (row.cycle >= 0) cmd += " --expect-cycle " + std::to_string(row.cycle);
    if (!row.num.empty()) {
      std::vector<Integer> num, den;
      for (long x : row.num) num.emplace_back(x);
      for (long x : row.den) den.emplace_back(x);
      DynSystem printed(row.degree, std::move(num), std::move(den));
      cmd += " --expect-map '" + printed.display() + "'";
    }
    cmd += " >/dev/null 2>" + err_file.string();
    const int code = run_command(cmd);
    std::string diag = slurp(err_file);
    std::replace(diag.begin(), diag.end(), '\n', ' ');
    c.expect(code == 0, std::string("row [") + row.orbit + "] exit " +
                            std::to_string(code) + " " + diag.substr(0, 160));
  }
}

// ---------------------------------------------------------------------------
// Criteria 7-10: property checks

void criterion7(Checks& c) {
  for (int degree = 2; degree <= 5; ++degree) {
    for (MapFlavor flavor : {MapFlavor::Polynomial, MapFlavor::Rational}) {
      GAConfig config;
      config.map_type = flavor;
      config.degree = degree;
      config.bound = 20;
      Xoshiro256ss rng(1000 + static_cast<unsigned>(degree) +
                       (flavor == MapFlavor::Rational ? 100 : 0));
      int produced = 0, attempts = 0, mismatches = 0;
      while (produced < 1000 && attempts < 20000) {
        ++attempts;
        Orbit orbit = random_orbit(config, rng);
        std::optional<DynSystem> f;
        try {
          f = orbit_to_map(orbit);
        } catch (const Error&) {
          continue;  // degenerate draw; not a valid orbit
        }
        ++produced;
        ProjPoint cur = pt(0);
        for (size_t i = 1; i < orbit.entries.size(); ++i) {
          cur = f->evaluate(cur);
          if (cur != ProjPoint::from_integer(orbit.entries[i])) {
            ++mismatches;
            break;
          }
        }
      }
      const std::string label = std::string(flavor_name(flavor)) + " degree " +
                                std::to_string(degree);
      c.expect(produced == 1000, label + ": only " + std::to_string(produced) +
                                     " valid orbits in " +
                                     std::to_string(attempts) + " draws");
      c.expect(mismatches == 0,
               label + ": " + std::to_string(mismatches) + " round-trip misses");
    }
  }
}

Mobius random_unimodular(Xoshiro256ss& rng) {
  Integer a = 1, b = 0, cc = 0, d = 1;
  for (int s = 0; s < 4; ++s) {
    const Integer k(rng.uniform_int(-5, 5));
    if (s % 2 == 0) {
      b += k * a;
      d += k * cc;
    } else {
      a += k * b;
      cc += k * d;
    }
  }
  if (rng.bernoulli(0.5)) {
    std::swap(a, b);
    std::swap(cc, d);  // determinant flips to -1
  }
  return Mobius(a, b, cc, d);
}

void criterion8(Checks& c) {
  Xoshiro256ss rng(8);
  int done = 0, attempts = 0;
  while (done < 200 && attempts < 4000) {
    ++attempts;
    GAConfig config;
    config.degree = 2 + static_cast<int>(rng.uniform_below(3));
    config.map_type =
        rng.bernoulli(0.5) ? MapFlavor::Polynomial : MapFlavor::Rational;
    config.bound = 9;
    std::optional<DynSystem> f;
    try {
      f = orbit_to_map(random_orbit(config, rng));
    } catch (const Error&) {
      continue;
    }
    const Mobius m = random_unimodular(rng);
    ++done;
    if (sigma_invariants(conjugate(*f, m)) != sigma_invariants(*f)) {
      c.expect(false, "sigma changed under conjugation (pair " +
                          std::to_string(done) + ")");
    }
  }
  c.expect(done == 200, "only " + std::to_string(done) + " pairs sampled");
}

void criterion9(Checks& c) {
  const DynSystem maps[] = {
      orbit_to_map(kSmallDeg2),
      orbit_to_map(kReferenceDeg4),
      orbit_to_map(kRationalDeg2),
      orbit_to_map(orbit_of(MapFlavor::Polynomial, 3, {0, 1, -1, 3, -3})),
  };
  AdaptiveHeightOptions opts;
  opts.abs_eps = 0.05;
  opts.rel_eps = 0.01;
  Xoshiro256ss rng(9);
  int done = 0;
  while (done < 200) {
    const DynSystem& f = maps[rng.uniform_below(4)];
    ProjPoint p(Integer(rng.uniform_int(-60, 60)),
                Integer(rng.uniform_int(1, 40)));
    const GapConstant gap = height_gap_constant(f);
    if (classify_orbit(f, p, 10000, &gap).preperiodic()) continue;
    ++done;
    const double d = f.degree();

    HeightValue hp = canonical_height_adaptive(f, p, opts, &gap);
    HeightValue hfp = canonical_height_adaptive(f, f.evaluate(p), opts, &gap);
    const double slack = hfp.error_bound + d * hp.error_bound + 1e-9;
    c.expect(std::abs(hfp.value - d * hp.value) <= slack,
             "functional equation off by " +
                 fmt(std::abs(hfp.value - d * hp.value)) + " > " + fmt(slack) +
                 " at " + p.str());

    // |hhat(P) - h(P)| <= C/(d-1), certified through the computed bound.
    const double gap_slack = gap.value / (d - 1.0) + hp.error_bound + 1e-9;
    c.expect(std::abs(hp.value - naive_height(p)) <= gap_slack,
             "height gap bound violated at " + p.str());
  }
}

void criterion10(Checks& c) {
  const Orbit fixtures[] = {
      orbit_of(MapFlavor::Polynomial, 2, {0, 1, -1, 2}),
      orbit_of(MapFlavor::Polynomial, 4, {0, -4, 1, -3, -1, -5}),
      orbit_of(MapFlavor::Rational, 2, {0, -1, -3, -6, -2, -4}),
  };
  for (const Orbit& orbit : fixtures) {
    DynSystem f = orbit_to_map(orbit);
    auto census = preperiodic_census(f, CensusParams::full());
    const std::string label = "degree " + std::to_string(orbit.degree) + " " +
                              flavor_name(orbit.flavor);
    c.expect(census.complete, label + ": census incomplete");
    for (const ProjPoint& p : census.points) {
      const ProjPoint image = f.evaluate(p);
      const bool closed = std::find(census.points.begin(), census.points.end(),
                                    image) != census.points.end();
      c.expect(closed, label + ": image of " + p.str() + " escapes the census");
      HeightValue h = canonical_height(f, p, 1e-9);
      c.expect(h.value + h.error_bound < 1e-8,
               label + ": hhat(" + p.str() + ") = " + fmt(h.value));
    }
    // Every recorded edge agrees with direct evaluation.
    for (const auto& [src, dst] : census.edges) {
      c.expect(f.evaluate(src) == dst,
               label + ": edge " + src.str() + " -> " + dst.str() + " is wrong");
    }
  }
}

// ---------------------------------------------------------------------------
// Criteria 11-12: search efficacy

GAConfig efficacy_config(unsigned long long seed) {
  GAConfig config;
  config.map_type = MapFlavor::Polynomial;
  config.degree = 2;
  config.population = 500;
  config.generations = 500;
  config.bound = 20;
  config.target = FitnessTarget::Cycle;
  config.orbit_target = -17.0;
  config.seed = seed;
  return config;
}

void criterion11(Checks& c) {
  const int threads = hardware_threads();
  int successes = 0;
  for (unsigned long long seed = 0; seed < 10; ++seed) {
    GAConfig config = efficacy_config(seed);
    RunOptions opts;
    opts.threads = threads;
    RunReport report = run(config, opts);
    const FitnessScore& best = report.history.back().best_score;
    const bool ok = !best.worst && best.value <= -17.0;
    if (ok) ++successes;
    std::cerr << "  criterion 11 seed " << seed << ": best "
              << best.value_json().dump() << " after "
              << report.evaluations << " evaluations\n";
  }
  c.expect(successes >= 8, "only " + std::to_string(successes) +
                               "/10 seeds reached score <= -17");
}

void criterion12(Checks& c) {
  const int threads = hardware_threads();
  std::vector<double> ga_finals, random_finals;
  for (unsigned long long seed = 0; seed < 5; ++seed) {
    GAConfig config;
    config.map_type = MapFlavor::Polynomial;
    config.degree = 3;
    config.population = 200;
    config.generations = 150;
    config.bound = 20;
    config.target = FitnessTarget::Cycle;
    config.seed = seed;

    RunOptions opts;
    opts.threads = threads;
    RunReport ga = run(config, opts);
    double ga_final = HUGE_VAL;
    for (const auto& stat : ga.history) {
      if (!stat.best_score.worst) {
        ga_final = std::min(ga_final, stat.best_score.value);
      }
    }
    auto series = random_baseline(config, threads);
    const double random_final =
        (series.empty() || series.back().best.worst) ? HUGE_VAL
                                                     : series.back().best.value;
    ga_finals.push_back(ga_final);
    random_finals.push_back(random_final);
    c.expect(ga.evaluations <= static_cast<size_t>(config.population) *
                                   static_cast<size_t>(config.generations) +
                                   config.population,
             "GA exceeded the random budget");
    std::cerr << "  criterion 12 seed " << seed << ": GA " << ga_final
              << " vs random " << random_final << "\n";
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  };
  const double ga_med = median(ga_finals);
  const double random_med = median(random_finals);
  c.expect(ga_med <= random_med, "GA median " + fmt(ga_med) +
                                     " vs random median " + fmt(random_med));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "all";
  const bool fixtures = mode == "all" || mode == "fixtures";
  const bool search = mode == "all" || mode == "search";
  if (!fixtures && !search) {
    std::cerr << "usage: acceptance [fixtures|search|all]\n";
    return 2;
  }

  if (fixtures) {
    criterion(1, "exact interpolation of the reference orbits", criterion1);
    criterion(2, "sigma invariants and moduli height of the degree-4 map",
              criterion2);
    criterion(3, "canonical heights and height ratios", criterion3);
    criterion(4, "preperiodicity classification fixtures", criterion4);
    criterion(5, "preperiodic census fixtures", criterion5);
    criterion(6, "catalog spot rows through the CLI", criterion6);
    criterion(7, "interpolation round-trip on random orbits", criterion7);
    criterion(8, "sigma invariance under random conjugation", criterion8);
    criterion(9, "canonical height functional equation and gap bound",
              criterion9);
    criterion(10, "census closure and vanishing canonical heights",
              criterion10);
  }
  if (search) {
    criterion(11, "GA reaches score <= -17 on >= 8/10 seeds", criterion11);
    criterion(12, "GA median final best beats uniform random", criterion12);
  }
  return g_failures == 0 ? 0 : 1;
}

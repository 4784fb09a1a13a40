// Acceptance checks. Prints one line per criterion:
//   criterion N: PASS|FAIL  <title>  (<detail>; <seconds>s, limit <limit>s)
// Usage: acceptance [--criterion N]. Exit status is nonzero if any selected
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "fpg/abelian.hpp"
#include "fpg/census.hpp"
#include "fpg/coset.hpp"
#include "fpg/low_index.hpp"
#include "fpg/numerics.hpp"
#include "fpg/rewriting.hpp"
#include "oracles.hpp"

namespace {

const std::filesystem::path kFixtures = FPG_FIXTURE_DIR;
const std::filesystem::path kData = FPG_DATA_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

#ifdef FPG_CLI_PATH
// Runs the CLI with a shell command line; returns exit status and stdout.
std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + FPG_CLI_PATH + "\" " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}
#endif

Outcome quotient_counts() {
  const std::array<std::pair<const char*, std::size_t>, 4> rows = {
      {{"C2 x C4 x C31", 3}, {"C2^4", 35}, {"C2^6", 651}, {"C2^2", 1}}};
  Outcome o{true, ""};
  for (const auto& [h1, n1] : rows) {
    const std::size_t got = fpg::count_order4_quotients(fpg::AbelianInvariants::parse(h1));
    o.detail += std::string(o.detail.empty() ? "" : ", ") + h1 + " -> " + std::to_string(got);
    o.pass = o.pass && got == n1;
  }
  return o;
}

Outcome free_group_counts() {
  const auto p = fpg::parse_presentation("< a, b | >");
  const auto subgroups = fpg::low_index_subgroups(p, 3);
  std::size_t by_index[4] = {0, 0, 0, 0};
  for (const auto& t : subgroups) ++by_index[t.index()];
  const auto hall2 = oracle::hall_subgroup_count(2, 2);
  const auto hall3 = oracle::hall_subgroup_count(2, 3);
  Outcome o;
  o.pass = by_index[2] == 3 && by_index[3] == 13 && hall2 == 3 && hall3 == 13;
  o.detail = "index 2: " + std::to_string(by_index[2]) + " (Hall " + std::to_string(hall2) + "), index 3: " +
             std::to_string(by_index[3]) + " (Hall " + std::to_string(hall3) + ")";
  return o;
}

// Generators of A x B acting on disjoint point sets.
std::vector<oracle::Perm> direct_product(const std::vector<oracle::Perm>& a, const std::vector<oracle::Perm>& b) {
  const std::size_t na = a[0].size(), nb = b[0].size();
  std::vector<oracle::Perm> out;
  for (const auto& g : a) {
    oracle::Perm p = oracle::identity(na + nb);
    std::copy(g.begin(), g.end(), p.begin());
    out.push_back(std::move(p));
  }
  for (const auto& g : b) {
    oracle::Perm p = oracle::identity(na + nb);
    for (std::size_t i = 0; i < nb; ++i) p[na + i] = static_cast<int>(na) + g[i];
    out.push_back(std::move(p));
  }
  return out;
}

Outcome brute_force_orders() {
  std::mt19937_64 rng(20240601);
  std::size_t checked = 0, agree = 0;
  std::set<std::size_t> orders;
  while (checked < 40) {
    auto gens = oracle::random_small_group(rng, 6, 48);
    if (checked % 2 == 1) gens = direct_product(gens, oracle::random_small_group(rng, 5, 12));
    const std::size_t order = oracle::closure(gens).size();
    if (order > 48) continue;
    const auto p = fpg::parse_presentation(oracle::cayley_presentation(gens, rng));
    const auto t = fpg::coset_enumerate(p, {});
    ++checked;
    if (t.index() == order && !fpg::validate(t, p)) ++agree;
    orders.insert(order);
  }
  std::string seen;
  for (auto o : orders) seen += (seen.empty() ? "" : ",") + std::to_string(o);
  return {agree == checked && checked >= 20,
          std::to_string(agree) + "/" + std::to_string(checked) + " presentations agree; orders " + seen};
}

Outcome surface_covers() {
  const auto p = fpg::parse_presentation("< a1, b1, a2, b2 | [a1,b1]*[a2,b2] >");
  std::size_t found = 0, rank6 = 0;
  for (const auto& t : fpg::low_index_subgroups(p, 2, fpg::SubgroupMode::NormalOnly)) {
    if (t.index() != 2) continue;
    ++found;
    if (fpg::subgroup_abelianization(p, t) == fpg::AbelianInvariants({}, 6)) ++rank6;
  }
  return {found == 15 && rank6 == 15,
          std::to_string(found) + " normal index-2 subgroups, " + std::to_string(rank6) + " with H1 = Z^6"};
}

Outcome smith_properties() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::uniform_int_distribution<int> entry(-50, 50);
  std::size_t ok = 0;
  const std::size_t total = 1000;
  for (std::size_t trial = 0; trial < total; ++trial) {
    fpg::IntMatrix a(dim(rng), dim(rng));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = entry(rng);
    const auto s = fpg::smith_normal_form(a);
    bool good = s.U * a * s.V == s.D && abs(fpg::determinant(s.U)) == 1 && abs(fpg::determinant(s.V)) == 1;
    for (std::size_t r = 0; r < a.rows() && good; ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (r != c && s.D(r, c) != 0) good = false;
    const auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size() && good; ++i) {
      if (d[i] < 0) good = false;
      if (d[i] == 0 ? d[i + 1] != 0 : d[i + 1] % d[i] != 0) good = false;
    }
    ok += good ? 1 : 0;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " matrices satisfy all properties"};
}

Outcome census_determinism() {
  const auto dir = kFixtures / "census";
  std::string json[2], csv[2];
#ifdef FPG_CLI_PATH
  const auto tmp = std::filesystem::temp_directory_path() / ("fpg_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);
  for (int i = 0; i < 2; ++i) {
    const auto j = tmp / ("r" + std::to_string(i) + ".json");
    const auto c = tmp / ("r" + std::to_string(i) + ".csv");
    const auto [code, out] = run_cli("census \"" + dir.string() + "\" --index 4 --out \"" + j.string() +
                                     "\" --csv \"" + c.string() + "\" 2>/dev/null");
    if (code != 0) return {false, "census exited with status " + std::to_string(code)};
    json[i] = slurp(j);
    csv[i] = slurp(c);
  }
  std::filesystem::remove_all(tmp);
  const std::string via = "CLI";
#else
  const fpg::CensusOptions options;
  for (int i = 0; i < 2; ++i) {
    const auto r = fpg::run_census(dir, options);
    json[i] = fpg::to_json(r, options);
    csv[i] = fpg::to_csv(r.reports);
  }
  const std::string via = "library";
#endif
  const auto result = fpg::run_census(dir, fpg::CensusOptions{});
  std::size_t consistent = 0;
  for (const auto& r : result.reports) consistent += r.lemma11_consistent ? 1 : 0;
  const bool identical = json[0] == json[1] && csv[0] == csv[1] && !json[0].empty();
  return {identical && result.errors.empty() && consistent == result.reports.size(),
          std::string(identical ? "byte-identical" : "DIFFERENT") + " JSON and CSV via " + via + ", " +
              std::to_string(consistent) + "/" + std::to_string(result.reports.size()) + " reports consistent"};
}

Outcome numerics() {
  bool pass = fpg::beauville_bound(3) == 36;
  pass = pass && fpg::etale_cover_numerics(1, 4, 0) == fpg::SurfaceNumerics{3, 0, 4, 36};
  for (std::int64_t g = 2; g <= 100; ++g) {
    const auto t = fpg::product_threefold(g);
    pass = pass && t.degPhi == 72 && t.K3 == 216 * (g - 1) && t.K3 == t.degPhi * t.degW;
  }
  std::string detail = "bound(3) = " + std::to_string(fpg::beauville_bound(3)) + ", cover K2 = " +
                       std::to_string(fpg::etale_cover_numerics(1, 4, 0).K2) + ", degPhi = 72 for g in [2,100]";
#ifdef FPG_CLI_PATH
  const auto [code, help] = run_cli("threefold --help");
  const bool documented = code == 0 && help.find("72(g - 1)") != std::string::npos &&
                          help.find("216(g - 1)") != std::string::npos;
  pass = pass && documented;
  detail += documented ? ", discrepancy documented in help" : ", discrepancy NOT documented in help";
#else
  pass = false;
  detail += ", CLI not built so help text unchecked";
#endif
  return {pass, detail};
}

Outcome published_total() {
  const auto rows = fpg::read_published_table(kData / "degree4_covers.csv");
  std::vector<std::optional<std::size_t>> column;
  for (const auto& r : rows) column.push_back(r.n1);
  const auto s = fpg::aggregate(column);
  return {s.total_n1 == 835 && s.doubled == 1670,
          "sum " + std::to_string(s.total_n1) + ", doubled " + std::to_string(s.doubled) + " over " +
              std::to_string(rows.size()) + " rows with " + std::to_string(s.missing) +
              " missing n1; expected 835 and 1670"};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "order-4 quotient counts of published H1 values", 1.0, quotient_counts},
      {2, "free group subgroup counts against Hall's recursion", 5.0, free_group_counts},
      {3, "coset enumeration against brute-force group orders", 60.0, brute_force_orders},
      {4, "normal index-2 covers of the genus-2 surface group", 30.0, surface_covers},
      {5, "Smith normal form property suite", 30.0, smith_properties},
      {6, "census determinism and order-4 quotient consistency on fixtures", 0.0, census_determinism},
      {7, "exact surface and threefold numerics", 1.0, numerics},
      {8, "published N1 column sums to 835 (doubled 1670)", 0.0, published_total},
  };
  return all;
}

bool run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
  const bool pass = o.pass && in_time;
  char timing[64];
  if (c.limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.3fs, limit %.0fs", secs, c.limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
  }
  std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << o.detail
            << (in_time ? "" : "; TOO SLOW") << "; " << timing << ")" << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_pass = true, any = false;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    any = true;
    all_pass = run(c) && all_pass;
  }
  if (!any) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}

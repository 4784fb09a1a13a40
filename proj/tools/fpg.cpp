// fpg: command-line front end for the fpgroup library.
//
// Exit status: 0 on success, 1 when an input file cannot be read, parsed or
// processed (including exhausted budgets), 2 on usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fpg/abelian.hpp"
#include "fpg/census.hpp"
#include "fpg/coset.hpp"
#include "fpg/errors.hpp"
#include "fpg/low_index.hpp"
#include "fpg/numerics.hpp"
#include "fpg/presentation.hpp"
#include "fpg/rewriting.hpp"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUsageError = 2;

// Raised for anything wrong with an input file; carries a ready message.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot read file");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

fpg::Presentation load_presentation(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return fpg::parse_presentation(text);
  } catch (const fpg::ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

std::string table_line(const fpg::CosetTable& t, const fpg::Presentation& p) {
  std::ostringstream out;
  for (std::size_t g = 0; g < t.generator_count(); ++g) {
    out << ' ' << p.generator_names()[g] << ':';
    const auto& row = t.action()[g];
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
  }
  return out.str();
}

int cmd_parse(const std::string& file) {
  std::cout << fpg::to_json(load_presentation(file)) << '\n';
  return kOk;
}

int cmd_abelianize(const std::string& file) {
  std::cout << fpg::abelianization(load_presentation(file)).invariant_factor_string() << '\n';
  return kOk;
}

int cmd_low_index(const std::string& file, std::size_t index, bool normal, bool json) {
  if (index < 1) throw UsageError("--index must be at least 1");
  const auto p = load_presentation(file);
  const auto mode = normal ? fpg::SubgroupMode::NormalOnly : fpg::SubgroupMode::All;
  const auto subgroups = fpg::low_index_subgroups(p, index, mode);
  if (json) {
    nlohmann::ordered_json j;
    j["max_index"] = index;
    j["mode"] = normal ? "normal" : "all";
    j["count"] = subgroups.size();
    auto list = nlohmann::ordered_json::array();
    for (const auto& t : subgroups) {
      auto entry = nlohmann::ordered_json::parse(fpg::to_json(t, p));
      entry["normal"] = fpg::is_normal(t);
      entry["normalizer_index"] = fpg::normalizer_index(t);
      list.push_back(std::move(entry));
    }
    j["subgroups"] = std::move(list);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  for (const auto& t : subgroups) {
    std::cout << t.index() << (fpg::is_normal(t) ? " normal    " : " nonnormal ") << table_line(t, p) << '\n';
  }
  std::cout << "# " << subgroups.size() << " subgroups of index <= " << index << '\n';
  return kOk;
}

enum class SubgroupQuery { Presentation, Abelianization, B1, Normalizer };

int cmd_subgroup(const std::string& file, const std::string& table_file, SubgroupQuery query) {
  const auto p = load_presentation(file);
  fpg::CosetTable t;
  try {
    t = fpg::coset_table_from_json(read_file(table_file), p);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(table_file + ": " + e.what());
  }
  if (auto problem = fpg::validate(t, p)) throw InputError(table_file + ": " + *problem);
  switch (query) {
    case SubgroupQuery::Presentation:
      std::cout << fpg::to_dsl(fpg::schreier_presentation(p, t)) << '\n';
      break;
    case SubgroupQuery::Abelianization:
      std::cout << fpg::subgroup_abelianization(p, t).to_string() << '\n';
      break;
    case SubgroupQuery::B1:
      std::cout << fpg::subgroup_abelianization(p, t).free_rank() << '\n';
      break;
    case SubgroupQuery::Normalizer:
      std::cout << fpg::normalizer_index(t, fpg::schreier_generators(p, t)) << '\n';
      break;
  }
  return kOk;
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw InputError(path + ": cannot write file");
}

int cmd_census(const std::string& dir, std::size_t index, const std::string& out, const std::string& csv,
               const std::string& supergroup, const std::string& embed) {
  if (index != 4) throw UsageError("the census supports --index 4 only");
  if (supergroup.empty() != embed.empty()) throw UsageError("--supergroup and --embed must be given together");
  fpg::CensusOptions options;
  options.index = index;
  if (!supergroup.empty()) {
    fpg::SupergroupContext ctx;
    ctx.supergroup = load_presentation(supergroup);
    try {
      ctx.embedding = fpg::parse_word_list(embed, ctx.supergroup);
    } catch (const fpg::ParseError& e) {
      throw UsageError(std::string("--embed: ") + e.what());
    }
    options.supergroup = std::move(ctx);
  }
  fpg::CensusResult result;
  try {
    result = fpg::run_census(dir, options);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::string json = fpg::to_json(result, options);
  if (out.empty()) {
    std::cout << json;
  } else {
    write_output(out, json);
  }
  if (!csv.empty()) write_output(csv, fpg::to_csv(result.reports));
  for (const auto& e : result.errors) std::cerr << "fpg: " << e.source << ": " << e.message << '\n';
  if (!out.empty()) {
    const auto s = fpg::aggregate(result.reports);
    std::cerr << "fpg: " << result.reports.size() << " files, " << result.errors.size() << " errors, total n1 "
              << s.total_n1 << '\n';
  }
  return result.errors.empty() ? kOk : kInputError;
}

// Sums the N1 column of a published table and checks each row against the
// order-4 quotient count of its H1. A row whose N1 exceeds that count cannot
// be right (N1 counts a subset of the normal index-4 subgroups).
int cmd_aggregate(const std::string& file) {
  std::vector<fpg::PublishedRow> rows;
  try {
    rows = fpg::read_published_table(file);
  } catch (const std::exception& e) {
    throw InputError(file + ": " + e.what());
  }
  std::vector<std::optional<std::size_t>> column;
  std::size_t flagged = 0;
  for (const auto& row : rows) {
    column.push_back(row.n1);
    std::string note;
    try {
      const auto h1 = fpg::AbelianInvariants::parse(row.h1);
      const std::size_t normal = fpg::count_order4_quotients(h1);
      if (row.n1 && *row.n1 > normal) {
        note = "n1 " + std::to_string(*row.n1) + " exceeds the " + std::to_string(normal) +
               " order-4 quotients of " + row.h1;
      }
    } catch (const std::invalid_argument& e) {
      note = std::string("unreadable h1: ") + e.what();
    }
    if (!row.n1) std::cout << "missing n1: " << row.label << '\n';
    if (!note.empty()) {
      ++flagged;
      std::cout << "inconsistent: " << row.label << ": " << note << '\n';
    }
  }
  const auto s = fpg::aggregate(column);
  std::cout << "rows " << rows.size() << "\nmissing " << s.missing << "\nflagged " << flagged << "\ntotal_n1 "
            << s.total_n1 << "\ndoubled " << s.doubled << '\n';
  return kOk;
}

int cmd_degree_bound(std::int64_t pg) {
  try {
    std::cout << fpg::beauville_bound(pg) << '\n';
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int cmd_threefold(std::int64_t genus) {
  fpg::ThreefoldNumerics t;
  try {
    t = fpg::product_threefold(genus);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << "g " << t.g << "\np_g " << t.p_gY << "\nK3 " << t.K3 << "\ndeg_W " << t.degW << "\ndeg_Phi "
            << t.degPhi << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented groups: coset enumeration, low-index subgroups and index-4 census"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fpg 0.1.0");

  std::string file, dir, table, out, csv, supergroup, embed;
  std::size_t index = 0;
  bool normal = false, json = false;
  std::int64_t pg = 0, genus = 0;

  auto* parse = app.add_subcommand("parse", "Print the canonical JSON form of a presentation");
  parse->add_option("FILE", file, "Presentation file")->required();

  auto* abelianize = app.add_subcommand("abelianize", "Print the invariant factors of G/[G,G]");
  abelianize->add_option("FILE", file, "Presentation file")->required();

  auto* low = app.add_subcommand("low-index", "List all subgroups of index <= N as coset tables");
  low->add_option("FILE", file, "Presentation file")->required();
  low->add_option("--index", index, "Maximum index")->required()->check(CLI::PositiveNumber);
  low->add_flag("--normal", normal, "Normal subgroups only");
  low->add_flag("--json", json, "JSON output");

  auto* sub = app.add_subcommand("subgroup", "Inspect the subgroup described by a coset table");
  sub->add_option("FILE", file, "Presentation file")->required();
  sub->add_option("--table", table, "Coset table JSON: {\"index\": n, \"action\": {gen: [...]}}")->required();
  auto* q_pres = sub->add_flag("--presentation", "Reidemeister-Schreier presentation");
  auto* q_ab = sub->add_flag("--abelianization", "Abelianization invariants");
  auto* q_b1 = sub->add_flag("--b1", "Free rank of the abelianization");
  auto* q_norm = sub->add_flag("--normalizer", "Index of the subgroup in its normalizer");
  for (auto* a : {q_pres, q_ab, q_b1, q_norm})
    for (auto* b : {q_pres, q_ab, q_b1, q_norm})
      if (a != b) a->excludes(b);

  auto* census = app.add_subcommand("census", "Classify index-4 subgroups of every *.fp file in DIR");
  census->add_option("DIR", dir, "Directory of presentation files")->required();
  census->add_option("--index", index, "Subgroup index (4)")->required();
  census->add_option("--out", out, "Write the JSON report here instead of stdout");
  census->add_option("--csv", csv, "Also write the one-row-per-file CSV report");
  census->add_option("--supergroup", supergroup, "Presentation of an ambient group");
  census->add_option("--embed", embed,
                     "Comma-separated words in the ambient group's generators, one per generator of each input");

  auto* agg = app.add_subcommand("aggregate", "Sum the n1 column of a label,h1,n0,n1 table and check each row");
  agg->add_option("FILE", file, "CSV table")->required();

  auto* bound = app.add_subcommand("degree-bound", "floor(9(1+p_g)/(p_g-2)), the canonical degree bound");
  bound->add_option("--pg", pg, "Geometric genus p_g >= 3")->required();

  auto* three = app.add_subcommand(
      "threefold",
      "Numerics of Y = M x C for a degree-36 surface M and a curve C of genus g.\n"
      "K3 = 3 * 36 * (2g - 2) = 216(g - 1), deg W = 3(g - 1), deg Phi = 72, p_g = 3g.\n"
      "Note: the frequently quoted K_Y^3 = 72(g - 1) disagrees with the product\n"
      "computation 3 K_M^2 K_C by a factor of 3; this tool reports 216(g - 1),\n"
      "which is the value consistent with K3 = deg Phi * deg W.");
  three->add_option("--genus", genus, "Curve genus g >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*parse) return cmd_parse(file);
    if (*abelianize) return cmd_abelianize(file);
    if (*low) return cmd_low_index(file, index, normal, json);
    if (*sub) {
      SubgroupQuery query;
      if (*q_pres) {
        query = SubgroupQuery::Presentation;
      } else if (*q_ab) {
        query = SubgroupQuery::Abelianization;
      } else if (*q_b1) {
        query = SubgroupQuery::B1;
      } else if (*q_norm) {
        query = SubgroupQuery::Normalizer;
      } else {
        throw UsageError("one of --presentation, --abelianization, --b1, --normalizer is required");
      }
      return cmd_subgroup(file, table, query);
    }
    if (*census) return cmd_census(dir, index, out, csv, supergroup, embed);
    if (*agg) return cmd_aggregate(file);
    if (*bound) return cmd_degree_bound(pg);
    if (*three) return cmd_threefold(genus);
  } catch (const UsageError& e) {
    std::cerr << "fpg: " << e.what() << '\n';
    return kUsageError;
  } catch (const InputError& e) {
    std::cerr << "fpg: " << e.what() << '\n';
    return kInputError;
  } catch (const fpg::BudgetExceeded& e) {
    std::cerr << "fpg: budget exceeded: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "fpg: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

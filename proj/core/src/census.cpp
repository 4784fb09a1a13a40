#include "fpg/census.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fpg/errors.hpp"
#include "fpg/rewriting.hpp"
#include "json.hpp"

namespace fpg {

namespace {

using ordered_json = nlohmann::ordered_json;

Word substitute(const Word& w, const std::vector<Word>& images) {
  std::vector<Letter> out;
  for (Letter x : w) {
    const Word& image = images.at(static_cast<std::size_t>(std::abs(x)) - 1);
    const Word piece = x > 0 ? image : invert(image);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(Word(std::move(out)));
}

std::size_t ambient_normalizer(const Presentation& p, const std::vector<Word>& subgroup_words,
                               const SupergroupContext& ctx) {
  if (ctx.embedding.size() != p.generator_count()) {
    throw std::invalid_argument("supergroup embedding gives " + std::to_string(ctx.embedding.size()) +
                                " words for " + std::to_string(p.generator_count()) + " generators");
  }
  SubgroupSpec spec;
  for (const Word& w : subgroup_words) spec.generators.push_back(substitute(w, ctx.embedding));
  const CosetTable t = coset_enumerate(ctx.supergroup, spec, ctx.enumeration);
  // Relator images always lie in the image of the subgroup; acting trivially on
  // every coset means they lie in its core. Necessary for a homomorphism, not
  // sufficient: the word problem in the supergroup is not attempted.
  for (const Word& r : p.relators()) {
    const Word image = substitute(r, ctx.embedding);
    for (std::size_t c = 0; c < t.index(); ++c) {
      if (t.act(static_cast<int>(c), image) != static_cast<int>(c)) {
        throw std::invalid_argument("supergroup embedding does not map relators to the identity");
      }
    }
  }
  return normalizer_index(t, spec);
}

ordered_json invariants_json(const AbelianInvariants& inv) {
  ordered_json torsion = ordered_json::array();
  for (const auto& d : inv.torsion()) {
    if (d <= std::numeric_limits<std::int64_t>::max()) {
      torsion.push_back(static_cast<std::int64_t>(d));
    } else {
      torsion.push_back(d.str());
    }
  }
  ordered_json j;
  j["text"] = inv.to_string();
  j["torsion"] = std::move(torsion);
  j["free_rank"] = inv.free_rank();
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV line: " + line);
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

CensusReport census_presentation(const std::string& source, const Presentation& p, const CensusOptions& options) {
  if (options.index != 4) throw std::invalid_argument("the census classifies subgroups of index 4 only");
  CensusReport report;
  report.source = source;
  report.generators = p.generator_names();
  report.relator_count = p.relators().size();
  report.h1 = abelianization(p);

  for (const auto& cls : low_index_classes(p, options.index, SubgroupMode::All, options.low_index)) {
    if (cls.representative.index() != options.index) continue;
    ++report.n_conjugacy_classes_index4;
    for (CosetTable& t : conjugates(cls.representative)) {
      SubgroupRecord rec;
      const SchreierRewrite rewrite = reidemeister_schreier(p, t);
      rec.abelian_invariants = abelianization(rewrite.presentation);
      rec.b1 = rec.abelian_invariants.free_rank();
      rec.normalizer_index = normalizer_index(t, SubgroupSpec{rewrite.generator_words});
      rec.normal = rec.normalizer_index == t.index();
      if (rec.normal) rec.quotient_type = quotient_type(t);
      if (options.supergroup) {
        rec.ambient_normalizer_index = ambient_normalizer(p, rewrite.generator_words, *options.supergroup);
      }
      rec.table = std::move(t);
      report.per_subgroup.push_back(std::move(rec));
    }
  }
  std::sort(report.per_subgroup.begin(), report.per_subgroup.end(),
            [](const SubgroupRecord& a, const SubgroupRecord& b) { return a.table < b.table; });

  report.n_subgroups_index4 = report.per_subgroup.size();
  for (const auto& rec : report.per_subgroup) {
    if (!rec.normal) continue;
    ++report.n_normal_index4;
    if (has_finite_abelianization(rec.abelian_invariants)) ++report.n1;
    if (rec.quotient_type == QuotientType::C4) {
      ++report.n_c4;
    } else {
      ++report.n_v4;
    }
  }
  report.lemma11_expected = count_order4_quotients(report.h1);
  report.lemma11_consistent = report.lemma11_expected == report.n_normal_index4;
  return report;
}

CensusResult run_census(const std::filesystem::path& dir, const CensusOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".fp") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  CensusResult result;
  for (const auto& path : files) {
    const std::string source = path.filename().string();
    try {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw std::runtime_error("cannot read file");
      std::ostringstream text;
      text << in.rdbuf();
      result.reports.push_back(census_presentation(source, parse_presentation(text.str()), options));
    } catch (const ParseError& e) {
      result.errors.push_back({source, std::string("parse error at ") + e.what()});
    } catch (const BudgetExceeded& e) {
      result.errors.push_back({source, std::string("budget exceeded: ") + e.what()});
    } catch (const std::exception& e) {
      result.errors.push_back({source, e.what()});
    }
  }
  return result;
}

CensusSummary aggregate(const std::vector<CensusReport>& reports) {
  std::vector<std::optional<std::size_t>> column;
  for (const auto& r : reports) column.emplace_back(r.n1);
  return aggregate(column);
}

CensusSummary aggregate(const std::vector<std::optional<std::size_t>>& n1_column) {
  CensusSummary s;
  for (const auto& v : n1_column) {
    if (v) {
      s.total_n1 += *v;
    } else {
      ++s.missing;
    }
  }
  s.doubled = 2 * s.total_n1;
  return s;
}

std::string to_json(const CensusResult& result, const CensusOptions& options) {
  ordered_json j;
  j["schema_version"] = kCensusSchemaVersion;
  j["index"] = options.index;
  ordered_json reports = ordered_json::array();
  for (const auto& r : result.reports) {
    ordered_json jr;
    jr["source"] = r.source;
    jr["generators"] = r.generators;
    jr["relator_count"] = r.relator_count;
    jr["h1"] = invariants_json(r.h1);
    jr["n_subgroups_index4"] = r.n_subgroups_index4;
    jr["n_conjugacy_classes_index4"] = r.n_conjugacy_classes_index4;
    jr["n_normal_index4"] = r.n_normal_index4;
    jr["n1"] = r.n1;
    jr["quotient_type_histogram"] = {{"C4", r.n_c4}, {"V4", r.n_v4}};
    jr["lemma11_expected"] = r.lemma11_expected;
    jr["lemma11_consistent"] = r.lemma11_consistent;
    ordered_json subs = ordered_json::array();
    Presentation names(r.generators, {});
    for (const auto& rec : r.per_subgroup) {
      ordered_json js;
      js["table"] = ordered_json::parse(to_json(rec.table, names));
      js["normal"] = rec.normal;
      js["quotient_type"] = rec.quotient_type ? ordered_json(to_string(*rec.quotient_type)) : ordered_json(nullptr);
      js["abelian_invariants"] = invariants_json(rec.abelian_invariants);
      js["b1"] = rec.b1;
      js["normalizer_index"] = rec.normalizer_index;
      if (rec.ambient_normalizer_index) js["ambient_normalizer_index"] = *rec.ambient_normalizer_index;
      subs.push_back(std::move(js));
    }
    jr["per_subgroup"] = std::move(subs);
    reports.push_back(std::move(jr));
  }
  j["reports"] = std::move(reports);
  ordered_json errors = ordered_json::array();
  for (const auto& e : result.errors) errors.push_back({{"source", e.source}, {"message", e.message}});
  j["errors"] = std::move(errors);
  const CensusSummary s = aggregate(result.reports);
  j["summary"] = {{"total_n1", s.total_n1}, {"doubled", s.doubled}};
  return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<CensusReport>& reports) {
  std::ostringstream out;
  out << kCensusCsvHeader << '\n';
  for (const auto& r : reports) {
    out << csv_field(r.source) << ',' << csv_field(r.h1.to_string()) << ',' << r.n_subgroups_index4 << ','
        << r.n_conjugacy_classes_index4 << ',' << r.n_normal_index4 << ',' << r.n1 << ',' << r.n_c4 << ','
        << r.n_v4 << ',' << r.lemma11_expected << ',' << (r.lemma11_consistent ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<PublishedRow> read_published_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  do {
    if (!std::getline(in, line)) throw std::invalid_argument("empty table file " + path.string());
  } while (line.empty() || line[0] == '#');
  const auto header = split_csv_line(line);
  if (header != std::vector<std::string>{"label", "h1", "n0", "n1"}) {
    throw std::invalid_argument("expected header label,h1,n0,n1 in " + path.string());
  }
  auto count = [&](const std::string& cell) -> std::optional<std::size_t> {
    if (cell.empty()) return std::nullopt;
    std::size_t used = 0;
    const unsigned long v = std::stoul(cell, &used);
    if (used != cell.size()) throw std::invalid_argument("bad count '" + cell + "'");
    return v;
  };
  std::vector<PublishedRow> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_csv_line(line);
    if (f.size() != 4) throw std::invalid_argument("expected 4 fields: " + line);
    rows.push_back({f[0], f[1], count(f[2]), count(f[3])});
  }
  return rows;
}

}  // namespace fpg

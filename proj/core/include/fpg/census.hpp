#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/coset.hpp"
#include "fpg/low_index.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

inline constexpr int kCensusSchemaVersion = 1;
/// Version 1 of the one-row-per-file CSV layout.
inline constexpr const char* kCensusCsvHeader =
    "source,h1,n0_subgroups,n0_classes,n_normal,n1,n_c4,n_v4,lemma11_expected,lemma11_consistent";

struct SubgroupRecord {
  CosetTable table;
  bool normal = false;
  /// Present iff normal (all census subgroups have index 4).
  std::optional<QuotientType> quotient_type;
  AbelianInvariants abelian_invariants;
  std::size_t b1 = 0;
  /// |N(S) : S| inside the presentation's own group.
  std::size_t normalizer_index = 0;
  /// |N(S) : S| inside the supergroup, when one is supplied.
  std::optional<std::size_t> ambient_normalizer_index;
};

struct CensusReport {
  std::string source;
  std::vector<std::string> generators;
  std::size_t relator_count = 0;
  AbelianInvariants h1;
  std::size_t n_subgroups_index4 = 0;
  std::size_t n_conjugacy_classes_index4 = 0;
  std::size_t n_normal_index4 = 0;
  /// Normal subgroups with finite abelianization.
  std::size_t n1 = 0;
  std::size_t n_c4 = 0;
  std::size_t n_v4 = 0;
  std::size_t lemma11_expected = 0;
  bool lemma11_consistent = false;
  std::vector<SubgroupRecord> per_subgroup;
};

/// A group containing every census input, with the inputs' generators
/// written as words in its generators.
struct SupergroupContext {
  Presentation supergroup;
  std::vector<Word> embedding;
  EnumerationOptions enumeration;
};

struct CensusOptions {
  std::size_t index = 4;
  LowIndexOptions low_index;
  std::optional<SupergroupContext> supergroup;
};

struct CensusError {
  std::string source;
  std::string message;
};

struct CensusSummary {
  std::size_t total_n1 = 0;
  /// Each cover carries two conjugate complex structures.
  std::size_t doubled = 0;
  std::size_t missing = 0;

  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct CensusResult {
  std::vector<CensusReport> reports;
  std::vector<CensusError> errors;
};

/// Classify every index-4 subgroup of one presentation. Throws on budget
/// overrun or a malformed supergroup embedding.
CensusReport census_presentation(const std::string& source, const Presentation& p, const CensusOptions& options);

/// Run the census over every `*.fp` file in `dir`, in filename order. Per-file
/// failures are collected in `errors`; other files are still processed.
CensusResult run_census(const std::filesystem::path& dir, const CensusOptions& options);

CensusSummary aggregate(const std::vector<CensusReport>& reports);
/// Sum a column of N1 values; missing cells are skipped and counted.
CensusSummary aggregate(const std::vector<std::optional<std::size_t>>& n1_column);

std::string to_json(const CensusResult& result, const CensusOptions& options);
std::string to_csv(const std::vector<CensusReport>& reports);

/// One row of a published census table: H1 as text and the two counts.
struct PublishedRow {
  std::string label;
  std::string h1;
  std::optional<std::size_t> n0;
  std::optional<std::size_t> n1;
};

/// Read a CSV with header `label,h1,n0,n1`; empty count cells are missing.
std::vector<PublishedRow> read_published_table(const std::filesystem::path& path);

}  // namespace fpg

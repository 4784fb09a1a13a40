#pragma once

#include <cstddef>
#include <vector>

#include "fpg/coset.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

enum class SubgroupMode { All, NormalOnly };

struct LowIndexOptions {
  /// Cap on partial-table extensions tried by the backtracking search.
  std::size_t max_nodes = 10'000'000;
};

/// Every subgroup of index <= max_index (one standardized table per subgroup,
/// not per conjugacy class), or only the normal ones. Sorted by CosetTable
/// order. Throws BudgetExceeded past max_nodes.
std::vector<CosetTable> low_index_subgroups(const Presentation& p, std::size_t max_index,
                                            SubgroupMode mode = SubgroupMode::All,
                                            const LowIndexOptions& options = {});

struct ConjugacyClass {
  /// Least table (CosetTable order) among the class members.
  CosetTable representative;
  std::size_t size = 0;
};

/// One entry per conjugacy class, smallest representative first, as found
/// directly by the canonical-form search.
std::vector<ConjugacyClass> low_index_classes(const Presentation& p, std::size_t max_index,
                                              SubgroupMode mode = SubgroupMode::All,
                                              const LowIndexOptions& options = {});

/// Partition tables of one presentation by conjugacy; sizes count the
/// members present in the input.
std::vector<ConjugacyClass> conjugacy_classes(const std::vector<CosetTable>& subgroups);

/// Least re-rooting of t: the canonical name of its conjugacy class.
CosetTable class_representative(const CosetTable& t);

/// All distinct re-rootings of t, i.e. the tables of the conjugates of its subgroup.
std::vector<CosetTable> conjugates(const CosetTable& t);

}  // namespace fpg

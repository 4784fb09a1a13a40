#pragma once

#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/coset.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

/// Reidemeister-Schreier output for the subgroup stabilizing coset 0.
struct SchreierRewrite {
  /// Generators are named "<gen>_<coset>" for each edge coset --gen--> outside
  /// the BFS spanning tree; relators are the rewritten conjugates of every
  /// ambient relator at every coset.
  Presentation presentation;
  /// Each subgroup generator as a freely reduced word in the ambient generators.
  std::vector<Word> generator_words;
};

SchreierRewrite reidemeister_schreier(const Presentation& p, const CosetTable& t);

Presentation schreier_presentation(const Presentation& p, const CosetTable& t);

/// Schreier generators as a SubgroupSpec in the ambient presentation.
SubgroupSpec schreier_generators(const Presentation& p, const CosetTable& t);

/// Abelianization of the subgroup; free_rank is the first Betti number of the cover.
AbelianInvariants subgroup_abelianization(const Presentation& p, const CosetTable& t);

inline bool has_finite_abelianization(const AbelianInvariants& inv) { return inv.free_rank() == 0; }

}  // namespace fpg

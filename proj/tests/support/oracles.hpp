#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's enumeration, search, or normal-form code.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b);  // apply a, then b
Perm inverse(const Perm& a);
Perm identity(std::size_t n);

/// All elements of the group generated by gens, by closure under right
/// multiplication (breadth-first over the Cayley graph).
std::vector<Perm> closure(const std::vector<Perm>& gens);

/// Presentation DSL text of the group generated by `gens`, read off its
/// Cayley graph: for every element g (with BFS word w_g) and generator s the
/// relator w_g s w_{gs}^-1. Generator names are x1, x2, ...
/// `rng` shuffles relator order and appends generator-order relators.
std::string cayley_presentation(const std::vector<Perm>& gens, std::mt19937_64& rng);

/// A random permutation group of order <= max_order on at most `points`
/// points, generated by 1..3 random permutations.
std::vector<Perm> random_small_group(std::mt19937_64& rng, std::size_t points, std::size_t max_order);

/// Number of subgroups of index exactly n in the free group of the given
/// rank, by Hall's recursion a_n = n (n!)^(r-1) - sum_{k<n} ((n-k)!)^(r-1) a_k.
std::uint64_t hall_subgroup_count(int rank, int n);

/// Same count by brute force: transitive r-tuples of permutations of
/// {0..n-1}, each subgroup counted (n-1)! times.
std::uint64_t brute_force_free_subgroups(int rank, int n);

/// Number of subgroups of index 4 in (+) Z/orders[i], from the set of
/// distinct kernels of all homomorphisms onto C4 or onto C2 x C2, computed
/// element by element.
std::uint64_t brute_force_order4_quotients(const std::vector<int>& orders);

/// Index-4 sublattices of Z^2 (count, and how many have quotient C2 x C2),
/// enumerated as lattices of points in [0,4)^2 containing 4Z^2.
struct SublatticeCount {
  int total = 0;
  int klein = 0;
};
SublatticeCount brute_force_index4_sublattices_z2();

/// Greatest common divisor of all k x k minors, for k = 1..min(rows, cols).
std::vector<long long> determinantal_divisors(const std::vector<std::vector<long long>>& m);

}  // namespace oracle

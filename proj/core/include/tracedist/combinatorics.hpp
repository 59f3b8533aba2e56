#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tracedist::comb {

using BigInt = boost::multiprecision::cpp_int;

// Permutation convention used everywhere in this project: permutations act on
// {0, .., n-1}, the reference rotation is shift(i) = (i+1) mod n, the B-cycles
// of p are the cycles of p itself, and the A-cycles are the cycles of
// shift^{-1} o p.  A permutation is non-crossing iff
//   cycle_count(shift^{-1} o p) + cycle_count(p) == n + 1.

// Cycle-type multiset (1^m1, 2^m2, ..., n^mn). multiplicity[i-1] is the number
// of cycles with i elements, so sum_i i*multiplicity[i-1] == n.
struct CyclePartition {
  int n = 0;
  std::vector<int> multiplicity;

  int cycle_count() const;

  // Throws std::invalid_argument unless the multiset exhausts n elements with
  // 1 <= cycle_count <= n.
  void validate() const;

  bool all_cycles_even() const;
};

struct NonCrossingPermutation {
  std::vector<int> mapping;      // p
  CyclePartition b_cycle_type;   // cycle type of p
  int a_cycle_count = 0;         // cycle_count(shift^{-1} o p)
};

int cycle_count(const std::vector<int>& p);
CyclePartition cycle_type(const std::vector<int>& p);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt catalan(int n);

// Narayana number N(n, k) = (1/n) C(n,k) C(n,k-1): non-crossing permutations
// of n elements with k B-cycles.
BigInt narayana(int n, int k);

// Kreweras number n! / (m1! ... mn! (n+1-l)!): non-crossing permutations with
// the given B-cycle type.
BigInt kreweras(const CyclePartition& part);

// N_e(n, k) = (2/n) C(n/2,k) C(n,k-1): non-crossing permutations of n elements
// with k B-cycles, all of even length. Requires n even, 1 <= k <= n/2.
BigInt even_narayana(int n, int k);

// Exhaustive list of all non-crossing permutations of {0,..,n-1}, in
// lexicographic order of the permutation word. Guarded at n <= 12.
std::vector<NonCrossingPermutation> enumerate_noncrossing(int n);

// All cycle types of n elements, ordered by cycle count then lexicographically
// by part multiset (largest part first).
std::vector<CyclePartition> all_cycle_types(int n);

}  // namespace tracedist::comb

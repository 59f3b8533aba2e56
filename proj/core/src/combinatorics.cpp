#include "tracedist/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tracedist::comb {

int CyclePartition::cycle_count() const {
  return std::accumulate(multiplicity.begin(), multiplicity.end(), 0);
}

void CyclePartition::validate() const {
  if (n < 1) throw std::invalid_argument("CyclePartition: n must be positive");
  if (static_cast<int>(multiplicity.size()) != n)
    throw std::invalid_argument("CyclePartition: multiplicity list must have n entries");
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    if (multiplicity[i] < 0)
      throw std::invalid_argument("CyclePartition: negative multiplicity");
    total += static_cast<long long>(i + 1) * multiplicity[i];
  }
  if (total != n)
    throw std::invalid_argument("CyclePartition: cycle lengths do not sum to n");
  const int l = cycle_count();
  if (l < 1 || l > n)
    throw std::invalid_argument("CyclePartition: cycle count out of range");
}

bool CyclePartition::all_cycles_even() const {
  for (int i = 0; i < n; i += 2)
    if (multiplicity[i] != 0) return false;  // odd length i+1
  return true;
}

int cycle_count(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  unsigned seen = 0;
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (seen & (1u << i)) continue;
    ++count;
    for (int j = i; !(seen & (1u << j)); j = p[j]) seen |= 1u << j;
  }
  return count;
}

CyclePartition cycle_type(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  CyclePartition part;
  part.n = n;
  part.multiplicity.assign(n, 0);
  unsigned seen = 0;
  for (int i = 0; i < n; ++i) {
    if (seen & (1u << i)) continue;
    int len = 0;
    for (int j = i; !(seen & (1u << j)); j = p[j]) {
      seen |= 1u << j;
      ++len;
    }
    ++part.multiplicity[len - 1];
  }
  return part;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return r;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

BigInt narayana(int n, int k) {
  if (n < 1) throw std::invalid_argument("narayana: n must be positive");
  if (k < 1 || k > n)
    throw std::invalid_argument("narayana: k out of range 1..n");
  return binomial(n, k) * binomial(n, k - 1) / n;
}

BigInt kreweras(const CyclePartition& part) {
  part.validate();
  BigInt denom = factorial(part.n + 1 - part.cycle_count());
  for (int m : part.multiplicity) denom *= factorial(m);
  return factorial(part.n) / denom;
}

BigInt even_narayana(int n, int k) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("even_narayana: n must be even and positive");
  if (k < 1 || k > n / 2)
    throw std::invalid_argument("even_narayana: k out of range 1..n/2");
  return 2 * binomial(n / 2, k) * binomial(n, k - 1) / n;
}

std::vector<NonCrossingPermutation> enumerate_noncrossing(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_noncrossing: n must be positive");
  if (n > 12)
    throw std::length_error("enumerate_noncrossing: n > 12 exceeds factorial guard");

  std::vector<NonCrossingPermutation> out;
  std::vector<int> p(n), q(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (int i = 0; i < n; ++i) q[i] = (p[i] + n - 1) % n;  // shift^{-1} o p
    const int ca = cycle_count(q);
    const int cb = cycle_count(p);
    if (ca + cb == n + 1) {
      NonCrossingPermutation ncp;
      ncp.mapping = p;
      ncp.b_cycle_type = cycle_type(p);
      ncp.a_cycle_count = ca;
      out.push_back(std::move(ncp));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

void collect_types(int remaining, int max_part, std::vector<int>& mult, int n,
                   std::vector<CyclePartition>& out) {
  if (remaining == 0) {
    CyclePartition part;
    part.n = n;
    part.multiplicity = mult;
    out.push_back(std::move(part));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    ++mult[part - 1];
    collect_types(remaining - part, part, mult, n, out);
    --mult[part - 1];
  }
}

}  // namespace

std::vector<CyclePartition> all_cycle_types(int n) {
  if (n < 1) throw std::invalid_argument("all_cycle_types: n must be positive");
  std::vector<CyclePartition> out;
  std::vector<int> mult(n, 0);
  collect_types(n, n, mult, n, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const CyclePartition& a, const CyclePartition& b) {
                     return a.cycle_count() < b.cycle_count();
                   });
  return out;
}

}  // namespace tracedist::comb

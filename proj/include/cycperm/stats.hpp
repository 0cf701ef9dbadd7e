#pragma once

#include <span>
#include <string>
#include <vector>

#include "cycperm/enumerate.hpp"
#include "cycperm/pattern.hpp"
#include "cycperm/perm.hpp"
#include "cycperm/poly.hpp"

namespace cycperm {

enum class Stat { des, maj, inv, exc, pk, cdes, cpk };

Stat stat_from_name(const std::string& name);  // throws InvalidInput when unknown
std::string stat_name(Stat s);

// Positions are 1-based: i is a descent when p_i > p_{i+1}, a peak when
// p_{i-1} < p_i > p_{i+1} (so 2 <= i <= n-1).
std::vector<int> descent_set(const Permutation& p);
std::vector<int> peak_set(const Permutation& p);

int des(const Permutation& p);
int maj(const Permutation& p);  // sum of the descent positions
int inv(const Permutation& p);
int exc(const Permutation& p);  // positions with p_i > i
int pk(const Permutation& p);

// Cyclic statistics of a word read around the circle: position i is a
// cyclic descent when w_i > w_{i+1 mod n}, a cyclic peak when
// w_{i-1 mod n} < w_i > w_{i+1 mod n}.
int cdes_word(std::span<const int> w);
int cpk_word(std::span<const int> w);

int cdes(const CyclicPerm& p);
int cpk(const CyclicPerm& p);

// Dispatch for the linear statistics; throws InvalidInput for cdes/cpk.
int stat_value(Stat s, const Permutation& p);

// Read the class as the function g(w_i) = w_{i-1 mod n}; cyclic descents
// then biject with the excedances {x : g(x) > x}.  True when the two
// counts agree.
bool cdes_matches_excedance(const CyclicPerm& p);

// Sum of q^stat over the linear permutations of length n avoiding a
// linear pattern set.
IntPolynomial stat_genfun_linear(const PatternSet& linear_set, int n, Stat stat,
                                 const ScanConfig& cfg = {});

// Sum of q^cdes over the cyclic classes of size n avoiding a cyclic set.
IntPolynomial cdes_genfun(const PatternSet& cyclic_set, int n, const ScanConfig& cfg = {});

// Sum of q^cdes t^cpk over the same classes.
BivarPolynomial joint_cdes_cpk_genfun(const PatternSet& cyclic_set, int n,
                                      const ScanConfig& cfg = {});

}  // namespace cycperm

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "edgedepth/complex.hpp"
#include "edgedepth/monomial.hpp"

namespace edgedepth {

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint32_t p);

/// Rank over GF(p) of a dense matrix whose entries are already reduced mod p.
int rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

/// Reduced homology ranks; ranks[k + 1] is the rank of H~_k, so the empty
/// face sits at index 0.
struct ChainComplexRanks {
  std::vector<int> ranks;
  int at(int dim) const {
    int i = dim + 1;
    return i >= 0 && i < static_cast<int>(ranks.size()) ? ranks[i] : 0;
  }
  int total() const;
};

ChainComplexRanks reduced_homology(const SimplicialComplex& c, std::uint32_t p = kDefaultPrime);

/// Nonzero multigraded Betti numbers beta_{i,b}(R/J), keyed by (i, b).
using BettiTable = std::map<std::pair<int, Monomial>, int>;

/// beta_{i,b}(R/J) = dim H~_{i-2}(K^b) for i >= 1, where K^b is the upper
/// Koszul complex {F subset of supp b : x^{b-F} in J}, b running over the
/// lcm lattice of the generators.
BettiTable betti_numbers(const MonomialIdeal& j, std::uint32_t p = kDefaultPrime);
int projective_dimension(const BettiTable& betti);
/// n - pd(R/J); throws std::invalid_argument for the zero or unit ideal.
int depth_oracle(const MonomialIdeal& j, std::uint32_t p = kDefaultPrime);

}  // namespace edgedepth

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgedepth/depth.hpp"
#include "edgedepth/serialize.hpp"

namespace edgedepth {

/// One tested instance of a predicted conclusion.
struct VerifiedPoint {
  int t = 0;
  /// What the engine reported, e.g. "ZERO" or "h1=true".
  std::string engine;
  bool consistent = true;
  /// The hypothesis instance this point belongs to, e.g. "v=7".
  std::string detail;
};

struct TheoremCheck {
  std::string id;
  bool hypothesis_holds = false;
  Json witness;
  std::string predicted;
  std::vector<VerifiedPoint> verified;
  /// Sharpness records and other observations that are not predictions.
  Json notes = Json::object();

  bool consistent() const;
};

struct CheckOptions {
  int t_max = 4;
  /// Also compare the depth-1 characterizations with the homology oracle.
  bool with_oracle = false;
  std::uint32_t prime = kDefaultPrime;
  /// Disconnecting vectors examined per t by the face-adjacency step.
  int max_vectors = 64;
};

/// Odd cycle C of length 2r+1 with a vertex v outside N[C] and
/// Gamma_{V \ N[v]} connected: H^1 != 0 for t >= r+1 when C = V \ N[v],
/// for t >= n - |N[v]| - r - 1 otherwise.
TheoremCheck check_thm_2_1(DepthEngine& engine, const CheckOptions& opt);
/// Disjoint maximal independent sets F, G with Gamma_{F u G} connected give
/// symbolic depth one, and H^1 != 0 when all odd cycles dominate, for
/// t >= |F| + |G|; without such a pair neither happens.
std::vector<TheoremCheck> check_thm_2_4_and_2_6(DepthEngine& engine, const CheckOptions& opt);
/// depth R/I = 1 iff V splits into two parts joined completely.
TheoremCheck check_prop_4_1(DepthEngine& engine, const CheckOptions& opt);
/// depth R/I^2 <= 1 iff diam(complement) >= 3 or some triangle C leaves at
/// most one vertex outside N[C] or a disconnected complement there.
TheoremCheck check_thm_4_3(DepthEngine& engine, const CheckOptions& opt);
/// depth R/I^(2) = 1 iff diam(complement) >= 3.
TheoremCheck check_remark_2_5(DepthEngine& engine, const CheckOptions& opt);
/// Implications forcing depth zero at a later power.
std::vector<TheoremCheck> check_decrease_theorems(DepthEngine& engine, const CheckOptions& opt);
/// Persistence of depth zero, localized depth zero, H^1 and symbolic depth
/// one, and the disconnected-complex step between consecutive powers.
std::vector<TheoremCheck> check_persistence_props(DepthEngine& engine, const CheckOptions& opt);

std::vector<TheoremCheck> check_all(DepthEngine& engine, const CheckOptions& opt);

Json to_json(const TheoremCheck& c);

}  // namespace edgedepth

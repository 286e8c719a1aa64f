#pragma once

// Line-bundle cohomology and positivity over irreducible quantum flag manifolds.

#include "qflag/flag.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qflag {

enum class LineBundleClass { Positive, Flat, Negative, Undetermined };

std::string class_name(LineBundleClass c);

struct CohomologySignature {
  Integer h0_dbar;
  Integer h0_del;
};

/// dim H^0_dbar(E_k): dim V_{k varpi_s} for k >= 0, and 0 for k < 0.
Integer borel_weil_h0(const FlagManifold& fm, int k);

/// dim H^(0,i)_dbar(E_k) for k >= 0 and i >= 1, which always vanishes.
/// Throws std::invalid_argument outside that range.
Integer bott_borel_weil(const FlagManifold& fm, int k, int i);

LineBundleClass classify_from_h0(const CohomologySignature& sig);

/// Signature of E_k: h0_dbar from E_k, h0_del from the dual bundle E_{-k}.
CohomologySignature flag_bundle_signature(const FlagManifold& fm, int k);

LineBundleClass classify_flag_bundle(const FlagManifold& fm, int k);

/// Bidegrees (a, b) in [0, M]^2 where Kodaira vanishing predicts zero cohomology.
/// Throws std::invalid_argument for Flat or Undetermined.
std::vector<std::pair<int, int>> kodaira_predictions(LineBundleClass c, int dim_M);

struct FanoCertificate {
  bool verdict = false;
  int canonical_degree = 0;              // k with Omega^(M,0) = E_{-k}
  LineBundleClass canonical_class = LineBundleClass::Undetermined;
  CohomologySignature signature;         // of E_{-k}
};

FanoCertificate fano_verdict(const FlagManifold& fm);

}  // namespace qflag

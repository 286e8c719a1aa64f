#include "qflag/bundles.hpp"

#include <stdexcept>

namespace qflag {

std::string class_name(LineBundleClass c) {
  switch (c) {
    case LineBundleClass::Positive: return "Positive";
    case LineBundleClass::Flat: return "Flat";
    case LineBundleClass::Negative: return "Negative";
    case LineBundleClass::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

Integer borel_weil_h0(const FlagManifold& fm, int k) {
  if (k < 0) return 0;
  const auto& rs = fm.root_system;
  return weyl_dim(rs, Weight::fundamental(rs.rank, fm.node).scaled(k));
}

Integer bott_borel_weil(const FlagManifold&, int k, int i) {
  if (k < 0) throw std::invalid_argument("bott_borel_weil: requires k >= 0");
  if (i < 1) throw std::invalid_argument("bott_borel_weil: requires i >= 1; degree 0 is borel_weil_h0");
  return 0;
}

LineBundleClass classify_from_h0(const CohomologySignature& sig) {
  const bool dbar = sig.h0_dbar > 0;
  const bool del = sig.h0_del > 0;
  if (dbar && !del) return LineBundleClass::Positive;
  if (!dbar && del) return LineBundleClass::Negative;
  if (dbar && del && sig.h0_dbar == sig.h0_del) return LineBundleClass::Flat;
  return LineBundleClass::Undetermined;
}

CohomologySignature flag_bundle_signature(const FlagManifold& fm, int k) {
  return CohomologySignature{borel_weil_h0(fm, k), borel_weil_h0(fm, -k)};
}

LineBundleClass classify_flag_bundle(const FlagManifold& fm, int k) {
  return classify_from_h0(flag_bundle_signature(fm, k));
}

std::vector<std::pair<int, int>> kodaira_predictions(LineBundleClass c, int dim_M) {
  if (c != LineBundleClass::Positive && c != LineBundleClass::Negative)
    throw std::invalid_argument("kodaira_predictions: only defined for Positive or Negative bundles");
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= dim_M; ++a)
    for (int b = 0; b <= dim_M; ++b) {
      const bool hit = c == LineBundleClass::Positive ? a + b > dim_M : a + b < dim_M;
      if (hit) out.emplace_back(a, b);
    }
  return out;
}

FanoCertificate fano_verdict(const FlagManifold& fm) {
  FanoCertificate cert;
  cert.canonical_degree = fm.canonical_degree;
  cert.signature = flag_bundle_signature(fm, -fm.canonical_degree);
  cert.canonical_class = classify_from_h0(cert.signature);
  cert.verdict = cert.canonical_degree > 0 && cert.canonical_class == LineBundleClass::Negative;
  return cert;
}

}  // namespace qflag

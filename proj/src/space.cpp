#include <stdexcept>

#include "realgw/graphs.hpp"

namespace realgw {

int conjugate_label(const SpaceSpec& space, int label) {
  if (label < 1 || label > space.num_labels())
    throw std::out_of_range("label " + std::to_string(label) + " outside 1.." +
                            std::to_string(space.num_labels()));
  return label % 2 ? label + 1 : label - 1;
}

std::string to_string(Involution phi) { return phi == Involution::kTau ? "tau" : "eta"; }

std::string to_string(GraphKind kind) {
  return kind == GraphKind::kSeparable ? "separable" : "non-separable";
}

std::string to_string(InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::kCa: return "c_a";
    case InvolutionKind::kCm: return "c_m";
    case InvolutionKind::kCk: return "c_k";
  }
  return "?";
}

Involution parse_involution(const std::string& s) {
  if (s == "tau") return Involution::kTau;
  if (s == "eta") return Involution::kEta;
  throw std::invalid_argument("unknown involution '" + s + "' (expected tau or eta)");
}

}  // namespace realgw

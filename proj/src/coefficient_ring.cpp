#include "cyclehom/coefficient_ring.hpp"

#include <cctype>

namespace cyclehom {

CoefficientRing CoefficientRing::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 2 && text[0] == 'Z' && text[1] == '/') {
    const std::string digits = text.substr(2);
    bool numeric = true;
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
    if (numeric) return mod(BigInt(digits));
  }
  throw ParseError("unrecognized coefficient ring \"" + text + "\"; expected Z, Q, or Z/n");
}

}  // namespace cyclehom

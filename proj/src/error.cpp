#include "fpoly/error.hpp"

namespace fpoly {

void check_cap(const std::string& what, std::size_t required, std::size_t cap) {
  if (cap > kMaxMaskBits) throw CapExceeded(what + " cap", cap, kMaxMaskBits);
  if (required > cap) throw CapExceeded(what, required, cap);
}

}  // namespace fpoly

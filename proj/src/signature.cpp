#include "torusrep/signature.hpp"

#include <stdexcept>

namespace torusrep {

Signature::Signature(std::vector<long long> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty()) {
    throw std::invalid_argument("signature must be nonempty");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) {
      throw std::invalid_argument("signature entries must be nonzero");
    }
    if (i > 0 && exponents_[i - 1] > exponents_[i]) {
      throw std::invalid_argument("signature must be sorted ascending");
    }
  }
}

}  // namespace torusrep

#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace torusrep {

/**
 * A nonempty ascending sequence of nonzero integer exponents. Signatures
 * label block representations; two blocks combine only when their
 * signatures are equal, so Signature is ordered for use as a map key.
 */
class Signature {
 public:
  // Throws std::invalid_argument if exponents is empty, contains a zero,
  // or is not sorted ascending.
  explicit Signature(std::vector<long long> exponents);

  std::size_t length() const { return exponents_.size(); }
  const std::vector<long long>& exponents() const { return exponents_; }
  long long exponent(std::size_t i) const { return exponents_[i]; }

  bool operator==(const Signature& other) const = default;
  auto operator<=>(const Signature& other) const {
    return exponents_ <=> other.exponents_;
  }

 private:
  std::vector<long long> exponents_;
};

}  // namespace torusrep

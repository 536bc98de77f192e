#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace proxim {

using FieldElement = std::uint8_t;

/// GF(q) for prime powers 2 <= q <= 32, as full addition/multiplication
/// tables. Elements are 0..q-1; element e encodes the polynomial whose
/// coefficient of x^i is the i-th base-p digit of e. 0 and 1 are the
/// additive and multiplicative identities.
class FiniteField {
public:
  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  /// Coefficients c_0..c_{m-1} of the monic reduction polynomial
  /// x^m + c_{m-1} x^{m-1} + ... + c_0; empty for prime fields.
  const std::vector<std::uint32_t>& reduction_polynomial() const { return reduction_; }

  FieldElement add(FieldElement a, FieldElement b) const { return add_[a * q_ + b]; }
  FieldElement mul(FieldElement a, FieldElement b) const { return mul_[a * q_ + b]; }
  FieldElement neg(FieldElement a) const { return neg_[a]; }
  /// Multiplicative inverse; a must be nonzero.
  FieldElement inv(FieldElement a) const { return inv_[a]; }

private:
  friend FiniteField make_field(std::uint32_t q);

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::vector<std::uint32_t> reduction_;
  std::vector<FieldElement> add_;
  std::vector<FieldElement> mul_;
  std::vector<FieldElement> neg_;
  std::vector<FieldElement> inv_;
};

/// Builds and table-verifies GF(q). Throws InvalidArgument when q is not a
/// prime power in [2, 32].
FiniteField make_field(std::uint32_t q);

} // namespace proxim

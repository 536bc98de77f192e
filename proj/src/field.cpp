#include "proxim/field.hpp"

#include <map>
#include <optional>
#include <string>

#include "proxim/errors.hpp"

namespace proxim {

namespace {

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
};

std::optional<PrimePower> factor_prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, m};
}

// Monic irreducible reduction polynomials, low coefficients first.
const std::map<std::uint32_t, std::vector<std::uint32_t>>& reduction_table() {
  static const std::map<std::uint32_t, std::vector<std::uint32_t>> table{
      {4, {1, 1}},          // x^2 + x + 1
      {8, {1, 1, 0}},       // x^3 + x + 1
      {16, {1, 1, 0, 0}},   // x^4 + x + 1
      {32, {1, 0, 1, 0, 0}}, // x^5 + x^2 + 1
      {9, {1, 0}},          // x^2 + 1
      {25, {2, 4}},         // x^2 + 4x + 2
      {27, {1, 2, 0}},      // x^3 + 2x + 1
  };
  return table;
}

using Poly = std::vector<std::uint32_t>;

Poly to_poly(std::uint32_t e, std::uint32_t p, std::uint32_t m) {
  Poly c(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    c[i] = e % p;
    e /= p;
  }
  return c;
}

std::uint32_t from_poly(const Poly& c, std::uint32_t p) {
  std::uint32_t e = 0;
  for (std::size_t i = c.size(); i-- > 0;) e = e * p + c[i];
  return e;
}

std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t m, const Poly& red) {
  const Poly x = to_poly(a, p, m);
  const Poly y = to_poly(b, p, m);
  Poly prod(2 * m, 0);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  // x^m == -(c_{m-1} x^{m-1} + ... + c_0)
  for (std::size_t d = prod.size(); d-- > m;) {
    const std::uint32_t lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      const std::size_t k = d - m + i;
      prod[k] = (prod[k] + (p - (lead * red[i]) % p)) % p;
    }
  }
  prod.resize(m);
  return from_poly(prod, p);
}

void verify_field(const FiniteField& f) {
  const std::uint32_t q = f.order();
  auto fail = [&](const std::string& what) {
    throw ConstructionIntegrityError("GF(" + std::to_string(q) + ")", what);
  };
  for (std::uint32_t a = 0; a < q; ++a) {
    if (f.add(a, 0) != a || f.mul(a, 1) != a) fail("identity elements");
    if (f.add(a, f.neg(a)) != 0) fail("additive inverse of " + std::to_string(a));
    if (a != 0 && f.mul(a, f.inv(a)) != 1) fail("multiplicative inverse of " + std::to_string(a));
    for (std::uint32_t b = 0; b < q; ++b) {
      if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) fail("commutativity");
      for (std::uint32_t c = 0; c < q; ++c) {
        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) fail("additive associativity");
        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) fail("multiplicative associativity");
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) fail("distributivity");
      }
    }
  }
}

} // namespace

FiniteField make_field(std::uint32_t q) {
  const auto pp = factor_prime_power(q);
  if (!pp) throw InvalidArgument("field order " + std::to_string(q) + " is not a prime power");
  if (q > 32) throw InvalidArgument("field order " + std::to_string(q) + " is unsupported (maximum 32)");

  FiniteField f;
  f.q_ = q;
  f.p_ = pp->p;
  f.m_ = pp->m;
  if (f.m_ > 1) f.reduction_ = reduction_table().at(q);

  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly x = to_poly(a, f.p_, f.m_);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly y = to_poly(b, f.p_, f.m_);
      Poly s(f.m_);
      for (std::uint32_t i = 0; i < f.m_; ++i) s[i] = (x[i] + y[i]) % f.p_;
      f.add_[a * q + b] = static_cast<FieldElement>(from_poly(s, f.p_));
      f.mul_[a * q + b] = static_cast<FieldElement>(
          f.m_ == 1 ? (a * b) % q : poly_mul_mod(a, b, f.p_, f.m_, f.reduction_));
    }
  }
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      if (f.add_[a * q + b] == 0) f.neg_[a] = static_cast<FieldElement>(b);
      if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<FieldElement>(b);
    }
  verify_field(f);
  return f;
}

} // namespace proxim

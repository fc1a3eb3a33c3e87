#include "pgq/field.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pgq/error.hpp"

namespace pgq {

namespace {

struct BuiltinField {
  int q, p, k;
  std::array<int, 5> modulus;  // low degree first, monic, k + 1 entries used
};

// Conway polynomials for the extension orders.
constexpr std::array<BuiltinField, 12> kBuiltins{{
    {2, 2, 1, {0, 1}},
    {3, 3, 1, {0, 1}},
    {4, 2, 2, {1, 1, 1}},        // x^2 + x + 1
    {5, 5, 1, {0, 1}},
    {7, 7, 1, {0, 1}},
    {8, 2, 3, {1, 1, 0, 1}},     // x^3 + x + 1
    {9, 3, 2, {2, 2, 1}},        // x^2 + 2x + 2
    {11, 11, 1, {0, 1}},
    {13, 13, 1, {0, 1}},
    {16, 2, 4, {1, 1, 0, 0, 1}}, // x^4 + x + 1
    {25, 5, 2, {2, 4, 1}},       // x^2 + 4x + 2
    {27, 3, 3, {1, 2, 0, 1}},    // x^3 + 2x + 1
}};

constexpr std::array<int, 12> kOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

const BuiltinField& builtin(int q) {
  for (const auto& f : kBuiltins)
    if (f.q == q) return f;
  throw UnsupportedOrder("unsupported field order " + std::to_string(q));
}

using Poly = std::vector<int>;  // low degree first, coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      int c = code;
      for (int i = 0; i < d; ++i, c /= p) g[i] = c % p;
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::span<const int> supported_orders() { return kOrders; }

FieldSpec field_spec(int q) {
  const auto& b = builtin(q);
  FieldSpec s;
  s.p = b.p;
  s.k = b.k;
  s.q = b.q;
  s.modulus.assign(b.modulus.begin(), b.modulus.begin() + b.k + 1);
  return s;
}

FieldTable FieldTable::make(int q) {
  FieldTable f;
  f.spec_ = field_spec(q);
  const int p = f.spec_.p, k = f.spec_.k;

  if (k > 1 && !is_irreducible(f.spec_.modulus, p))
    throw UnsupportedOrder("built-in modulus for GF(" + std::to_string(q) +
                           ") is reducible");

  auto digits = [&](int code) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i, code /= p) d[i] = code % p;
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * p + d[i];
    return code;
  };

  const std::size_t qq = static_cast<std::size_t>(q) * q;
  f.add_.resize(qq);
  f.mul_.resize(qq);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<int> sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_[a * q + b] = static_cast<Elem>(encode(sum));

      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      Poly r = k > 1 ? poly_mod(prod, f.spec_.modulus, p) : prod;
      r.resize(k, 0);
      f.mul_[a * q + b] = static_cast<Elem>(encode(r));
    }
  }

  f.neg_.assign(q, 0);
  f.inv_.assign(q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (f.add_[a * q + b] == 0) f.neg_[a] = static_cast<Elem>(b);
      if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<Elem>(b);
    }

  // Exhaustive field-axiom check; q <= 27 keeps this at ~20k triples.
  for (int a = 0; a < q; ++a) {
    if (f.add_[a * q] != a || f.mul_[a * q + 1] != a || f.add_[a * q + f.neg_[a]] != 0)
      throw UnsupportedOrder("identity/negation axiom fails in GF(" + std::to_string(q) + ")");
    if (a != 0 && f.mul_[a * q + f.inv_[a]] != 1)
      throw UnsupportedOrder("GF(" + std::to_string(q) + ") has a non-invertible element");
    for (int b = 0; b < q; ++b) {
      if (f.add_[a * q + b] != f.add_[b * q + a] || f.mul_[a * q + b] != f.mul_[b * q + a])
        throw UnsupportedOrder("commutativity fails in GF(" + std::to_string(q) + ")");
      for (int c = 0; c < q; ++c) {
        const int ab = f.mul_[a * q + b], bc = f.mul_[b * q + c];
        if (f.mul_[ab * q + c] != f.mul_[a * q + bc] ||
            f.add_[f.add_[a * q + b] * q + c] != f.add_[a * q + f.add_[b * q + c]] ||
            f.mul_[a * q + f.add_[b * q + c]] != f.add_[ab * q + f.mul_[a * q + c]])
          throw UnsupportedOrder("associativity/distributivity fails in GF(" +
                                 std::to_string(q) + ")");
      }
    }
  }

  // Frobenius powers.
  f.autos_.resize(static_cast<std::size_t>(k) * q);
  for (int a = 0; a < q; ++a) f.autos_[a] = static_cast<Elem>(a);
  for (int i = 1; i < k; ++i)
    for (int a = 0; a < q; ++a) {
      Elem x = f.autos_[static_cast<std::size_t>(i - 1) * q + a];
      Elem y = 1;
      for (int e = 0; e < p; ++e) y = f.mul(y, x);
      f.autos_[static_cast<std::size_t>(i) * q + a] = y;
    }
  return f;
}

bool monomorphisms_all_surjective(const FieldSpec& src, const FieldSpec& tgt) {
  if (src.p != tgt.p) return true;
  if (tgt.k % src.k != 0) return true;
  return src.q == tgt.q;
}

}  // namespace pgq

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pgq {

/// Element of GF(q), encoded as the base-p digits of its polynomial
/// coefficients: c0 + c1*x + ... <-> c0 + c1*p + ...
using Elem = std::uint8_t;

struct FieldSpec {
  int p = 0;
  int k = 0;
  int q = 0;
  /// Monic defining polynomial, low degree first (size k + 1). For k == 1
  /// the slot is unused and holds {0, 1}.
  std::vector<int> modulus;

  bool operator==(const FieldSpec&) const = default;
};

/// Built-in field orders.
std::span<const int> supported_orders();

/// GF(q) with full operation tables. Immutable after construction.
class FieldTable {
 public:
  /// Throws UnsupportedOrder unless q is in supported_orders().
  static FieldTable make(int q);

  const FieldSpec& spec() const noexcept { return spec_; }
  int order() const noexcept { return spec_.q; }
  int characteristic() const noexcept { return spec_.p; }
  int degree() const noexcept { return spec_.k; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * spec_.q + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * spec_.q + neg_[b]]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * spec_.q + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  /// Undefined at 0.
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem div(Elem a, Elem b) const noexcept { return mul(a, inv_[b]); }

  /// automorphism(i) is x -> x^(p^i); automorphism(0) is the identity.
  std::span<const Elem> automorphism(int i) const noexcept {
    return {autos_.data() + static_cast<std::size_t>(i) * spec_.q,
            static_cast<std::size_t>(spec_.q)};
  }
  int automorphism_count() const noexcept { return spec_.k; }
  Elem apply_automorphism(int i, Elem a) const noexcept {
    return autos_[static_cast<std::size_t>(i) * spec_.q + a];
  }

 private:
  FieldTable() = default;

  FieldSpec spec_;
  std::vector<Elem> add_, mul_, neg_, inv_, autos_;
};

/// Field spec for a supported order, without building tables.
FieldSpec field_spec(int q);

/// True iff every monomorphism GF(src.q) -> GF(tgt.q) is surjective.
/// A monomorphism exists only when the characteristics agree and src.k
/// divides tgt.k; then it is onto exactly when the orders agree.
bool monomorphisms_all_surjective(const FieldSpec& src, const FieldSpec& tgt);

}  // namespace pgq

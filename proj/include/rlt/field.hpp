#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rlt/error.hpp"

namespace rlt {

/// Field element, stored as an index in [0, q).  For F_{p^k} the index is
/// the base-p encoding of the residue polynomial: c_0 + c_1*p + ... + c_{k-1}*p^{k-1}.
using fel = uint32_t;

/// Exact arithmetic in F_{p^k}, p an odd prime (p >= 3 throughout the toolkit).
///
/// Extension fields are residue rings F_p[t]/(m) with a fixed monic irreducible
/// modulus, so serialized element indices are stable across runs.  Fields of
/// order up to `table_limit` precompute full add/mul tables; larger fields do
/// polynomial arithmetic per operation.
class Field {
 public:
  static constexpr uint64_t table_limit = 4096;

  /// Prime field F_p.
  explicit Field(uint32_t p);

  /// F_{p^k}.  `modulus` lists k coefficients c_0..c_{k-1} of the monic
  /// modulus t^k + c_{k-1} t^{k-1} + ... + c_0 over F_p; when empty, the
  /// lexicographically least monic irreducible of degree k is chosen.
  Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus = {});

  uint32_t p() const { return impl_->p; }
  uint32_t degree() const { return impl_->k; }
  uint64_t order() const { return impl_->q; }
  const std::vector<uint32_t>& modulus() const { return impl_->modulus; }

  fel zero() const { return 0; }
  fel one() const { return 1; }

  fel add(fel a, fel b) const;
  fel sub(fel a, fel b) const;
  fel neg(fel a) const;
  fel mul(fel a, fel b) const;
  fel inv(fel a) const;
  fel div(fel a, fel b) const { return mul(a, inv(b)); }
  fel pow(fel a, uint64_t e) const;

  /// Frobenius x -> x^p and its inverse (x -> x^{p^{k-1}}).
  fel frob(fel a) const;
  fel frob_inv(fel a) const;
  /// x -> x^{p^i}
  fel frob_pow(fel a, uint32_t i) const;

  /// Element from an integer (reduced mod p for prime fields; base-p digit
  /// expansion, digitwise reduced, otherwise).
  fel from_int(int64_t v) const;
  /// Element from polynomial coefficients c_0..c_{k-1} (values reduced mod p).
  fel from_coeffs(const std::vector<int64_t>& c) const;
  /// Coefficient vector c_0..c_{k-1} of an element.
  std::vector<uint32_t> coeffs(fel a) const;

  std::string str(fel a) const;

  bool same(const Field& o) const { return impl_ == o.impl_ || (p() == o.p() && degree() == o.degree() && modulus() == o.modulus()); }

  /// All elements, in index order.
  std::vector<fel> elements() const;

  /// The prime subfield copy of this field's description.
  Field prime_field() const { return Field(p()); }

 private:
  struct Impl {
    uint32_t p = 0, k = 1;
    uint64_t q = 0;
    std::vector<uint32_t> modulus;  // c_0..c_{k-1}
    bool tabled = false;
    std::vector<fel> add_t, mul_t;  // q*q when tabled
    std::vector<fel> neg_t, inv_t, frob_t, frobinv_t;
  };
  std::shared_ptr<const Impl> impl_;

  fel poly_add(fel a, fel b) const;
  fel poly_mul(fel a, fel b) const;
  void build(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);
};

/// Embedding of a subfield into an extension with compatible characteristic;
/// finds the least root of the small modulus in the big field.  Identity map
/// when the fields are equal.
class FieldEmbedding {
 public:
  FieldEmbedding(const Field& small, const Field& big);
  const Field& domain() const { return small_; }
  const Field& codomain() const { return big_; }
  fel operator()(fel a) const { return map_[a]; }

 private:
  Field small_, big_;
  std::vector<fel> map_;
};

/// True if the monic polynomial t^k + c_{k-1}t^{k-1} + ... + c_0 (coefficients
/// over F_p) is irreducible; exhaustive trial division by low-degree monics.
bool is_irreducible_monic(uint32_t p, const std::vector<uint32_t>& coeffs);

}  // namespace rlt

#include "rlt/field.hpp"

#include <algorithm>

namespace rlt {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::char_two_unsupported: return "CharTwoUnsupported";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_unipotent: return "NotUnipotent";
    case errc::dimension_too_small: return "DimensionTooSmall";
    case errc::zero_vector: return "ZeroVector";
    case errc::not_p_nilpotent: return "NotPNilpotent";
    case errc::not_p_closed: return "NotPClosed";
    case errc::not_constant_rank_on_plane: return "NotConstantRankOnPlane";
    case errc::not_endotrivial_on_plane: return "NotEndotrivialOnPlane";
    case errc::walk_depth_exceeded: return "WalkDepthExceeded";
    case errc::empty_e2: return "EmptyE2";
    case errc::dimension_divisible_by_p: return "DimensionDivisibleByP";
    case errc::not_supersolvable: return "NotSupersolvable";
    case errc::not_endotrivial: return "NotEndotrivial";
    case errc::not_split: return "NotSplit";
    case errc::unknown_entry: return "UnknownEntry";
    case errc::bad_parameters: return "BadParameters";
    case errc::axiom_failure: return "AxiomFailure";
    case errc::format_error: return "FormatError";
    case errc::verify_failed: return "VerifyFailed";
    case errc::undecided: return "Undecided";
    case errc::internal: return "Internal";
  }
  return "Error";
}

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial arithmetic over F_p on small coefficient vectors,
// used only for modulus search and untabled fields.
using pvec = std::vector<uint32_t>;

pvec pmul(uint32_t p, const pvec& a, const pvec& b) {
  if (a.empty() || b.empty()) return {};
  pvec c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + (uint64_t)a[i] * b[j]) % p;
  }
  return c;
}

void ptrim(pvec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m, m monic (as full coefficient vector with leading 1).
pvec pmod(uint32_t p, pvec a, const pvec& m) {
  ptrim(a);
  size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint32_t lead = a.back();
    size_t shift = a.size() - 1 - dm;
    if (lead) {
      for (size_t i = 0; i < dm; ++i) {
        uint64_t t = (uint64_t)lead * m[i] % p;
        a[shift + i] = (a[shift + i] + p - (uint32_t)t) % p;
      }
    }
    a.pop_back();
    ptrim(a);
    if (a.size() <= dm) break;
  }
  return a;
}

}  // namespace

bool is_irreducible_monic(uint32_t p, const std::vector<uint32_t>& coeffs) {
  uint32_t k = (uint32_t)coeffs.size();
  if (k == 0) return false;
  pvec m(coeffs.begin(), coeffs.end());
  m.push_back(1);  // monic
  if (coeffs[0] == 0) return k == 1;  // divisible by t
  // Trial division by every monic polynomial of degree 1..k/2.
  for (uint32_t d = 1; 2 * d <= k; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      pvec g(d + 1, 0);
      uint64_t t = idx;
      for (uint32_t i = 0; i < d; ++i) {
        g[i] = (uint32_t)(t % p);
        t /= p;
      }
      g[d] = 1;
      pvec r = pmod(p, m, g);
      if (r.empty()) return false;
    }
  }
  return true;
}

void Field::build(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) {
  check(p != 2, errc::char_two_unsupported, "characteristic 2 is outside the standing hypothesis (p >= 3)");
  check(is_prime_u32(p), errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  check(k >= 1, errc::bad_parameters, "extension degree must be >= 1");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    check(q <= (1ull << 31), errc::budget_exceeded, "field order too large");
  }
  impl->q = q;

  if (k == 1) {
    impl->modulus = {};
  } else if (!modulus.empty()) {
    check(modulus.size() == k, errc::bad_parameters, "modulus must have degree k");
    for (auto& c : modulus) c %= p;
    check(is_irreducible_monic(p, modulus), errc::not_irreducible, "modulus is reducible over F_p");
    impl->modulus = modulus;
  } else {
    // Deterministic choice: least base-p encoding c_0 + c_1 p + ... that is irreducible.
    bool found = false;
    for (uint64_t idx = 0; idx < q && !found; ++idx) {
      std::vector<uint32_t> c(k);
      uint64_t t = idx;
      for (uint32_t i = 0; i < k; ++i) {
        c[i] = (uint32_t)(t % p);
        t /= p;
      }
      if (is_irreducible_monic(p, c)) {
        impl->modulus = c;
        found = true;
      }
    }
    check(found, errc::internal, "no irreducible modulus found");
  }

  if (q <= table_limit) {
    impl->tabled = true;
    impl->add_t.resize(q * q);
    impl->mul_t.resize(q * q);
    impl->neg_t.resize(q);
    impl->inv_t.resize(q);
    impl->frob_t.resize(q);
    impl->frobinv_t.resize(q);
    impl_ = impl;  // poly_* helpers need impl_ set
    auto raw = std::const_pointer_cast<Impl>(std::static_pointer_cast<const Impl>(impl_));
    for (uint64_t a = 0; a < q; ++a)
      for (uint64_t b = 0; b < q; ++b) {
        raw->add_t[a * q + b] = poly_add((fel)a, (fel)b);
        raw->mul_t[a * q + b] = poly_mul((fel)a, (fel)b);
      }
    for (uint64_t a = 0; a < q; ++a) {
      // negation: solve a + x = 0 by scan of the add row
      for (uint64_t b = 0; b < q; ++b)
        if (raw->add_t[a * q + b] == 0) raw->neg_t[a] = (fel)b;
      raw->inv_t[a] = 0;
      if (a) {
        for (uint64_t b = 1; b < q; ++b)
          if (raw->mul_t[a * q + b] == 1) raw->inv_t[a] = (fel)b;
      }
      fel x = (fel)a, acc = 1;
      uint32_t e = p;
      while (e) {
        if (e & 1) acc = raw->mul_t[(uint64_t)acc * q + x];
        x = raw->mul_t[(uint64_t)x * q + x];
        e >>= 1;
      }
      raw->frob_t[a] = acc;
    }
    for (uint64_t a = 0; a < q; ++a) raw->frobinv_t[raw->frob_t[a]] = (fel)a;
  } else {
    impl->tabled = false;
    impl_ = impl;
  }
}

Field::Field(uint32_t p) { build(p, 1, {}); }
Field::Field(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) { build(p, k, std::move(modulus)); }

fel Field::poly_add(fel a, fel b) const {
  uint32_t p = impl_->p, k = impl_->k;
  fel r = 0;
  uint64_t mult = 1;
  for (uint32_t i = 0; i < k; ++i) {
    uint32_t ca = a % p, cb = b % p;
    a /= p;
    b /= p;
    r += (fel)(((ca + cb) % p) * mult);
    mult *= p;
  }
  return r;
}

fel Field::poly_mul(fel a, fel b) const {
  uint32_t p = impl_->p, k = impl_->k;
  if (k == 1) return (fel)((uint64_t)a * b % p);
  pvec pa(k, 0), pb(k, 0);
  for (uint32_t i = 0; i < k; ++i) {
    pa[i] = a % p;
    a /= p;
    pb[i] = b % p;
    b /= p;
  }
  pvec m(impl_->modulus.begin(), impl_->modulus.end());
  m.push_back(1);
  pvec c = pmod(p, pmul(p, pa, pb), m);
  fel r = 0;
  uint64_t mult = 1;
  for (uint32_t i = 0; i < k; ++i) {
    r += (fel)((i < c.size() ? c[i] : 0) * mult);
    mult *= p;
  }
  return r;
}

fel Field::add(fel a, fel b) const {
  if (impl_->tabled) return impl_->add_t[(uint64_t)a * impl_->q + b];
  return poly_add(a, b);
}

fel Field::sub(fel a, fel b) const { return add(a, neg(b)); }

fel Field::neg(fel a) const {
  if (impl_->tabled) return impl_->neg_t[a];
  uint32_t p = impl_->p, k = impl_->k;
  fel r = 0;
  uint64_t mult = 1;
  for (uint32_t i = 0; i < k; ++i) {
    uint32_t c = a % p;
    a /= p;
    r += (fel)(((p - c) % p) * mult);
    mult *= p;
  }
  return r;
}

fel Field::mul(fel a, fel b) const {
  if (impl_->tabled) return impl_->mul_t[(uint64_t)a * impl_->q + b];
  return poly_mul(a, b);
}

fel Field::inv(fel a) const {
  check(a != 0, errc::internal, "division by zero");
  if (impl_->tabled) return impl_->inv_t[a];
  return pow(a, impl_->q - 2);
}

fel Field::pow(fel a, uint64_t e) const {
  fel acc = 1, x = a;
  while (e) {
    if (e & 1) acc = mul(acc, x);
    x = mul(x, x);
    e >>= 1;
  }
  return acc;
}

fel Field::frob(fel a) const {
  if (impl_->tabled) return impl_->frob_t[a];
  return pow(a, impl_->p);
}

fel Field::frob_inv(fel a) const {
  if (impl_->tabled) return impl_->frobinv_t[a];
  fel r = a;
  for (uint32_t i = 0; i + 1 < impl_->k; ++i) r = frob(r);
  return r;
}

fel Field::frob_pow(fel a, uint32_t i) const {
  i %= impl_->k;
  fel r = a;
  for (uint32_t j = 0; j < i; ++j) r = frob(r);
  return r;
}

fel Field::from_int(int64_t v) const {
  int64_t p = impl_->p;
  int64_t r = v % p;
  if (r < 0) r += p;
  return (fel)r;
}

fel Field::from_coeffs(const std::vector<int64_t>& c) const {
  check(c.size() <= impl_->k, errc::format_error, "too many coefficients for field element");
  fel r = 0;
  uint64_t mult = 1;
  for (size_t i = 0; i < impl_->k; ++i) {
    int64_t v = i < c.size() ? c[i] % (int64_t)impl_->p : 0;
    if (v < 0) v += impl_->p;
    r += (fel)(v * mult);
    mult *= impl_->p;
  }
  return r;
}

std::vector<uint32_t> Field::coeffs(fel a) const {
  std::vector<uint32_t> c(impl_->k);
  for (uint32_t i = 0; i < impl_->k; ++i) {
    c[i] = a % impl_->p;
    a /= impl_->p;
  }
  return c;
}

std::string Field::str(fel a) const { return std::to_string(a); }

std::vector<fel> Field::elements() const {
  std::vector<fel> v(impl_->q);
  for (uint64_t i = 0; i < impl_->q; ++i) v[i] = (fel)i;
  return v;
}

FieldEmbedding::FieldEmbedding(const Field& small, const Field& big) : small_(small), big_(big) {
  check(small.p() == big.p(), errc::dimension_mismatch, "embedding requires equal characteristic");
  check(big.degree() % small.degree() == 0, errc::dimension_mismatch,
        "no embedding: subfield degree does not divide");
  map_.resize(small.order());
  if (small.same(big)) {
    for (uint64_t a = 0; a < small.order(); ++a) map_[a] = (fel)a;
    return;
  }
  // Least root of the small modulus (or of t - c for prime fields) in big.
  uint32_t k = small.degree();
  fel root = 0;
  if (k == 1) {
    root = 1;  // unused
  } else {
    bool found = false;
    for (uint64_t r = 0; r < big.order() && !found; ++r) {
      // evaluate t^k + sum c_i t^i at r
      fel v = big.pow((fel)r, k);
      fel tp = 1;
      for (uint32_t i = 0; i < k; ++i) {
        fel ci = big.from_int((int64_t)small.modulus()[i]);
        v = big.add(v, big.mul(ci, tp));
        tp = big.mul(tp, (fel)r);
      }
      if (v == 0) {
        root = (fel)r;
        found = true;
      }
    }
    check(found, errc::internal, "embedding root not found");
  }
  for (uint64_t a = 0; a < small.order(); ++a) {
    auto c = small.coeffs((fel)a);
    fel v = 0, tp = 1;
    for (uint32_t i = 0; i < k; ++i) {
      v = big.add(v, big.mul(big.from_int((int64_t)c[i]), tp));
      if (k > 1) tp = big.mul(tp, root);
    }
    map_[a] = v;
  }
}

}  // namespace rlt

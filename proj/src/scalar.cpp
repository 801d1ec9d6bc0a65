#include "ortho/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <span>
#include <sstream>
#include <utility>

namespace ortho {

namespace {

using RatSpan = std::span<const Rat>;
using MutSpan = std::span<Rat>;

bool all_zero(RatSpan v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

// dst += a * b over the first `depth` radicands of spec; all spans 2^depth long.
void mul_acc(const FieldSpec& spec, std::size_t depth, RatSpan a, RatSpan b, MutSpan dst) {
  if (all_zero(a) || all_zero(b)) return;
  if (depth == 0) {
    dst[0] += a[0] * b[0];
    return;
  }
  const std::size_t h = std::size_t(1) << (depth - 1);
  RatSpan a0 = a.first(h), a1 = a.subspan(h);
  RatSpan b0 = b.first(h), b1 = b.subspan(h);
  MutSpan c0 = dst.first(h), c1 = dst.subspan(h);
  mul_acc(spec, depth - 1, a0, b0, c0);
  if (!all_zero(a1) && !all_zero(b1)) {
    std::vector<Rat> t(h);
    mul_acc(spec, depth - 1, a1, b1, MutSpan(t));
    mul_acc(spec, depth - 1, RatSpan(t), RatSpan(spec.radicand_coords(depth - 1)), c0);
  }
  mul_acc(spec, depth - 1, a0, b1, c1);
  mul_acc(spec, depth - 1, a1, b0, c1);
}

std::vector<Rat> mul_coords(const FieldSpec& spec, std::size_t depth, RatSpan a, RatSpan b) {
  std::vector<Rat> out(std::size_t(1) << depth);
  mul_acc(spec, depth, a, b, MutSpan(out));
  return out;
}

// A^2 - B^2 * d at level depth (halves of a depth+1 element). Non-zero for
// non-zero (A,B) because d is not a square at its level.
std::vector<Rat> norm_form(const FieldSpec& spec, std::size_t depth, RatSpan a, RatSpan b) {
  const std::size_t h = std::size_t(1) << depth;
  std::vector<Rat> n = mul_coords(spec, depth, a, a);
  if (!all_zero(b)) {
    std::vector<Rat> b2 = mul_coords(spec, depth, b, b);
    std::vector<Rat> db2 = mul_coords(spec, depth, RatSpan(b2), RatSpan(spec.radicand_coords(depth)));
    for (std::size_t i = 0; i < h; ++i) n[i] -= db2[i];
  }
  return n;
}

int sign_coords(const FieldSpec& spec, std::size_t depth, RatSpan x) {
  if (depth == 0) return sgn(x[0]);
  const std::size_t h = std::size_t(1) << (depth - 1);
  RatSpan a = x.first(h), b = x.subspan(h);
  const int sa = sign_coords(spec, depth - 1, a);
  const int sb = sign_coords(spec, depth - 1, b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;  // sqrt(d) > 0 in the fixed embedding
  if (sa == sb) return sa;
  std::vector<Rat> n = norm_form(spec, depth - 1, a, b);
  return sa * sign_coords(spec, depth - 1, RatSpan(n));
}

std::vector<Rat> invert_coords(const FieldSpec& spec, std::size_t depth, RatSpan x) {
  if (depth == 0) {
    if (sgn(x[0]) == 0) throw error("division by zero");
    return {1 / x[0]};
  }
  const std::size_t h = std::size_t(1) << (depth - 1);
  RatSpan a = x.first(h), b = x.subspan(h);
  if (all_zero(b)) {
    std::vector<Rat> ia = invert_coords(spec, depth - 1, a);
    ia.resize(std::size_t(1) << depth);
    return ia;
  }
  std::vector<Rat> n = norm_form(spec, depth - 1, a, b);
  std::vector<Rat> ninv = invert_coords(spec, depth - 1, RatSpan(n));
  std::vector<Rat> out(std::size_t(1) << depth);
  mul_acc(spec, depth - 1, a, RatSpan(ninv), MutSpan(out).first(h));
  std::vector<Rat> t(h);
  mul_acc(spec, depth - 1, b, RatSpan(ninv), MutSpan(t));
  for (std::size_t i = 0; i < h; ++i) out[h + i] = -t[i];
  return out;
}

bool rat_sqrt(const Rat& x, Rat& out) {
  if (sgn(x) < 0) return false;
  const Int& p = x.get_num();
  const Int& q = x.get_den();
  if (mpz_perfect_square_p(p.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(q.get_mpz_t()) == 0) return false;
  Int rp, rq;
  mpz_sqrt(rp.get_mpz_t(), p.get_mpz_t());
  mpz_sqrt(rq.get_mpz_t(), q.get_mpz_t());
  out = Rat(rp, rq);  // already reduced since p/q was
  return true;
}

std::optional<std::vector<Rat>> sqrt_coords(const FieldSpec& spec, std::size_t depth, RatSpan x) {
  const std::size_t n = std::size_t(1) << depth;
  if (all_zero(x)) return std::vector<Rat>(n);
  if (sign_coords(spec, depth, x) < 0) return std::nullopt;
  if (depth == 0) {
    Rat r;
    if (!rat_sqrt(x[0], r)) return std::nullopt;
    return std::vector<Rat>{r};
  }
  const std::size_t h = n >> 1;
  RatSpan a = x.first(h), b = x.subspan(h);
  if (all_zero(b)) {
    if (auto r = sqrt_coords(spec, depth - 1, a)) {
      r->resize(n);
      return r;
    }
    // root of the form E*sqrt(d): E^2 = A/d
    std::vector<Rat> dinv = invert_coords(spec, depth - 1, RatSpan(spec.radicand_coords(depth - 1)));
    std::vector<Rat> q = mul_coords(spec, depth - 1, a, RatSpan(dinv));
    if (auto r = sqrt_coords(spec, depth - 1, RatSpan(q))) {
      std::vector<Rat> out(n);
      for (std::size_t i = 0; i < h; ++i) out[h + i] = (*r)[i];
      return out;
    }
    return std::nullopt;
  }
  // x = A + B*sqrt(d) with B != 0 is a square iff A^2 - B^2 d = m^2 for some m
  // and (A +/- m)/2 is a square C^2; then root = C + (B/2C) sqrt(d).
  std::vector<Rat> nf = norm_form(spec, depth - 1, a, b);
  auto m = sqrt_coords(spec, depth - 1, RatSpan(nf));
  if (!m) return std::nullopt;
  for (int branch = 0; branch < 2; ++branch) {
    std::vector<Rat> c2(h);
    for (std::size_t i = 0; i < h; ++i) {
      if (branch == 0)
        c2[i] = (a[i] + (*m)[i]) / 2;
      else
        c2[i] = (a[i] - (*m)[i]) / 2;
    }
    if (all_zero(RatSpan(c2))) continue;
    auto c = sqrt_coords(spec, depth - 1, RatSpan(c2));
    if (!c || all_zero(RatSpan(*c))) continue;
    std::vector<Rat> twoc(h);
    for (std::size_t i = 0; i < h; ++i) twoc[i] = 2 * (*c)[i];
    std::vector<Rat> e = mul_coords(spec, depth - 1, b, RatSpan(invert_coords(spec, depth - 1, RatSpan(twoc))));
    std::vector<Rat> cand(n);
    for (std::size_t i = 0; i < h; ++i) {
      cand[i] = (*c)[i];
      cand[h + i] = e[i];
    }
    std::vector<Rat> sq = mul_coords(spec, depth, RatSpan(cand), RatSpan(cand));
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = (sq[i] == x[i]);
    if (!ok) continue;
    if (sign_coords(spec, depth, RatSpan(cand)) < 0)
      for (auto& v : cand) v = -v;
    return cand;
  }
  return std::nullopt;
}

// ---- integer polynomials in eps (dense, lowest degree first) ----

void poly_trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

Poly poly_neg(Poly p) {
  for (auto& c : p) c = -c;
  return p;
}

std::size_t poly_trail(const Poly& p) {
  std::size_t i = 0;
  while (i < p.size() && sgn(p[i]) == 0) ++i;
  return i;
}

using RPoly = std::vector<Rat>;

void rpoly_trim(RPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RPoly rpoly_rem(RPoly a, const RPoly& b) {
  rpoly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.back() = 0;
    rpoly_trim(a);
  }
  return a;
}

RPoly rpoly_divexact(const RPoly& a, const RPoly& b) {
  RPoly rem = a;
  rpoly_trim(rem);
  if (rem.empty()) return {};
  RPoly q(rem.size() - b.size() + 1, Rat(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rat f = rem.back() / b.back();
    const std::size_t off = rem.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
    rem.back() = 0;
    rpoly_trim(rem);
  }
  assert(rem.empty());
  return q;
}

RPoly rpoly_gcd_monic(RPoly a, RPoly b) {
  rpoly_trim(a);
  rpoly_trim(b);
  while (!b.empty()) {
    RPoly r = rpoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return {Rat(1)};
  Rat lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

RPoly to_rpoly(const Poly& p) {
  RPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rat(p[i]);
  return out;
}

// r = content * primitive, content > 0, the primitive part carries r's signs.
std::pair<Poly, Rat> primitive_int(const RPoly& r) {
  Int lcm(1);
  for (const auto& c : r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Poly scaled(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Rat v = r[i] * Rat(lcm);
    scaled[i] = v.get_num();
  }
  Int content(0);
  for (const auto& c : scaled) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (sgn(content) == 0) content = 1;
  for (auto& c : scaled) c /= content;
  Rat cnt(content, lcm);
  cnt.canonicalize();
  return {std::move(scaled), std::move(cnt)};
}

// Canonical form: num/den coprime integer polynomials (no common factor, no
// common content), den's lowest non-zero coefficient positive.
void normalize_fraction(Poly& num, Poly& den) {
  poly_trim(num);
  poly_trim(den);
  if (den.empty()) throw error("division by zero");
  if (num.empty()) {
    num = {};
    den = {Int(1)};
    return;
  }
  RPoly rn = to_rpoly(num), rd = to_rpoly(den);
  RPoly g = rpoly_gcd_monic(rn, rd);
  if (g.size() > 1) {
    rn = rpoly_divexact(rn, g);
    rd = rpoly_divexact(rd, g);
  }
  auto [pn, cn] = primitive_int(rn);
  auto [pd, cd] = primitive_int(rd);
  Rat ratio = cn / cd;  // > 0
  for (auto& c : pn) c *= ratio.get_num();
  for (auto& c : pd) c *= ratio.get_den();
  if (sgn(pd[poly_trail(pd)]) < 0) {
    pn = poly_neg(std::move(pn));
    pd = poly_neg(std::move(pd));
  }
  num = std::move(pn);
  den = std::move(pd);
}

Int extract_square_part(Int& m) {
  // m = s^2 * m' with the small square factors of m pulled into s; returns s.
  Int s(1);
  if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    m = 1;
    return r;
  }
  for (unsigned long p = 2; p <= 1000; p = (p == 2 ? 3 : p + 2)) {
    Int p2 = Int(p) * Int(p);
    while (mpz_divisible_p(m.get_mpz_t(), p2.get_mpz_t()) != 0) {
      m /= p2;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    m = 1;
    s *= r;
  }
  return s;
}

std::string rat_str(const Rat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void append_poly_str(std::ostringstream& os, const Poly& p) {
  if (p.empty()) {
    os << "0";
    return;
  }
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) == 0) continue;
    Int c = p[i];
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    const bool unit = (c == 1) && i > 0;
    if (!unit) os << c.get_str();
    for (std::size_t k = 0; k < i; ++k) {
      if (!unit || k > 0) os << "*";
      os << "eps";
    }
  }
}

}  // namespace

// ---- FieldSpec ----

FieldSpecPtr FieldSpec::rationals() {
  static const FieldSpecPtr instance(new FieldSpec(FieldKind::rationals, {}));
  return instance;
}

FieldSpecPtr FieldSpec::infinitesimal() {
  static const FieldSpecPtr instance(new FieldSpec(FieldKind::infinitesimal, {}));
  return instance;
}

FieldSpecPtr FieldSpec::tower(const FieldSpecPtr& base, const Scalar& radicand) {
  if (base->kind() == FieldKind::infinitesimal)
    throw unsupported_extension_error("cannot adjoin radicals over " + base->describe());
  if (*radicand.spec() != *base)
    throw spec_mismatch_error("radicand must be an element of the base spec");
  if (radicand.sign() <= 0)
    throw precondition_error("radicand must be strictly positive");
  if (try_sqrt(radicand))
    throw precondition_error("radicand is already a square at its level");
  std::vector<std::vector<Rat>> rads = base->radicands_;
  rads.push_back(radicand.coords());
  return FieldSpecPtr(new FieldSpec(FieldKind::tower, std::move(rads)));
}

Scalar FieldSpec::radicand(std::size_t k) const {
  return Scalar::from_coords(prefix(k), radicands_[k]);
}

FieldSpecPtr FieldSpec::prefix(std::size_t k) const {
  if (k == 0) return kind_ == FieldKind::infinitesimal ? infinitesimal() : rationals();
  std::vector<std::vector<Rat>> rads(radicands_.begin(), radicands_.begin() + k);
  return FieldSpecPtr(new FieldSpec(FieldKind::tower, std::move(rads)));
}

bool FieldSpec::operator==(const FieldSpec& other) const {
  return kind_ == other.kind_ && radicands_ == other.radicands_;
}

bool FieldSpec::prefix_of(const FieldSpec& wider) const {
  if (kind_ == FieldKind::infinitesimal || wider.kind_ == FieldKind::infinitesimal)
    return *this == wider;
  if (depth() > wider.depth()) return false;
  return std::equal(radicands_.begin(), radicands_.end(), wider.radicands_.begin());
}

std::string FieldSpec::describe() const {
  if (kind_ == FieldKind::infinitesimal) return "Q(eps)";
  std::string out = "Q";
  for (std::size_t k = 0; k < depth(); ++k) out += "(sqrt " + radicand(k).str() + ")";
  return out;
}

bool same_spec(const FieldSpecPtr& a, const FieldSpecPtr& b) {
  return a == b || *a == *b;
}

// ---- Scalar ----

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (!same_spec(a.spec(), b.spec()))
    throw spec_mismatch_error("operands belong to different field specs: " + a.spec()->describe() +
                              " vs " + b.spec()->describe());
}

}  // namespace

Scalar::Scalar() : spec_(FieldSpec::rationals()), coords_{Rat(0)} {}

Scalar Scalar::zero(const FieldSpecPtr& spec) { return rational(spec, Rat(0)); }

Scalar Scalar::one(const FieldSpecPtr& spec) { return rational(spec, Rat(1)); }

Scalar Scalar::integer(const FieldSpecPtr& spec, long v) { return rational(spec, Rat(v)); }

Scalar Scalar::rational(const FieldSpecPtr& spec, const Rat& v) {
  Scalar s;
  s.spec_ = spec;
  if (spec->kind() == FieldKind::infinitesimal) {
    s.coords_.clear();
    if (sgn(v) != 0) s.num_ = {v.get_num()};
    s.den_ = {v.get_den()};
  } else {
    s.coords_.assign(std::size_t(1) << spec->depth(), Rat(0));
    s.coords_[0] = v;
  }
  return s;
}

Scalar Scalar::eps(const FieldSpecPtr& spec) {
  if (spec->kind() != FieldKind::infinitesimal)
    throw precondition_error("eps is only defined over an infinitesimal spec");
  Scalar s;
  s.spec_ = spec;
  s.coords_.clear();
  s.num_ = {Int(0), Int(1)};
  s.den_ = {Int(1)};
  return s;
}

Scalar Scalar::radical(const FieldSpecPtr& spec, std::size_t k) {
  if (spec->kind() != FieldKind::tower || k >= spec->depth())
    throw precondition_error("no such adjoined radical");
  Scalar s;
  s.spec_ = spec;
  s.coords_.assign(std::size_t(1) << spec->depth(), Rat(0));
  s.coords_[std::size_t(1) << k] = 1;
  return s;
}

Scalar Scalar::from_coords(const FieldSpecPtr& spec, std::vector<Rat> coords) {
  if (spec->kind() == FieldKind::infinitesimal)
    throw precondition_error("coordinate representation requires a rational or tower spec");
  if (coords.size() != (std::size_t(1) << spec->depth()))
    throw precondition_error("coordinate vector has the wrong length");
  Scalar s;
  s.spec_ = spec;
  s.coords_ = std::move(coords);
  return s;
}

Scalar Scalar::from_fraction(const FieldSpecPtr& spec, Poly num, Poly den) {
  if (spec->kind() != FieldKind::infinitesimal)
    throw precondition_error("fraction representation requires an infinitesimal spec");
  normalize_fraction(num, den);
  Scalar s;
  s.spec_ = spec;
  s.coords_.clear();
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  return s;
}

FieldKind Scalar::kind() const { return spec_->kind(); }

bool Scalar::is_zero() const {
  if (kind() == FieldKind::infinitesimal) return num_.empty();
  return all_zero(RatSpan(coords_));
}

bool Scalar::is_one() const { return *this == one(spec_); }

int Scalar::sign() const {
  if (kind() == FieldKind::infinitesimal) {
    if (num_.empty()) return 0;
    return sgn(num_[poly_trail(num_)]);
  }
  return sign_coords(*spec_, spec_->depth(), RatSpan(coords_));
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (kind() == FieldKind::infinitesimal) {
    out.num_ = poly_neg(out.num_);
  } else {
    for (auto& c : out.coords_) c = -c;
  }
  return out;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same(*this, rhs);
  if (kind() == FieldKind::infinitesimal) {
    Poly n = poly_add(poly_mul(num_, rhs.den_), poly_mul(rhs.num_, den_));
    return from_fraction(spec_, std::move(n), poly_mul(den_, rhs.den_));
  }
  Scalar out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += rhs.coords_[i];
  return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same(*this, rhs);
  if (kind() == FieldKind::infinitesimal)
    return from_fraction(spec_, poly_mul(num_, rhs.num_), poly_mul(den_, rhs.den_));
  Scalar out = *this;
  out.coords_ = mul_coords(*spec_, spec_->depth(), RatSpan(coords_), RatSpan(rhs.coords_));
  return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::inverse() const {
  if (kind() == FieldKind::infinitesimal) {
    if (num_.empty()) throw error("division by zero");
    return from_fraction(spec_, den_, num_);
  }
  Scalar out = *this;
  out.coords_ = invert_coords(*spec_, spec_->depth(), RatSpan(coords_));
  return out;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::pow(unsigned e) const {
  Scalar acc = one(spec_);
  Scalar base = *this;
  while (e != 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
  require_same(*this, rhs);
  if (kind() == FieldKind::infinitesimal) return num_ == rhs.num_ && den_ == rhs.den_;
  return coords_ == rhs.coords_;
}

bool Scalar::operator<(const Scalar& rhs) const { return (*this - rhs).sign() < 0; }

bool Scalar::operator<=(const Scalar& rhs) const { return (*this - rhs).sign() <= 0; }

Scalar Scalar::lifted(const FieldSpecPtr& wider) const {
  if (same_spec(spec_, wider)) {
    Scalar out = *this;
    out.spec_ = wider;
    return out;
  }
  if (!spec_->prefix_of(*wider))
    throw spec_mismatch_error("cannot lift " + spec_->describe() + " into " + wider->describe());
  Scalar out;
  out.spec_ = wider;
  out.coords_ = coords_;
  out.coords_.resize(std::size_t(1) << wider->depth());
  return out;
}

long Scalar::valuation() const {
  if (kind() != FieldKind::infinitesimal)
    throw precondition_error("valuation is defined over the infinitesimal spec");
  if (num_.empty()) throw precondition_error("valuation of zero is undefined");
  return static_cast<long>(poly_trail(num_)) - static_cast<long>(poly_trail(den_));
}

bool Scalar::is_rational_valued() const {
  if (kind() == FieldKind::infinitesimal) return num_.size() <= 1 && den_.size() <= 1;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

Rat Scalar::as_rational() const {
  if (!is_rational_valued()) throw precondition_error("value is not rational");
  if (kind() == FieldKind::infinitesimal) {
    if (num_.empty()) return Rat(0);
    Rat v(num_[0], den_[0]);
    v.canonicalize();
    return v;
  }
  return coords_[0];
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (kind() == FieldKind::infinitesimal) {
    if (den_.size() == 1 && den_[0] == 1) {
      append_poly_str(os, num_);
    } else if (num_.size() <= 1 && den_.size() == 1) {
      // plain fraction, no eps involved
      os << (num_.empty() ? Int(0).get_str() : num_[0].get_str()) << "/" << den_[0].get_str();
    } else {
      os << "(";
      append_poly_str(os, num_);
      os << ")/(";
      append_poly_str(os, den_);
      os << ")";
    }
    return os.str();
  }
  bool first = true;
  for (std::size_t mask = 0; mask < coords_.size(); ++mask) {
    if (sgn(coords_[mask]) == 0) continue;
    Rat c = coords_[mask];
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    const bool unit = (c == 1) && mask != 0;
    if (!unit) os << rat_str(c);
    bool star = !unit;
    for (std::size_t k = 0; mask >> k != 0; ++k) {
      if (((mask >> k) & 1u) == 0) continue;
      if (star) os << "*";
      os << "sqrt" << (k + 1);
      star = true;
    }
  }
  if (first) os << "0";
  return os.str();
}

Order compare(const Scalar& a, const Scalar& b) {
  const int s = (a - b).sign();
  if (s < 0) return Order::less;
  if (s > 0) return Order::greater;
  return Order::equal;
}

MagnitudeClass classify_magnitude(const Scalar& a) {
  if (a.is_zero()) return MagnitudeClass::zero;
  if (a.kind() != FieldKind::infinitesimal) return MagnitudeClass::medial;
  const long v = a.valuation();
  if (v > 0) return MagnitudeClass::infinitesimal;
  if (v == 0) return MagnitudeClass::medial;
  return MagnitudeClass::infinite;
}

std::optional<Scalar> try_sqrt(const Scalar& a) {
  if (a.kind() == FieldKind::infinitesimal) {
    if (!a.is_rational_valued()) return std::nullopt;
    Rat r;
    if (!rat_sqrt(a.as_rational(), r)) return std::nullopt;
    return Scalar::rational(a.spec(), r);
  }
  auto coords = sqrt_coords(*a.spec(), a.spec()->depth(), RatSpan(a.coords()));
  if (!coords) return std::nullopt;
  return Scalar::from_coords(a.spec(), std::move(*coords));
}

SqrtAdjoinResult sqrt_adjoin(const Scalar& a) {
  if (a.kind() == FieldKind::infinitesimal)
    throw unsupported_extension_error("square-root adjunction is unsupported over Q(eps)");
  if (a.sign() < 0) throw no_real_root_error("negative element has no real square root");
  if (a.is_zero()) return {a.spec(), Scalar::zero(a.spec()), false};
  if (auto r = try_sqrt(a)) return {a.spec(), *r, false};

  Scalar radicand = a;
  Rat mult(1);
  if (a.is_rational_valued()) {
    // sqrt(p/q) = (s/q) * sqrt(m) with p*q = s^2 * m, m kept small.
    Rat v = a.as_rational();
    Int m = v.get_num() * v.get_den();
    Int s = extract_square_part(m);
    mult = Rat(s, v.get_den());
    mult.canonicalize();
    radicand = Scalar::rational(a.spec(), Rat(m));
  }
  FieldSpecPtr wider = FieldSpec::tower(a.spec(), radicand);
  Scalar root = Scalar::rational(wider, mult) * Scalar::radical(wider, wider->depth() - 1);
  return {wider, std::move(root), true};
}

}  // namespace ortho

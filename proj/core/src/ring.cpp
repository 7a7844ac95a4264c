#include "ringplane/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ringplane {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

// Extended gcd; returns g and x with a*x = g (mod n).
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x,
                     std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n) {
  std::int64_t x, y;
  std::int64_t g = ext_gcd(mod_reduce(a, n), n, x, y);
  if (g != 1) return std::nullopt;
  return mod_reduce(x, n);
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

// ---- RingValue -------------------------------------------------------------

bool RingValue::operator==(const RingValue& o) const {
  if (!ring_ || !o.ring_) throw Error("comparison of uninitialized ring value");
  return ring_->eq(*this, o);
}
RingValue RingValue::operator+(const RingValue& o) const {
  return ring_->add(*this, o);
}
RingValue RingValue::operator-(const RingValue& o) const {
  return ring_->sub(*this, o);
}
RingValue RingValue::operator*(const RingValue& o) const {
  return ring_->mul(*this, o);
}
RingValue RingValue::operator-() const { return ring_->neg(*this); }
bool RingValue::invertible() const { return ring_->is_invertible(*this); }
std::optional<RingValue> RingValue::inverse() const {
  return ring_->try_inverse(*this);
}
std::string RingValue::str() const { return ring_->to_string(*this); }

// ---- Ring construction -----------------------------------------------------

RingPtr Ring::zmod(std::int64_t n) {
  if (n < 2) throw Error("zmod modulus must be >= 2");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::ZMod;
  r->mod_ = n;
  return r;
}

RingPtr Ring::rational() {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::Rational;
  return r;
}

RingPtr Ring::dual(std::int64_t p) {
  if (!is_prime(p)) throw Error("dual numbers require a prime modulus");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::DualNumbers;
  r->mod_ = p;
  return r;
}

RingPtr Ring::table(RingTables tables, std::string name) {
  if (tables.n == 0) throw Error("empty table ring");
  if (tables.add.size() != tables.n * tables.n ||
      tables.mul.size() != tables.n * tables.n ||
      tables.neg.size() != tables.n)
    throw Error("table ring: table sizes do not match carrier");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = RingKind::Table;
  r->tables_ = std::move(tables);
  r->name_ = std::move(name);
  return r;
}

RingPtr Ring::parse(const std::string& descriptor) {
  if (descriptor == "rational") return rational();
  auto colon = descriptor.find(':');
  if (colon != std::string::npos) {
    std::string head = descriptor.substr(0, colon);
    std::string tail = descriptor.substr(colon + 1);
    std::int64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
      throw Error("bad ring descriptor '" + descriptor + "'");
    }
    if (head == "zmod") return zmod(v);
    if (head == "dual") return dual(v);
  }
  throw Error("unknown ring descriptor '" + descriptor + "'");
}

// ---- basics ----------------------------------------------------------------

std::size_t Ring::size() const {
  switch (kind_) {
    case RingKind::ZMod: return static_cast<std::size_t>(mod_);
    case RingKind::DualNumbers: return static_cast<std::size_t>(mod_ * mod_);
    case RingKind::Table: return tables_.n;
    case RingKind::Rational: throw Error("infinite ring has no size");
  }
  throw Error("bad ring kind");
}

std::int64_t Ring::modulus() const {
  if (kind_ != RingKind::ZMod && kind_ != RingKind::DualNumbers)
    throw Error("ring has no modulus");
  return mod_;
}

std::string Ring::descriptor() const {
  switch (kind_) {
    case RingKind::ZMod: return "zmod:" + std::to_string(mod_);
    case RingKind::Rational: return "rational";
    case RingKind::DualNumbers: return "dual:" + std::to_string(mod_);
    case RingKind::Table: return "table:" + name_;
  }
  throw Error("bad ring kind");
}

bool Ring::compatible(const Ring& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case RingKind::ZMod:
    case RingKind::DualNumbers: return mod_ == other.mod_;
    case RingKind::Rational: return true;
    case RingKind::Table: return false;  // identity only
  }
  return false;
}

void Ring::check_ctx(const RingValue& x) const {
  if (!x.ring_ || !compatible(*x.ring_))
    throw Error("ring context mismatch");
}

RingValue Ring::make(std::int64_t a, std::int64_t b) const {
  RingValue v;
  v.ring_ = shared_from_this();
  v.a_ = a;
  v.b_ = b;
  return v;
}

RingValue Ring::zero() const {
  switch (kind_) {
    case RingKind::ZMod:
    case RingKind::DualNumbers: return make(0, 0);
    case RingKind::Table: return table_value(tables_.zero);
    case RingKind::Rational: return from_rational(Rational(0));
  }
  throw Error("bad ring kind");
}

RingValue Ring::one() const {
  switch (kind_) {
    case RingKind::ZMod: return make(1, 0);
    case RingKind::DualNumbers: return make(1 % mod_, 0);
    case RingKind::Table: return table_value(tables_.one);
    case RingKind::Rational: return from_rational(Rational(1));
  }
  throw Error("bad ring kind");
}

RingValue Ring::from_int(std::int64_t v) const {
  switch (kind_) {
    case RingKind::ZMod:
    case RingKind::DualNumbers: return make(mod_reduce(v, mod_), 0);
    case RingKind::Rational: return from_rational(Rational(v));
    case RingKind::Table: {
      // repeated addition of 1; table rings have no canonical integer encoding
      RingValue acc = zero();
      RingValue step = v >= 0 ? one() : neg(one());
      for (std::int64_t i = 0; i < (v >= 0 ? v : -v); ++i) acc = add(acc, step);
      return acc;
    }
  }
  throw Error("bad ring kind");
}

RingValue Ring::from_rational(const Rational& q) const {
  if (kind_ != RingKind::Rational) throw Error("from_rational on finite ring");
  RingValue v;
  v.ring_ = shared_from_this();
  v.q_ = q;
  return v;
}

RingValue Ring::dual_value(std::int64_t a, std::int64_t b) const {
  if (kind_ != RingKind::DualNumbers) throw Error("dual_value on non-dual ring");
  return make(mod_reduce(a, mod_), mod_reduce(b, mod_));
}

RingValue Ring::table_value(std::size_t index) const {
  if (kind_ != RingKind::Table) throw Error("table_value on non-table ring");
  if (index >= tables_.n) throw Error("table element index out of range");
  return make(static_cast<std::int64_t>(index), 0);
}

// ---- arithmetic ------------------------------------------------------------

RingValue Ring::add(const RingValue& x, const RingValue& y) const {
  check_ctx(x);
  check_ctx(y);
  switch (kind_) {
    case RingKind::ZMod: return make(mod_reduce(x.a_ + y.a_, mod_), 0);
    case RingKind::DualNumbers:
      return make(mod_reduce(x.a_ + y.a_, mod_), mod_reduce(x.b_ + y.b_, mod_));
    case RingKind::Rational: return from_rational(x.q_ + y.q_);
    case RingKind::Table:
      return table_value(tables_.add[static_cast<std::size_t>(x.a_) * tables_.n +
                                     static_cast<std::size_t>(y.a_)]);
  }
  throw Error("bad ring kind");
}

RingValue Ring::neg(const RingValue& x) const {
  check_ctx(x);
  switch (kind_) {
    case RingKind::ZMod: return make(mod_reduce(-x.a_, mod_), 0);
    case RingKind::DualNumbers:
      return make(mod_reduce(-x.a_, mod_), mod_reduce(-x.b_, mod_));
    case RingKind::Rational: return from_rational(-x.q_);
    case RingKind::Table:
      return table_value(tables_.neg[static_cast<std::size_t>(x.a_)]);
  }
  throw Error("bad ring kind");
}

RingValue Ring::sub(const RingValue& x, const RingValue& y) const {
  return add(x, neg(y));
}

RingValue Ring::mul(const RingValue& x, const RingValue& y) const {
  check_ctx(x);
  check_ctx(y);
  switch (kind_) {
    case RingKind::ZMod: return make(mod_reduce(x.a_ * y.a_, mod_), 0);
    case RingKind::DualNumbers:
      // (a + b eps)(c + d eps) = ac + (ad + bc) eps
      return make(mod_reduce(x.a_ * y.a_, mod_),
                  mod_reduce(x.a_ * y.b_ + x.b_ * y.a_, mod_));
    case RingKind::Rational: return from_rational(x.q_ * y.q_);
    case RingKind::Table:
      return table_value(tables_.mul[static_cast<std::size_t>(x.a_) * tables_.n +
                                     static_cast<std::size_t>(y.a_)]);
  }
  throw Error("bad ring kind");
}

bool Ring::eq(const RingValue& x, const RingValue& y) const {
  check_ctx(x);
  check_ctx(y);
  if (kind_ == RingKind::Rational) return x.q_ == y.q_;
  return x.a_ == y.a_ && x.b_ == y.b_;
}

bool Ring::is_invertible(const RingValue& x) const {
  check_ctx(x);
  switch (kind_) {
    case RingKind::ZMod: return mod_inverse(x.a_, mod_).has_value();
    case RingKind::DualNumbers: return x.a_ % mod_ != 0;
    case RingKind::Rational: return x.q_ != 0;
    case RingKind::Table: {
      // inverse by table scan
      for (std::size_t i = 0; i < tables_.n; ++i)
        if (tables_.mul[static_cast<std::size_t>(x.a_) * tables_.n + i] ==
            tables_.one)
          return true;
      return false;
    }
  }
  throw Error("bad ring kind");
}

std::optional<RingValue> Ring::try_inverse(const RingValue& x) const {
  check_ctx(x);
  switch (kind_) {
    case RingKind::ZMod: {
      auto inv = mod_inverse(x.a_, mod_);
      if (!inv) return std::nullopt;
      return make(*inv, 0);
    }
    case RingKind::DualNumbers: {
      auto ia = mod_inverse(x.a_, mod_);
      if (!ia) return std::nullopt;
      // (a + b eps)^-1 = a^-1 - a^-2 b eps
      return make(*ia, mod_reduce(-(*ia) * (*ia) % mod_ * x.b_, mod_));
    }
    case RingKind::Rational: {
      if (x.q_ == 0) return std::nullopt;
      return from_rational(1 / x.q_);
    }
    case RingKind::Table: {
      for (std::size_t i = 0; i < tables_.n; ++i)
        if (tables_.mul[static_cast<std::size_t>(x.a_) * tables_.n + i] ==
            tables_.one)
          return table_value(i);
      return std::nullopt;
    }
  }
  throw Error("bad ring kind");
}

// ---- enumeration -----------------------------------------------------------

std::vector<RingValue> Ring::enumerate() const {
  if (!finite()) throw Error("cannot enumerate infinite ring");
  std::vector<RingValue> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

RingValue Ring::element(std::size_t idx) const {
  if (!finite()) throw Error("cannot index infinite ring");
  if (idx >= size()) throw Error("ring element index out of range");
  switch (kind_) {
    case RingKind::ZMod: return make(static_cast<std::int64_t>(idx), 0);
    case RingKind::DualNumbers:
      return make(static_cast<std::int64_t>(idx) / mod_,
                  static_cast<std::int64_t>(idx) % mod_);
    case RingKind::Table: return table_value(idx);
    case RingKind::Rational: break;
  }
  throw Error("bad ring kind");
}

std::size_t Ring::index(const RingValue& x) const {
  check_ctx(x);
  switch (kind_) {
    case RingKind::ZMod: return static_cast<std::size_t>(x.a_);
    case RingKind::DualNumbers:
      return static_cast<std::size_t>(x.a_ * mod_ + x.b_);
    case RingKind::Table: return static_cast<std::size_t>(x.a_);
    case RingKind::Rational: throw Error("cannot index infinite ring");
  }
  throw Error("bad ring kind");
}

Ring::LocalCheck Ring::check_local() const {
  LocalCheck out;
  if (kind_ == RingKind::Rational) {
    out.local = true;
    return out;
  }
  if (is_invertible(zero())) {
    out.zero_invertible = true;
    return out;
  }
  auto elems = enumerate();
  for (const auto& y : elems) {
    for (const auto& x : elems) {
      if (is_invertible(add(x, y)) && !is_invertible(x) && !is_invertible(y)) {
        out.witness = std::make_pair(x, y);
        return out;
      }
    }
  }
  out.local = true;
  return out;
}

std::string Ring::to_string(const RingValue& x) const {
  check_ctx(x);
  switch (kind_) {
    case RingKind::ZMod: return std::to_string(x.a_);
    case RingKind::Rational: {
      std::ostringstream os;
      os << x.q_;
      return os.str();
    }
    case RingKind::DualNumbers: {
      if (x.b_ == 0) return std::to_string(x.a_);
      std::string eps = x.b_ == 1 ? "e" : std::to_string(x.b_) + "e";
      if (x.a_ == 0) return eps;
      return std::to_string(x.a_) + "+" + eps;
    }
    case RingKind::Table: {
      auto i = static_cast<std::size_t>(x.a_);
      if (i < tables_.names.size() && !tables_.names[i].empty())
        return tables_.names[i];
      return "t" + std::to_string(i);
    }
  }
  throw Error("bad ring kind");
}

// ---- RingHom ---------------------------------------------------------------

std::optional<RingHom> RingHom::make(RingPtr src, RingPtr tgt,
                                     std::vector<RingValue> images) {
  if (!src->finite()) throw Error("ring hom requires a finite source");
  auto elems = src->enumerate();
  if (images.size() != elems.size()) throw Error("ring hom image count");
  RingHom h(src, tgt, std::move(images));
  if (!(h(src->zero()) == tgt->zero())) return std::nullopt;
  if (!(h(src->one()) == tgt->one())) return std::nullopt;
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (!(h(src->add(x, y)) == tgt->add(h(x), h(y)))) return std::nullopt;
      if (!(h(src->mul(x, y)) == tgt->mul(h(x), h(y)))) return std::nullopt;
    }
  }
  return h;
}

RingHom RingHom::identity(const RingPtr& r) {
  if (!r->finite()) throw Error("identity hom requires a finite ring");
  auto h = make(r, r, r->enumerate());
  return *h;
}

std::vector<RingHom> RingHom::all_homs(const RingPtr& src, const RingPtr& tgt) {
  if (!src->finite() || !tgt->finite())
    throw Error("hom search requires finite rings");
  const std::size_t n = src->size(), m = tgt->size();
  // Candidates fix 0 and 1; remaining images scanned odometer style.
  std::vector<std::size_t> free_pos;
  const std::size_t i0 = src->index(src->zero());
  const std::size_t i1 = src->index(src->one());
  for (std::size_t i = 0; i < n; ++i)
    if (i != i0 && i != i1) free_pos.push_back(i);
  double space = 1;
  for (std::size_t k = 0; k < free_pos.size(); ++k) space *= double(m);
  if (space > 2e7) throw Error("hom search space too large");

  std::vector<RingHom> out;
  std::vector<std::size_t> digits(free_pos.size(), 0);
  while (true) {
    std::vector<RingValue> images(n, tgt->zero());
    images[i0] = tgt->zero();
    images[i1] = tgt->one();
    for (std::size_t k = 0; k < free_pos.size(); ++k)
      images[free_pos[k]] = tgt->element(digits[k]);
    if (auto h = make(src, tgt, images)) out.push_back(*h);
    // increment
    std::size_t k = 0;
    for (; k < digits.size(); ++k) {
      if (++digits[k] < m) break;
      digits[k] = 0;
    }
    if (k == digits.size()) break;
  }
  return out;
}

RingValue RingHom::operator()(const RingValue& x) const {
  return map_[src_->index(x)];
}

RingHom RingHom::compose(const RingHom& f) const {
  if (!f.target()->compatible(*src_))
    throw Error("ring hom composition mismatch");
  std::vector<RingValue> images;
  images.reserve(f.map_.size());
  for (const auto& v : f.map_) images.push_back((*this)(v));
  auto h = make(f.source(), tgt_, std::move(images));
  if (!h) throw Error("composite is not a homomorphism");
  return *h;
}

bool RingHom::operator==(const RingHom& o) const {
  if (!src_->compatible(*o.src_) || !tgt_->compatible(*o.tgt_)) return false;
  if (map_.size() != o.map_.size()) return false;
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (!(map_[i] == o.map_[i])) return false;
  return true;
}

}  // namespace ringplane

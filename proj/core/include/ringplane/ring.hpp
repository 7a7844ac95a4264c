#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ringplane {

/// Library-wide error type. Thrown on precondition violations, context
/// mismatches, malformed input and on operations a ring kind does not support.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rational = boost::multiprecision::cpp_rational;

enum class RingKind { ZMod, Rational, DualNumbers, Table };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Multiplication/addition tables for a finite ring given by exhaustive data.
/// Used for rings reconstructed from planes, where no closed form is known.
struct RingTables {
  std::size_t n = 0;
  std::size_t zero = 0, one = 0;
  std::vector<std::size_t> add;  // n*n, row-major
  std::vector<std::size_t> mul;  // n*n
  std::vector<std::size_t> neg;  // n
  std::vector<std::string> names;  // optional element labels
};

/// An element of a fixed ring context. Values are immutable; arithmetic goes
/// through the owning Ring and throws on context mismatch.
class RingValue {
 public:
  RingValue() = default;

  const RingPtr& ring() const { return ring_; }

  bool operator==(const RingValue& o) const;
  bool operator!=(const RingValue& o) const { return !(*this == o); }

  RingValue operator+(const RingValue& o) const;
  RingValue operator-(const RingValue& o) const;
  RingValue operator*(const RingValue& o) const;
  RingValue operator-() const;

  bool invertible() const;
  std::optional<RingValue> inverse() const;

  std::string str() const;

 private:
  friend class Ring;
  RingPtr ring_;
  // ZMod: residue in a_. DualNumbers: a_ + b_*eps. Table: element index in a_.
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  Rational q_;  // Rational kind only
};

/// A commutative unital ring with decidable invertibility.
///
/// Supported kinds: Z/n (n >= 2), the rationals, dual numbers F_p[eps]/(eps^2)
/// for prime p, and finite rings presented by explicit tables. Contexts of the
/// three named kinds compare structurally; table rings compare by identity.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr zmod(std::int64_t n);
  static RingPtr rational();
  static RingPtr dual(std::int64_t p);
  static RingPtr table(RingTables tables, std::string name);

  /// Parses a context descriptor: "zmod:4", "rational", "dual:2".
  static RingPtr parse(const std::string& descriptor);

  RingKind kind() const { return kind_; }
  bool finite() const { return kind_ != RingKind::Rational; }
  std::size_t size() const;           // throws for infinite rings
  std::int64_t modulus() const;       // n for ZMod, p for DualNumbers
  std::string descriptor() const;

  RingValue zero() const;
  RingValue one() const;
  RingValue from_int(std::int64_t v) const;
  RingValue from_rational(const Rational& q) const;   // Rational kind
  RingValue dual_value(std::int64_t a, std::int64_t b) const;  // DualNumbers
  RingValue table_value(std::size_t index) const;     // Table kind

  RingValue add(const RingValue& x, const RingValue& y) const;
  RingValue sub(const RingValue& x, const RingValue& y) const;
  RingValue mul(const RingValue& x, const RingValue& y) const;
  RingValue neg(const RingValue& x) const;
  bool eq(const RingValue& x, const RingValue& y) const;

  bool is_invertible(const RingValue& x) const;
  std::optional<RingValue> try_inverse(const RingValue& x) const;

  /// Complete duplicate-free enumeration in the fixed total order:
  /// ZMod: 0..n-1; DualNumbers: a+b*eps lexicographic with a major;
  /// Table: index order. Throws for infinite rings.
  std::vector<RingValue> enumerate() const;
  /// Position of x in the enumeration order.
  std::size_t index(const RingValue& x) const;
  RingValue element(std::size_t idx) const;

  struct LocalCheck {
    bool local = false;
    bool zero_invertible = false;  // trivial-ring failure mode
    // First pair (x, y), scanning y then x, with x+y invertible but neither
    // summand invertible.
    std::optional<std::pair<RingValue, RingValue>> witness;
  };
  /// Decides "0 not invertible and inv(x+y) => inv(x) or inv(y)",
  /// exhaustively for finite rings, analytically for the rationals.
  LocalCheck check_local() const;

  std::string to_string(const RingValue& x) const;
  bool compatible(const Ring& other) const;

 private:
  Ring() = default;
  RingValue make(std::int64_t a, std::int64_t b) const;
  void check_ctx(const RingValue& x) const;

  RingKind kind_ = RingKind::ZMod;
  std::int64_t mod_ = 0;      // ZMod: n, DualNumbers: p
  RingTables tables_;         // Table kind
  std::string name_;          // Table kind
};

/// A ring homomorphism with a finite source, stored as the full element map
/// and checked exhaustively to preserve 0, 1, + and *.
class RingHom {
 public:
  /// Builds and verifies a homomorphism from the images of the source
  /// enumeration. Returns nullopt if the map is not a homomorphism.
  static std::optional<RingHom> make(RingPtr src, RingPtr tgt,
                                     std::vector<RingValue> images);
  static RingHom identity(const RingPtr& r);
  /// All ring homomorphisms between two small finite rings, by exhaustive
  /// search over maps fixing 0 and 1. Order is deterministic.
  static std::vector<RingHom> all_homs(const RingPtr& src, const RingPtr& tgt);

  const RingPtr& source() const { return src_; }
  const RingPtr& target() const { return tgt_; }
  RingValue operator()(const RingValue& x) const;

  /// g.compose(f) is "g after f".
  RingHom compose(const RingHom& f) const;
  bool operator==(const RingHom& o) const;

 private:
  RingHom(RingPtr src, RingPtr tgt, std::vector<RingValue> images)
      : src_(std::move(src)), tgt_(std::move(tgt)), map_(std::move(images)) {}
  RingPtr src_, tgt_;
  std::vector<RingValue> map_;  // by source enumeration index
};

}  // namespace ringplane

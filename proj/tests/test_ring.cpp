#include "doctest.h"
#include "ringplane/ring.hpp"

using namespace ringplane;

namespace {

bool is_prime_power(std::int64_t n) {
  for (std::int64_t p = 2; p <= n; ++p) {
    bool prime = p >= 2;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    std::int64_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("arithmetic in the concrete rings") {
  auto z4 = Ring::zmod(4);
  CHECK(z4->from_int(2) + z4->from_int(3) == z4->from_int(1));

  auto z6 = Ring::zmod(6);
  auto s = z6->from_int(3) + z6->from_int(2);
  CHECK(s == z6->from_int(5));
  CHECK(s.invertible());  // 3 + 2 is invertible in Z/6 while neither summand is

  auto d2 = Ring::dual(2);
  auto v = d2->dual_value(1, 1);
  CHECK(v * v == d2->one());
}

TEST_CASE("invertibility and inverses") {
  auto z4 = Ring::zmod(4);
  CHECK_FALSE(z4->from_int(2).invertible());
  CHECK(z4->from_int(3).invertible());

  auto z6 = Ring::zmod(6);
  // oracle: exhaustive search for y with 5y = 1 mod 6
  int found = -1;
  for (int y = 0; y < 6; ++y)
    if ((5 * y) % 6 == 1) found = y;
  CHECK(found == 5);
  CHECK(z6->from_int(5).invertible());
  CHECK(*z6->from_int(5).inverse() == z6->from_int(found));

  auto q = Ring::rational();
  CHECK_FALSE(q->from_int(0).inverse().has_value());
  CHECK(*q->from_int(2).inverse() == q->from_rational(Rational(1, 2)));

  auto d3 = Ring::dual(3);
  for (const auto& x : d3->enumerate()) {
    auto inv = x.inverse();
    CHECK(inv.has_value() == x.invertible());
    if (inv) {
      CHECK(x * *inv == d3->one());
      CHECK(*inv * x == d3->one());
    }
  }
}

TEST_CASE("locality") {
  CHECK(Ring::zmod(4)->check_local().local);
  CHECK(Ring::rational()->check_local().local);
  CHECK(Ring::dual(2)->check_local().local);
  CHECK(Ring::dual(5)->check_local().local);

  auto lc = Ring::zmod(6)->check_local();
  CHECK_FALSE(lc.local);
  REQUIRE(lc.witness.has_value());
  CHECK(lc.witness->first == Ring::zmod(6)->from_int(3));
  CHECK(lc.witness->second == Ring::zmod(6)->from_int(2));
}

TEST_CASE("check_local agrees with the prime power predicate") {
  for (std::int64_t n = 2; n <= 64; ++n)
    CHECK(Ring::zmod(n)->check_local().local == is_prime_power(n));
}

TEST_CASE("enumeration order") {
  auto z4 = Ring::zmod(4);
  auto e = z4->enumerate();
  REQUIRE(e.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(e[std::size_t(i)] == z4->from_int(i));

  auto z2 = Ring::zmod(2);
  CHECK(z2->enumerate().size() == 2);

  auto d2 = Ring::dual(2);
  auto de = d2->enumerate();
  REQUIRE(de.size() == 4);
  CHECK(de[0] == d2->dual_value(0, 0));  // 0
  CHECK(de[1] == d2->dual_value(0, 1));  // eps
  CHECK(de[2] == d2->dual_value(1, 0));  // 1
  CHECK(de[3] == d2->dual_value(1, 1));  // 1+eps
  for (std::size_t i = 0; i < de.size(); ++i) CHECK(d2->index(de[i]) == i);

  CHECK_THROWS_AS((void)Ring::rational()->enumerate(), Error);
}

TEST_CASE("commutative ring axioms hold exhaustively") {
  for (const char* desc : {"zmod:4", "zmod:6", "dual:2"}) {
    auto r = Ring::parse(desc);
    auto e = r->enumerate();
    for (const auto& x : e) {
      CHECK(x + r->zero() == x);
      CHECK(x * r->one() == x);
      CHECK(x + (-x) == r->zero());
      CHECK(x - x == r->zero());
      for (const auto& y : e) {
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        for (const auto& z : e) {
          CHECK((x + y) + z == x + (y + z));
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
      }
    }
  }
}

TEST_CASE("ring context descriptors") {
  CHECK(Ring::parse("zmod:4")->descriptor() == "zmod:4");
  CHECK(Ring::parse("rational")->descriptor() == "rational");
  CHECK(Ring::parse("dual:2")->descriptor() == "dual:2");
  CHECK_THROWS_AS((void)Ring::parse("zmod"), Error);
  CHECK_THROWS_AS((void)Ring::parse("zmod:x"), Error);
  CHECK_THROWS_AS((void)Ring::parse("gf:4"), Error);
  CHECK_THROWS_AS((void)Ring::parse("dual:4"), Error);  // not prime
  CHECK_THROWS_AS((void)Ring::zmod(1), Error);
}

TEST_CASE("context mismatch is an error") {
  auto z4 = Ring::zmod(4);
  auto z6 = Ring::zmod(6);
  CHECK_THROWS_AS((void)(z4->from_int(1) + z6->from_int(1)), Error);
  // structurally equal contexts are compatible
  CHECK(Ring::zmod(4)->from_int(3) + z4->from_int(2) == z4->from_int(1));
}

TEST_CASE("ring homomorphisms") {
  auto z4 = Ring::zmod(4);
  auto z2 = Ring::zmod(2);

  auto homs = RingHom::all_homs(z4, z2);
  REQUIRE(homs.size() == 1);  // x maps to x mod 2, nothing else
  const RingHom& q = homs[0];
  CHECK(q(z4->from_int(3)) == z2->from_int(1));
  CHECK(q(z4->from_int(2)) == z2->from_int(0));

  // invertibility is preserved, exhaustively
  for (const auto& x : z4->enumerate())
    if (x.invertible()) CHECK(q(x).invertible());

  auto d2 = Ring::dual(2);
  auto incl = RingHom::all_homs(z2, d2);
  REQUIRE(incl.size() == 1);
  CHECK(incl[0](z2->one()) == d2->one());

  // dual:2 -> Z/2 sends eps to 0 (the only hom)
  auto aug = RingHom::all_homs(d2, z2);
  REQUIRE(aug.size() == 1);
  CHECK(aug[0](d2->dual_value(0, 1)) == z2->zero());

  // composition: dual:2 -> Z/2 -> dual:2 fixes Z/2 inside dual:2
  auto comp = incl[0].compose(aug[0]);
  CHECK(comp(d2->dual_value(1, 1)) == d2->one());

  CHECK(RingHom::identity(z4)(z4->from_int(3)) == z4->from_int(3));
}

TEST_CASE("values print") {
  CHECK(Ring::zmod(6)->from_int(5).str() == "5");
  CHECK(Ring::dual(2)->dual_value(1, 1).str() == "1+e");
  CHECK(Ring::dual(3)->dual_value(0, 2).str() == "2e");
  CHECK(Ring::rational()->from_rational(Rational(3, 2)).str() == "3/2");
}

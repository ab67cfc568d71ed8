#include <doctest.h>

#include <set>

#include "dynforge/linalg.hpp"
#include "dynforge/numeric.hpp"
#include "dynforge/poly.hpp"
#include "dynforge/rational_roots.hpp"
#include "dynforge/rng.hpp"
#include "dynforge/sha256.hpp"

using namespace dynforge;

TEST_CASE("log_abs tracks huge integers") {
  CHECK(log_abs(Integer(1)) == doctest::Approx(0.0));
  CHECK(log_abs(Integer(-7)) == doctest::Approx(std::log(7.0)));
  Integer big = ipow(Integer(10), 5000);
  CHECK(log_abs(big) == doctest::Approx(5000.0 * std::log(10.0)).epsilon(1e-12));
  CHECK_THROWS_AS(log_abs(Integer(0)), Error);
}

TEST_CASE("rational to_string canonicalizes") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-10, 5)) == "-2");
  CHECK(to_string(Rational(0, 9)) == "0");
}

TEST_CASE("sha256 FIPS vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("splitmix64 and xoshiro256** golden sequences") {
  // Frozen against an independent reference implementation; the search
  // contract requires a bit-stable stream.
  SplitMix64 sm(42);
  CHECK(sm.next() == 0xbdd732262feb6e95ull);
  CHECK(sm.next() == 0x28efe333b266f103ull);
  CHECK(sm.next() == 0x47526757130f9f52ull);

  Xoshiro256ss rng(42);
  CHECK(rng.next() == 0x15780b2e0c2ec716ull);
  CHECK(rng.next() == 0x6104d9866d113a7eull);
  CHECK(rng.next() == 0xae17533239e499a1ull);
  CHECK(rng.next() == 0xecb8ad4703b360a1ull);
  CHECK(rng.next() == 0xfde6dc7fe2ec5e64ull);

  Xoshiro256ss zero(0);
  CHECK(zero.next() == 0x99ec5f36cb75f2b4ull);
  CHECK(zero.next() == 0xbf6e1f784956452aull);
  CHECK(zero.next() == 0x1a5f849d4933e6e0ull);
}

TEST_CASE("xoshiro helpers stay in range") {
  Xoshiro256ss rng(7);
  std::set<long long> seen;
  for (int i = 0; i < 2000; ++i) {
    const uint64_t u = rng.uniform_below(13);
    CHECK(u < 13);
    const long long v = rng.uniform_int(-5, 5);
    CHECK(v >= -5);
    CHECK(v <= 5);
    seen.insert(v);
    const double d = rng.uniform01();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
  }
  CHECK(seen.size() == 11);  // every value of a small range gets hit
  CHECK(rng.uniform_below(1) == 0);
  Xoshiro256ss coin(9);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(coin.bernoulli(0.0));
    CHECK(coin.bernoulli(1.0));
  }
}

TEST_CASE("determinants by Bareiss") {
  IntMat a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  CHECK(det_bareiss(a) == -2);

  IntMat magic(3, 3);
  long vals[9] = {2, 7, 6, 9, 5, 1, 4, 3, 8};
  for (size_t i = 0; i < 9; ++i) magic.at(i / 3, i % 3) = vals[i];
  CHECK(det_bareiss(magic) == -360);

  IntMat sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 2;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 4;
  CHECK(det_bareiss(sing) == 0);

  // Pivot search must handle a leading zero.
  IntMat zp(2, 2);
  zp.at(0, 0) = 0;
  zp.at(0, 1) = 3;
  zp.at(1, 0) = 5;
  zp.at(1, 1) = 1;
  CHECK(det_bareiss(zp) == -15);
}

TEST_CASE("solve_square exact rational solutions") {
  IntMat a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 3;
  auto x = solve_square(a, {Integer(5), Integer(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(3));

  IntMat d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 4;
  auto y = solve_square(d, {Integer(1), Integer(1)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == Rational(1, 2));
  CHECK((*y)[1] == Rational(1, 4));

  IntMat s(2, 2);
  s.at(0, 0) = 1;
  s.at(0, 1) = 2;
  s.at(1, 0) = 2;
  s.at(1, 1) = 4;
  CHECK_FALSE(solve_square(s, {Integer(1), Integer(1)}).has_value());
}

TEST_CASE("kernel_dimension finds a primitive spanning vector") {
  IntMat a(1, 2);
  a.at(0, 0) = 4;
  a.at(0, 1) = 6;
  std::vector<Integer> k;
  CHECK(kernel_dimension(a, &k) == 1);
  REQUIRE(k.size() == 2);
  CHECK(a.at(0, 0) * k[0] + a.at(0, 1) * k[1] == 0);
  Integer g;
  mpz_gcd(g.get_mpz_t(), k[0].get_mpz_t(), k[1].get_mpz_t());
  CHECK(g == 1);

  IntMat wide(1, 3);
  wide.at(0, 0) = 1;
  wide.at(0, 1) = 1;
  wide.at(0, 2) = 1;
  CHECK(kernel_dimension(wide, nullptr) == 2);

  IntMat full(2, 2);
  full.at(0, 0) = 1;
  full.at(1, 1) = 1;
  CHECK(kernel_dimension(full, nullptr) == 0);
}

TEST_CASE("IntPoly basics") {
  IntPoly p({Integer(-2), Integer(0), Integer(3)});
  CHECK(p.degree() == 2);
  CHECK(p.str() == "3*z^2 - 2");
  CHECK(p.eval(Integer(2)) == 10);
  CHECK(p.eval(Rational(1, 3)) == Rational(-5, 3));
  CHECK(p.derivative().str() == "6*z");

  CHECK(IntPoly({Integer(0), Integer(0)}).is_zero());
  CHECK(IntPoly().degree() == -1);
  CHECK(IntPoly::monomial(1, 3).str() == "z^3");
  CHECK(IntPoly({Integer(0), Integer(-1)}).str() == "-z");
  CHECK(IntPoly::constant(-1).str() == "-1");

  // Homogeneous evaluation with a declared degree above the actual one.
  IntPoly lin({Integer(-1), Integer(1)});  // z - 1
  CHECK(lin.eval_homogeneous(1, Integer(3), Integer(2)) == 1);   // 3 - 2
  CHECK(lin.eval_homogeneous(3, Integer(3), Integer(2)) == 4);   // (3-2)*2^2
}

TEST_CASE("primitive_part normalizes content and sign") {
  IntPoly p({Integer(-4), Integer(-8)});
  CHECK(p.primitive_part() == IntPoly({Integer(1), Integer(2)}));
  IntPoly q({Integer(6), Integer(9)});
  CHECK(q.primitive_part() == IntPoly({Integer(2), Integer(3)}));
}

TEST_CASE("resultant oracles") {
  IntPoly x2m1({Integer(-1), Integer(0), Integer(1)});
  IntPoly xm2({Integer(-2), Integer(1)});
  IntPoly x2p1({Integer(1), Integer(0), Integer(1)});

  // Res(x^2-1, x-2) = (1-2)(-1-2) = 3; even degree product keeps the sign
  // under swapping.
  CHECK(resultant(x2m1, xm2) == 3);
  CHECK(resultant(xm2, x2m1) == 3);
  CHECK(resultant(x2p1, x2m1) == 4);
  CHECK(resultant(x2m1, x2p1) == 4);

  // Degenerate shapes.
  CHECK(resultant(IntPoly::constant(5), x2m1) == 25);
  CHECK(resultant(x2m1, IntPoly::constant(2)) == 4);
  CHECK(resultant(IntPoly::constant(3), IntPoly::constant(7)) == 1);
  CHECK(resultant(IntPoly(), x2m1) == 0);

  // Declared degrees agree with the exact ones when nothing is padded.
  CHECK(resultant_declared(x2m1, xm2, 2, 1) == 3);
  // Shared root makes the resultant vanish at any declared degree.
  IntPoly xm1({Integer(-1), Integer(1)});
  CHECK(resultant_declared(x2m1, xm1, 2, 1) == 0);
  CHECK(resultant_declared(x2m1, xm1, 2, 3) == 0);
}

TEST_CASE("poly_gcd and squarefree_part") {
  IntPoly a({Integer(-6), Integer(3), Integer(3)});   // 3(x-1)(x+2)
  IntPoly b({Integer(-10), Integer(8), Integer(2)});  // 2(x-1)(x+5)
  CHECK(poly_gcd(a, b) == IntPoly({Integer(-1), Integer(1)}));

  IntPoly coprime_g = poly_gcd(IntPoly({Integer(1), Integer(0), Integer(1)}),
                               IntPoly({Integer(-2), Integer(1)}));
  CHECK(coprime_g == IntPoly::constant(1));

  // (x-1)^2 (x+1) -> (x-1)(x+1)
  IntPoly p({Integer(1), Integer(-1), Integer(-1), Integer(1)});
  CHECK(squarefree_part(p) == IntPoly({Integer(-1), Integer(0), Integer(1)}));
}

TEST_CASE("rational_roots on planted roots") {
  // (2x-1)(3x+1)(x-1) = 6x^3 - 7x^2 + 1
  IntPoly p({Integer(1), Integer(0), Integer(-7), Integer(6)});
  RootResult r = rational_roots(p);
  CHECK(r.complete);
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0] == Rational(-1, 3));
  CHECK(r.roots[1] == Rational(1, 2));
  CHECK(r.roots[2] == Rational(1));
}

TEST_CASE("rational_roots strips multiplicity and zero roots") {
  // x^2 (x-2)^3
  IntPoly xm2({Integer(-2), Integer(1)});
  IntPoly p = IntPoly::monomial(1, 2) * xm2 * xm2 * xm2;
  RootResult r = rational_roots(p);
  CHECK(r.complete);
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == Rational(0));
  CHECK(r.roots[1] == Rational(2));
}

TEST_CASE("rational_roots finds nothing for irrational/complex roots") {
  CHECK(rational_roots(IntPoly({Integer(1), Integer(0), Integer(1)}))
            .roots.empty());
  CHECK(rational_roots(IntPoly({Integer(-2), Integer(0), Integer(1)}))
            .roots.empty());
  // Degree 3 exercises the modular route.
  CHECK(rational_roots(IntPoly({Integer(-2), Integer(0), Integer(0),
                                Integer(1)}))
            .roots.empty());
}

TEST_CASE("rational_roots with large planted roots") {
  IntPoly p = IntPoly({Integer(-123456789), Integer(1)}) *
              IntPoly({Integer(987654321), Integer(1)}) *
              IntPoly({Integer(-3), Integer(7)});
  RootResult r = rational_roots(p);
  CHECK(r.complete);
  REQUIRE(r.roots.size() == 3);
  CHECK(r.roots[0] == Rational(-987654321));
  CHECK(r.roots[1] == Rational(3, 7));
  CHECK(r.roots[2] == Rational(123456789));
}

TEST_CASE("rational_roots on a constant or linear polynomial") {
  CHECK(rational_roots(IntPoly::constant(4)).roots.empty());
  RootResult lin = rational_roots(IntPoly({Integer(9), Integer(-6)}));
  REQUIRE(lin.roots.size() == 1);
  CHECK(lin.roots[0] == Rational(3, 2));
}

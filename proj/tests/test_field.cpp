#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qea/field.hpp"
#include "qea/matrix.hpp"
#include "qea/prng.hpp"

using namespace qea;

TEST_CASE("context construction pins q deterministically") {
  // q = g^((p-1)/l) for the least primitive root g
  FieldCtx c1 = FieldCtx::make(7, 3, 2);
  CHECK(c1.q() == 2);  // 3 is the least primitive root mod 7, 3^2 = 2
  CHECK(c1.base()->pow(c1.q(), 3) == 1);
  CHECK(c1.base()->pow(c1.q(), 1) != 1);

  CHECK(FieldCtx::make(5, 2, 2).q() == 4);
  CHECK(FieldCtx::make(7, 2, 1).q() == 6);
  CHECK(FieldCtx::make(11, 5, 2).base()->pow(FieldCtx::make(11, 5, 2).q(), 5) == 1);
}

TEST_CASE("context construction rejects bad parameters") {
  CHECK_THROWS_AS(FieldCtx::make(6, 2, 1), Error);   // not prime
  CHECK_THROWS_AS(FieldCtx::make(7, 4, 1), Error);   // 7 != 1 mod 4
  CHECK_THROWS_AS(FieldCtx::make(7, 1, 1), Error);   // ell too small
  CHECK(FieldCtx::make(13, 3, 1).q() == 3);          // 2^4 mod 13
}

TEST_CASE("q powers enumerate ell distinct roots of unity") {
  for (auto [p, ell] : {std::pair<std::uint32_t, std::uint32_t>{5, 2}, {7, 3}, {11, 5}, {13, 3}}) {
    FieldCtx ctx = FieldCtx::make(p, ell, 1);
    std::set<ffelt> roots;
    for (std::uint32_t k = 0; k < ell; ++k) roots.insert(ctx.q_pow(k));
    CHECK(roots.size() == ell);
    CHECK(ctx.q_pow(ell) == 1);
    CHECK(ctx.q_pow(-1) == ctx.base()->inv(ctx.q()));
  }
}

TEST_CASE("extension fields pick the least irreducible modulus") {
  FieldCtx ctx = FieldCtx::make(5, 2, 1);
  CHECK(ctx.extension(1)->size() == 5);

  FieldPtr f25 = ctx.extension(2);
  CHECK(f25->size() == 25);
  // oracle: brute-force least monic irreducible quadratic over F_5, ordered by
  // (c1, c0); irreducible <=> no roots
  std::vector<std::uint16_t> expect;
  for (std::uint32_t c1 = 0; c1 < 5 && expect.empty(); ++c1)
    for (std::uint32_t c0 = 0; c0 < 5 && expect.empty(); ++c0) {
      bool has_root = false;
      for (std::uint32_t x = 0; x < 5; ++x)
        if ((x * x + c1 * x + c0) % 5 == 0) has_root = true;
      if (!has_root) expect = {std::uint16_t(c0), std::uint16_t(c1)};
    }
  CHECK(f25->minpoly() == expect);
}

TEST_CASE("F_49 has an element of multiplicative order 48") {
  FieldCtx ctx = FieldCtx::make(7, 2, 1);
  FieldPtr f = ctx.extension(2);
  REQUIRE(f->size() == 49);
  bool found = false;
  for (ffelt a = 1; a < f->size() && !found; ++a) {
    std::uint32_t ord = 1;
    ffelt x = a;
    while (x != 1) {
      x = f->mul(x, a);
      ++ord;
    }
    if (ord == 48) found = true;
  }
  CHECK(found);
}

TEST_CASE("field arithmetic satisfies the ring axioms on random triples") {
  for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{5, 1}, {5, 2}, {7, 2}, {11, 2}, {7, 3}}) {
    FieldPtr f = Field::extension_field(p, e);
    Rng rng(0x5eed + p * 100 + e);
    for (int k = 0; k < 200; ++k) {
      ffelt a = ffelt(rng.below(f->size()));
      ffelt b = ffelt(rng.below(f->size()));
      ffelt c = ffelt(rng.below(f->size()));
      CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
      CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    }
    CHECK_THROWS_AS(f->inv(0), Error);
  }
}

TEST_CASE("rank on pinned examples") {
  FieldPtr f = Field::prime_field(5);
  CHECK(Mat::identity(f, 4).rank() == 4);
  CHECK(Mat(f, 4, 4).rank() == 0);

  Mat m(f, 2, 2);  // [[1,2],[2,4]]: second row is twice the first
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(m.rank() == 1);
}

TEST_CASE("rank-nullity and solve/inverse on random matrices") {
  Rng rng(0xabc);
  for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{5, 1}, {7, 2}}) {
    FieldPtr f = Field::extension_field(p, e);
    for (int k = 0; k < 30; ++k) {
      std::uint32_t rows = 1 + std::uint32_t(rng.below(12));
      std::uint32_t cols = 1 + std::uint32_t(rng.below(12));
      Mat m(f, rows, cols);
      for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j) m.at(i, j) = ffelt(rng.below(f->size()));

      Mat ker = m.kernel_basis();
      CHECK(m.rank() + ker.cols() == cols);
      CHECK((m * ker).is_zero());

      // solve against a consistent right-hand side
      Mat x(f, cols, 2);
      for (std::uint32_t i = 0; i < cols; ++i)
        for (std::uint32_t j = 0; j < 2; ++j) x.at(i, j) = ffelt(rng.below(f->size()));
      Mat rhs = m * x;
      auto sol = m.try_solve(rhs);
      REQUIRE(sol.has_value());
      CHECK(m * *sol == rhs);
    }

    // inverse round-trip on a random invertible matrix
    for (int k = 0; k < 10; ++k) {
      std::uint32_t d = 1 + std::uint32_t(rng.below(10));
      Mat m(f, d, d);
      do {
        for (std::uint32_t i = 0; i < d; ++i)
          for (std::uint32_t j = 0; j < d; ++j) m.at(i, j) = ffelt(rng.below(f->size()));
      } while (m.rank() != d);
      Mat inv = m.inverse();
      CHECK(m * inv == Mat::identity(f, d));
      CHECK(inv * m == Mat::identity(f, d));
    }
  }
}

TEST_CASE("singular and inconsistent systems are reported") {
  FieldPtr f = Field::prime_field(5);
  Mat z(f, 3, 3);
  CHECK(!z.try_inverse().has_value());
  CHECK_THROWS_AS(z.inverse(), Error);

  Mat m(f, 2, 1);  // x = 1, 2x = 1 has no solution
  m.at(0, 0) = 1;
  m.at(1, 0) = 2;
  Mat rhs(f, 2, 1);
  rhs.at(0, 0) = 1;
  rhs.at(1, 0) = 1;
  CHECK(!m.try_solve(rhs).has_value());
  CHECK_THROWS_AS(m.solve(rhs), Error);
}

TEST_CASE("kron flattening is row-major with the left factor outermost") {
  FieldPtr f = Field::prime_field(5);
  Mat a(f, 2, 2), b(f, 2, 2);
  a.at(0, 1) = 2;
  b.at(1, 0) = 3;
  Mat k = a.kron(b);
  CHECK(k.rows() == 4);
  CHECK(k.at(0 * 2 + 1, 1 * 2 + 0) == f->mul(2, 3));
}

TEST_CASE("lift embeds residues as constant digits") {
  FieldCtx ctx = FieldCtx::make(5, 2, 1);
  FieldPtr big = ctx.extension(2);
  Mat m(ctx.base(), 2, 2);
  m.at(0, 0) = 3;
  Mat lifted = m.lift(big);
  CHECK(lifted.at(0, 0) == 3);
  // embedding respects multiplication
  CHECK(big->mul(3, 4) == ffelt((3 * 4) % 5));
}

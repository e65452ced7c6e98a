#include "doctest.h"
#include "sdep/error.hpp"
#include "sdep/linalg.hpp"
#include "sdep/scalar.hpp"

using namespace sdep;

namespace {

Vector vec(const FieldSpec& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

bool throws_kind(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("field parsing and prime check") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("F5") == FieldSpec::prime(5));
  CHECK(FieldSpec::parse("Fp7") == FieldSpec::prime(7));
  CHECK(FieldSpec::prime(5).cardinality() == 5u);
  CHECK_FALSE(FieldSpec::rationals().cardinality().has_value());
  CHECK(throws_kind(ErrorKind::kDomain, [] { FieldSpec::prime(6); }));
  CHECK(throws_kind(ErrorKind::kParse, [] { FieldSpec::parse("R"); }));
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("rational and modular arithmetic") {
  const FieldSpec q = FieldSpec::rationals();
  const Scalar half = q.parse_scalar("1/2");
  CHECK((half + half).is_one());
  CHECK((q.parse_scalar("2/4") == half));
  CHECK(q.parse_scalar("-3/6").to_string() == "-1/2");
  CHECK(throws_kind(ErrorKind::kDomain, [&] { q.zero().inverse(); }));

  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK((f5.from_int(3) * f5.from_int(2)).is_one());
  CHECK(f5.from_int(-1).to_string() == "4");
  CHECK(f5.parse_scalar("1/2").to_string() == "3");
  CHECK(throws_kind(ErrorKind::kParse, [&] { f5.parse_scalar("1/5"); }));
  CHECK(f5.from_int(2).pow(4).is_one());
  CHECK(throws_kind(ErrorKind::kDimensionMismatch, [&] { (void)(f5.one() + q.one()); }));

  // A modulus near 2^32 exercises the 128-bit product.
  const FieldSpec big = FieldSpec::prime(4294967291ULL);
  const Scalar x = big.from_int(4294967290L);
  CHECK((x * x).is_one());
}

TEST_CASE("rref uses the first nonzero pivot and gives the canonical quotient basis") {
  const FieldSpec q = FieldSpec::rationals();
  const ExactMatrix m = ExactMatrix::from_rows({vec(q, {0, 2, 4}), vec(q, {1, 1, 1}), vec(q, {1, 2, 3})}, 3, q);
  const EchelonForm e = rref(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced(0, 2).to_string() == "-1");
  CHECK(e.reduced(1, 2).to_string() == "2");
  CHECK(rank(m) == 2);

  const Subspace s = Subspace::span(3, q, {vec(q, {1, -1, 0})});
  const auto basis = quotient_basis(3, s);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == vec(q, {0, 1, 0}));
  CHECK(basis[1] == vec(q, {0, 0, 1}));
}

TEST_CASE("rank depends on the characteristic") {
  for (long p : {2L, 3L}) {
    const FieldSpec f = FieldSpec::prime(static_cast<std::uint64_t>(p));
    // det [[1,1],[1,-1]] = -2
    const ExactMatrix m = ExactMatrix::from_rows({vec(f, {1, 1}), vec(f, {1, -1})}, 2, f);
    CHECK(rank(m) == (p == 2 ? 1u : 2u));
  }
}

TEST_CASE("subspaces and sums") {
  const FieldSpec q = FieldSpec::rationals();
  const Subspace a = Subspace::span(3, q, {vec(q, {1, 0, 0}), vec(q, {2, 0, 0})});
  const Subspace b = Subspace::span(3, q, {vec(q, {0, 1, 0})});
  const Subspace c = Subspace::span(3, q, {vec(q, {1, 1, 0})});
  CHECK(a.dim() == 1);
  CHECK(a.contains(vec(q, {5, 0, 0})));
  CHECK_FALSE(a.contains(vec(q, {0, 0, 1})));
  const std::vector<Subspace> abc{a, b, c};
  CHECK(subspace_sum_dim(abc) == 2);
  const std::vector<Subspace> bad{a, Subspace(2, q)};
  CHECK(throws_kind(ErrorKind::kDimensionMismatch, [&] { subspace_sum_dim(bad); }));
}

TEST_CASE("matrix products and application") {
  const FieldSpec q = FieldSpec::rationals();
  const ExactMatrix a = ExactMatrix::from_rows({vec(q, {1, 2}), vec(q, {3, 4})}, 2, q);
  const ExactMatrix id = ExactMatrix::identity(2, q);
  CHECK(a * id == a);
  CHECK(a.apply(vec(q, {1, 1})) == vec(q, {3, 7}));
  const ExactMatrix wide(2, 3, q);
  CHECK(throws_kind(ErrorKind::kDimensionMismatch, [&] { (void)(wide * a); }));
}

#include <gtest/gtest.h>

#include "desargues/desargues.hpp"
#include "support/oracles.hpp"

using namespace desargues;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

constexpr MapFamily kFamilies[] = {MapFamily::A, MapFamily::B, MapFamily::C, MapFamily::D};

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

// The displayed inverse of each family, written out per family.
template <SkewScalar S>
S displayed_inverse(const CrossRatioBase<S>& base, const S& x) {
  const auto& p = base.points();
  switch (base.family()) {
    case MapFamily::A: return cross_ratio(x, p[0], p[2], p[1]);  // c_r(X,B;D,C)
    case MapFamily::B: return cross_ratio(p[0], x, p[2], p[1]);  // c_r(A,X;D,C)
    case MapFamily::C: return cross_ratio(p[0], p[1], p[2], x);  // c_r(A,B;D,X)
    case MapFamily::D: return cross_ratio(p[0], p[1], x, p[2]);  // c_r(A,B;X,C)
  }
  throw std::logic_error("family");
}

}  // namespace

TEST(Base, Validation) {
  EXPECT_EQ(kind_of([] { CrossRatioBase<Rational>::make(MapFamily::A, 0, 1, 5); }), ErrorKind::InvalidBase);
  EXPECT_EQ(kind_of([] { CrossRatioBase<Rational>::make(MapFamily::B, 2, 5, 5); }), ErrorKind::InvalidBase);
  const auto base = CrossRatioBase<Rational>::make(MapFamily::C, 2, 3, 5);
  EXPECT_EQ(base.slots(q(7)), (std::array<Rational, 4>{2, 3, 7, 5}));
  EXPECT_EQ(base.describe(), "family C (A,B,D)=(2, 3, 5)");
}

TEST(Evaluate, FamilyAExamples) {
  const auto base = CrossRatioBase<Rational>::make(MapFamily::A, 3, 1, 5);
  EXPECT_EQ(evaluate(base, q(2)), q(1, 3));
  EXPECT_EQ(evaluate(base, q(3)), q(1));
  EXPECT_EQ(evaluate(base, q(1)), q(0));
  EXPECT_EQ(kind_of([&] { evaluate(base, q(5)); }), ErrorKind::SingularArgument);
}

TEST(SpecialPoints, Examples) {
  const auto a = CrossRatioBase<Rational>::make(MapFamily::A, 3, 1, 5);
  EXPECT_EQ(zero_point(a), q(1));
  EXPECT_EQ(unit_point(a), q(3));
  EXPECT_EQ(singular_point(a), q(5));
  const auto c = CrossRatioBase<Rational>::make(MapFamily::C, 2, 3, 5);
  EXPECT_EQ(zero_point(c), q(2));
  EXPECT_EQ(unit_point(c), q(5));
  EXPECT_EQ(evaluate(c, q(5)), q(1));
  const auto d = CrossRatioBase<Rational>::make(MapFamily::D, 2, 3, 1);
  EXPECT_EQ(zero_point(d), q(3));
  EXPECT_EQ(unit_point(d), q(1));
  const auto qa = CrossRatioBase<Quaternion>::make(MapFamily::A, Quaternion::i(), Quaternion::j(),
                                                   Quaternion::k());
  EXPECT_EQ(unit_point(qa), Quaternion::i());  // slot B holds i
  EXPECT_EQ(evaluate(qa, Quaternion::i()), Quaternion(1));
}

TEST(SpecialPoints, FamilyBZeroIsFourthSlot) {
  // f_B(X) = c_r(A,X;C,D) is undefined at X = C; it vanishes at X = D.
  const auto b = CrossRatioBase<Rational>::make(MapFamily::B, 2, 1, 5);
  EXPECT_EQ(singular_point(b), q(1));
  EXPECT_EQ(zero_point(b), q(5));
  EXPECT_EQ(evaluate(b, q(5)), q(0));
  EXPECT_EQ(unit_point(b), q(2));
  EXPECT_EQ(kind_of([&] { evaluate(b, q(1)); }), ErrorKind::SingularArgument);
}

TEST(InverseValue, Examples) {
  const auto a = CrossRatioBase<Rational>::make(MapFamily::A, 3, 1, 5);
  EXPECT_EQ(inverse_value(a, q(2)), q(3));
  EXPECT_EQ(evaluate(a, q(2)) * inverse_value(a, q(2)), q(1));
  EXPECT_EQ(kind_of([&] { inverse_value(a, q(1)); }), ErrorKind::ZeroValueNotInvertible);
  EXPECT_EQ(kind_of([&] { inverse_value(a, q(5)); }), ErrorKind::SingularArgument);
  const auto d = CrossRatioBase<Rational>::make(MapFamily::D, 2, 3, 1);
  EXPECT_EQ(evaluate(d, q(5)) * inverse_value(d, q(5)), q(1));
}

// Slot correctness, zero/unit laws and the two-sided inverse per family and
// backend, against direct cross_ratio calls.
template <SkewField F>
void expect_family_laws(const F& field, std::uint64_t seed) {
  using S = scalar_t<F>;
  Rng rng(seed);
  for (auto family : kFamilies) {
    for (int n = 0; n < 20; ++n) {
      const auto base = sample_base(field, family, rng);
      const auto& p = base.points();
      ASSERT_EQ(evaluate(base, zero_point(base)), field.zero()) << base.describe();
      ASSERT_EQ(evaluate(base, unit_point(base)), field.one()) << base.describe();
      for (int m = 0; m < 10; ++m) {
        const S x = field.sample(rng);
        if (x == singular_point(base)) continue;
        const S direct = family == MapFamily::A   ? cross_ratio(x, p[0], p[1], p[2])
                         : family == MapFamily::B ? cross_ratio(p[0], x, p[1], p[2])
                         : family == MapFamily::C ? cross_ratio(p[0], p[1], x, p[2])
                                                  : cross_ratio(p[0], p[1], p[2], x);
        ASSERT_EQ(evaluate(base, x), direct);
        if (x == zero_point(base)) continue;
        const S y = inverse_value(base, x);
        ASSERT_EQ(y, displayed_inverse(base, x));
        ASSERT_EQ(direct * y, field.one());
        ASSERT_EQ(y * direct, field.one());
      }
    }
  }
}

TEST(FamilyLaws, Rational) { expect_family_laws(RationalField{}, 1); }
TEST(FamilyLaws, Quaternion) { expect_family_laws(QuaternionField{}, 2); }
TEST(FamilyLaws, PrimeField) { expect_family_laws(PrimeField(7), 3); }

TEST(FamilyLaws, QuaternionInverseAgainstOracle) {
  QuaternionField field;
  Rng rng(8);
  for (auto family : kFamilies) {
    const auto base = sample_base(field, family, rng);
    for (int n = 0; n < 50; ++n) {
      const auto x = field.sample(rng);
      if (x == singular_point(base) || x == zero_point(base)) continue;
      const auto prod = oracle::mul(oracle::to_quat(evaluate(base, x)), oracle::to_quat(inverse_value(base, x)));
      EXPECT_TRUE(oracle::is_one(prod));
    }
  }
}

TEST(Verify, ReportsPassOnEveryBackend) {
  const PrimeField gf5(5);
  Rng rng(12);
  for (auto family : kFamilies) {
    EXPECT_TRUE(verify_family(RationalField{}, sample_base(RationalField{}, family, rng), {1, 60, false}).passed());
    EXPECT_TRUE(verify_family(QuaternionField{}, sample_base(QuaternionField{}, family, rng), {2, 30, false}).passed());
    EXPECT_TRUE(verify_family(gf5, sample_base(gf5, family, rng), {0, 0, true}).passed());
  }
}

TEST(Verify, ReportShape) {
  const auto base = CrossRatioBase<Rational>::make(MapFamily::A, 3, 1, 5);
  const auto report = verify_family(RationalField{}, base, {0, 25, false});
  ASSERT_EQ(report.lines.size(), 12u);
  for (const auto& line : report.lines) {
    if (line.name == "add.zero_point" || line.name == "mul.unit_point") continue;
    EXPECT_EQ(line.samples, 25u) << line.name;
  }
  const std::string text = format_report(report);
  EXPECT_NE(text.find("distrib.right: samples=25 rejected="), std::string::npos);
  EXPECT_NE(text.find("OBSERVED attained="), std::string::npos);
  // Reports are reproducible from the seed.
  EXPECT_EQ(text, format_report(verify_family(RationalField{}, base, {0, 25, false})));
}

TEST(Verify, ExhaustiveCountsOverGF5) {
  const PrimeField gf5(5);
  const auto base = CrossRatioBase<PrimeFieldElement>::make(MapFamily::A, gf5.from_int(3),
                                                            gf5.from_int(1), gf5.from_int(2));
  const auto report = verify_family(gf5, base, {0, 0, true});
  for (const auto& line : report.lines) {
    if (line.name == "add.associative") {
      EXPECT_EQ(line.samples, 64u);  // 4 admissible X per slot
      EXPECT_EQ(line.rejected, 1u);
    }
    if (line.name == "mul.two_sided_inverse") { EXPECT_EQ(line.samples, 3u); }
  }
}

TEST(Verify, FailureCarriesCounterexample) {
  IdentityResult r{"x", 3, 0, false, "X=1", false, 0};
  EXPECT_EQ(format_line(r), "x: samples=3 rejected=0 FAIL counterexample: X=1");
  Report rep{"t", {r}};
  EXPECT_FALSE(rep.passed());
  r.observation = true;
  EXPECT_TRUE((Report{"t", {r}}).passed());
}

TEST(Preimage, FindsSampledValues) {
  QuaternionField field;
  Rng rng(30);
  for (auto family : kFamilies) {
    const auto base = sample_base(field, family, rng);
    int found = 0;
    for (int n = 0; n < 30; ++n) {
      const auto x = field.sample(rng);
      if (x == singular_point(base)) continue;
      const auto v = evaluate(base, x);
      const auto pre = preimage(base, v);
      if (pre) {
        EXPECT_EQ(evaluate(base, *pre), v);
        ++found;
      }
    }
    EXPECT_GT(found, 0) << base.describe();
  }
}

TEST(Sylvester, QuaternionSolution) {
  QuaternionField field;
  Rng rng(31);
  for (int n = 0; n < 100; ++n) {
    const auto k = field.sample(rng), v = field.sample(rng), r = field.sample(rng);
    const auto x = solve_sylvester(k, v, r);
    if (x) { EXPECT_EQ(k * *x - *x * v, r); }
  }
  // K = V = i: X = j gives i·j − j·i = 2k.
  const auto x = solve_sylvester(Quaternion::i(), Quaternion::i(), Quaternion(0, 0, 0, 2));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(Quaternion::i() * *x - *x * Quaternion::i(), Quaternion(0, 0, 0, 2));
  EXPECT_FALSE(solve_sylvester(Quaternion::i(), Quaternion::i(), Quaternion(1)).has_value());
}

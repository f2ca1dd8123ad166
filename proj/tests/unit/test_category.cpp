#include <gtest/gtest.h>

#include <random>

#include "couples/engine/exact_couple.hpp"
#include "couples/filt/filt_category.hpp"
#include "couples/gen/random_couples.hpp"
#include "couples/vect/vect_category.hpp"

using namespace couples;

namespace {

const VectCategory vect;
const FiltCategory filt;

VectMorphism vm(std::size_t s, std::size_t t, Matrix m) { return {VectObject{s}, VectObject{t}, std::move(m)}; }

}  // namespace

TEST(Image, VectExamples) {
  const auto f = vm(2, 2, Matrix::from_rows({{1, 0}, {0, 0}}));
  const auto im = image(vect, f);
  EXPECT_EQ(im.matrix, Matrix::from_rows({{1}, {0}}));
  EXPECT_EQ(coimage(vect, f).target.dim, 1u);

  const auto z = vm(2, 3, Matrix(3, 2));
  EXPECT_EQ(image(vect, z).source.dim, 0u);
  EXPECT_EQ(image(vect, z).target.dim, 3u);
  EXPECT_EQ(coimage(vect, z).target.dim, 0u);
}

TEST(Image, ShiftCarriesDifferentFiltrations) {
  const auto s = shift_morphism();
  const auto im = image(filt, s);
  const auto coim = coimage(filt, s);
  // Im: the target's filtration Q ⊇ Q ⊇ 0; Coim: the source's Q ⊇ 0.
  EXPECT_EQ(im.source.length(), 2u);
  EXPECT_EQ(im.source.step(1).dim(), 1u);
  EXPECT_EQ(coim.target.length(), 1u);
  EXPECT_EQ(coim.target.step(1).dim(), 0u);
  EXPECT_FALSE(im.source == coim.target);
}

TEST(CanonicalBar, Examples) {
  const auto fac = factorize(vect, vm(2, 2, Matrix::from_rows({{1, 0}, {0, 0}})));
  EXPECT_TRUE(fac.bar.matrix.is_identity());
  EXPECT_EQ(fac.bar.matrix.rows(), 1u);
  EXPECT_TRUE(is_iso(vect, fac.bar));

  const auto shift = factorize(filt, shift_morphism());
  EXPECT_TRUE(is_monic(filt, shift.bar));
  EXPECT_TRUE(is_epic(filt, shift.bar));
  EXPECT_FALSE(is_iso(filt, shift.bar));

  const auto zero = factorize(vect, vm(2, 2, Matrix(2, 2)));
  EXPECT_EQ(zero.bar.source.dim, 0u);
  EXPECT_EQ(zero.bar.target.dim, 0u);
}

TEST(Strictness, Examples) {
  EXPECT_TRUE(is_strict(vect, identity(vect, VectObject{3})).strict);
  const FiltObject x = FiltObject::trivial(2);
  EXPECT_TRUE(is_strict(filt, identity(filt, x)).strict);
  const auto cert = is_strict(filt, shift_morphism());
  EXPECT_FALSE(cert.strict);
  ASSERT_TRUE(cert.level);
  EXPECT_EQ(*cert.level, 1u);
  EXPECT_FALSE(cert.reason.empty());
}

TEST(SubobjectEqual, Examples) {
  const auto m = vm(1, 2, Matrix::from_rows({{1}, {0}}));
  const auto u = subobject_equal(vect, m, m);
  ASSERT_TRUE(u);
  EXPECT_TRUE(u->matrix.is_identity());

  const auto m2 = vm(1, 2, Matrix::from_rows({{2}, {0}}));
  const auto w = subobject_equal(vect, m, m2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->matrix, Matrix::from_rows({{Rational(1, 2)}}));
  EXPECT_EQ(m2.matrix * w->matrix, m.matrix);

  EXPECT_FALSE(subobject_equal(vect, m, vm(1, 2, Matrix::from_rows({{0}, {1}}))));
  EXPECT_THROW(subobject_equal(vect, vm(2, 2, Matrix(2, 2)), vm(2, 2, Matrix::identity(2))), CategoryError);
}

TEST(QuotientEqual, Examples) {
  const auto e = vm(2, 1, Matrix::from_rows({{1, 0}}));
  const auto e2 = vm(2, 1, Matrix::from_rows({{3, 0}}));
  const auto u = quotient_equal(vect, e, e2);
  ASSERT_TRUE(u);
  EXPECT_EQ(u->matrix * e.matrix, e2.matrix);
  EXPECT_FALSE(quotient_equal(vect, e, vm(2, 1, Matrix::from_rows({{0, 1}}))));
}

TEST(Mediation, PullbackExamples) {
  const auto id = identity(vect, VectObject{1});
  const auto pb = pullback(vect, id, id);
  EXPECT_EQ(pb.object.dim, 1u);

  const auto self = mediate_pullback(vect, pb, pb.p1, pb.p2);
  ASSERT_TRUE(self.unique());
  EXPECT_TRUE(self.morphism->matrix.is_identity());

  const VectObject w{2};
  const auto zero = mediate_pullback(vect, pb, zero_morphism(vect, w, VectObject{1}), zero_morphism(vect, w, VectObject{1}));
  ASSERT_TRUE(zero.unique());
  EXPECT_TRUE(zero.morphism->matrix.is_zero());

  const auto u = vm(2, 1, Matrix::from_rows({{3, Rational(-1, 2)}}));
  const auto m = mediate_pullback(vect, pb, u, u);
  ASSERT_TRUE(m.unique());
  EXPECT_EQ(pb.p1.matrix * m.morphism->matrix, u.matrix);
  EXPECT_EQ(pb.p2.matrix * m.morphism->matrix, u.matrix);

  const auto v = vm(2, 1, Matrix::from_rows({{1, 1}}));
  EXPECT_FALSE(mediate_pullback(vect, pb, u, v).exists());
}

TEST(Mediation, PushoutExamples) {
  const auto id = identity(vect, VectObject{1});
  const auto po = pushout(vect, id, id);
  EXPECT_EQ(po.object.dim, 1u);
  const auto self = mediate_pushout(vect, po, po.q1, po.q2);
  ASSERT_TRUE(self.unique());
  EXPECT_TRUE(self.morphism->matrix.is_identity());

  const auto u = vm(1, 2, Matrix::from_rows({{2}, {5}}));
  const auto m = mediate_pushout(vect, po, u, u);
  ASSERT_TRUE(m.unique());
  EXPECT_EQ(m.morphism->matrix * po.q1.matrix, u.matrix);

  // Out of the zero object the pushout is the direct sum.
  const auto z = zero_morphism(vect, VectObject{0}, VectObject{2});
  const auto zpo = pushout(vect, z, z);
  EXPECT_EQ(zpo.object.dim, 4u);
  const auto a = vm(2, 1, Matrix::from_rows({{1, 2}}));
  const auto b = vm(2, 1, Matrix::from_rows({{0, 7}}));
  const auto s = mediate_pushout(vect, zpo, a, b);
  ASSERT_TRUE(s.unique());
  EXPECT_EQ(s.morphism->matrix, hstack(a.matrix, b.matrix));
}

TEST(Semistability, Examples) {
  const auto k = vect.kernel(vm(3, 2, Matrix::from_rows({{1, 0, 1}, {0, 1, 1}})));
  EXPECT_EQ(is_semistable_kernel(vect, k).verdict, Semistability::certified_true);

  std::mt19937_64 rng(21);
  for (int i = 0; i < 10; ++i) {
    const auto x = filt.random_object(rng, 4);
    const auto f = filt.random_morphism(rng, x, filt.random_object(rng, 3));
    const auto ker = filt.kernel(f);
    EXPECT_EQ(is_semistable_kernel(filt, ker).verdict, Semistability::certified_true);
    SemistabilityOptions probe{100, 5, true, 4};
    const auto v = is_semistable_kernel(filt, ker, probe);
    EXPECT_EQ(v.verdict, Semistability::probed_true) << v.witness;
    EXPECT_EQ(v.probes_run, 100u);
    const auto c = is_semistable_cokernel(filt, filt.cokernel(f), probe);
    EXPECT_EQ(c.verdict, Semistability::probed_true) << c.witness;
  }
  EXPECT_THROW(is_semistable_kernel(filt, shift_morphism()), CategoryError);
}

template <class Cat>
void factorization_property(const Cat& cat, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    const auto f = cat.random_morphism(rng, cat.random_object(rng, 4), cat.random_object(rng, 4));
    const auto fac = factorize(cat, f);
    EXPECT_EQ(fac.im.matrix * fac.bar.matrix * fac.coim.matrix, f.matrix);
    EXPECT_TRUE(is_monic(cat, fac.bar));
    EXPECT_TRUE(is_epic(cat, fac.bar));
    if (Cat::kAbelian) EXPECT_TRUE(is_iso(cat, fac.bar));
    // ker(cok(ker f)) = ker f
    const auto k = cat.kernel(f);
    EXPECT_TRUE(subobject_equal(cat, cat.kernel(cat.cokernel(k)), k));
    // Kernel and cokernel are universal arrows.
    EXPECT_TRUE(is_zero(cat, compose(cat, f, k)));
    EXPECT_TRUE(is_zero(cat, compose(cat, cat.cokernel(f), f)));
  }
}

TEST(CategoryProperties, FactorizationBothBackends) {
  factorization_property(vect, 31);
  factorization_property(filt, 32);
}

template <class Cat>
void subobject_equivalence(const Cat& cat, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    const auto x = cat.random_object(rng, 4);
    // Three monics into x, two of which share a subobject by construction.
    const auto g = cat.random_morphism(rng, x, cat.random_object(rng, 3));
    const auto m1 = cat.kernel(g);
    const auto m2 = image(cat, m1);
    const auto m3 = cat.kernel(cat.random_morphism(rng, x, cat.random_object(rng, 3)));
    for (const auto* a : {&m1, &m2, &m3}) EXPECT_TRUE(subobject_equal(cat, *a, *a));
    for (const auto* a : {&m1, &m2, &m3}) {
      for (const auto* b : {&m1, &m2, &m3}) {
        EXPECT_EQ(subobject_equal(cat, *a, *b).has_value(), subobject_equal(cat, *b, *a).has_value());
        for (const auto* c : {&m1, &m2, &m3}) {
          if (subobject_equal(cat, *a, *b) && subobject_equal(cat, *b, *c)) {
            EXPECT_TRUE(subobject_equal(cat, *a, *c));
          }
        }
      }
    }
    EXPECT_TRUE(subobject_equal(cat, m1, m2));
  }
}

TEST(CategoryProperties, SubobjectEqualityIsAnEquivalence) {
  subobject_equivalence(vect, 41);
  subobject_equivalence(filt, 42);
}

template <class Cat>
void exactness_equivalence(const Cat& cat, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 200; ++i) {
    const auto x = cat.random_object(rng, 3);
    const auto y = cat.random_object(rng, 3);
    const auto z = cat.random_object(rng, 3);
    const auto alpha = cat.random_morphism(rng, x, y);
    // Half the time force beta = cok alpha, so that the equality holds.
    const auto beta = i % 2 == 0 ? cat.cokernel(alpha) : cat.random_morphism(rng, y, z);
    const bool sub = subobject_equal(cat, image(cat, alpha), cat.kernel(beta)).has_value();
    const bool quo = quotient_equal(cat, cat.cokernel(alpha), coimage(cat, beta)).has_value();
    EXPECT_EQ(sub, quo);
    if (i % 2 == 0) EXPECT_TRUE(sub);
  }
}

TEST(CategoryProperties, ImageKernelIffCokernelCoimage) {
  exactness_equivalence(vect, 51);
  exactness_equivalence(filt, 52);
}

TEST(CategoryProperties, ValidatedCouplesAgreeOnBothForms) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 40; ++i) {
    const auto m = random_massey_couple(rng);
    const auto v = validate_couple(vect, m.couple.alpha, m.couple.beta, m.couple.gamma);
    EXPECT_TRUE(v.valid());
    EXPECT_TRUE(v.equivalence_consistent());
    const auto f = random_graded_filt_couple(rng);
    const auto w = validate_couple(filt, f.alpha, f.beta, f.gamma);
    EXPECT_TRUE(w.valid());
    EXPECT_TRUE(w.equivalence_consistent());
  }
}

TEST(CategoryProperties, HomIsAnAbelianGroup) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 100; ++i) {
    const auto x = filt.random_object(rng, 3), y = filt.random_object(rng, 3), z = filt.random_object(rng, 3);
    const auto f = filt.random_morphism(rng, x, y), g = filt.random_morphism(rng, x, y);
    const auto h = filt.random_morphism(rng, y, z);
    EXPECT_TRUE(equal(filt, add(filt, f, g), add(filt, g, f)));
    EXPECT_TRUE(is_zero(filt, add(filt, f, negate(filt, f))));
    EXPECT_FALSE(filt.violation(x, y, add(filt, f, g).matrix));
    EXPECT_TRUE(equal(filt, compose(filt, h, add(filt, f, g)), add(filt, compose(filt, h, f), compose(filt, h, g))));
    EXPECT_TRUE(equal(filt, compose(filt, identity(filt, y), f), f));
  }
}

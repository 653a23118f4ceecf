#include <gtest/gtest.h>

#include "ltsenv/catalog.hpp"
#include "ltsenv/ideal_lab.hpp"
#include "oracles.hpp"

using namespace ltsenv;

namespace {

SubspaceBasis coefficient_span(const CentralizerReport& r, const std::vector<Word>& monos) {
  std::vector<Vector> vs;
  for (const auto& u : r.basis) {
    Vector v;
    for (const auto& w : monos) v.push_back(u.coefficient(w));
    vs.push_back(v);
  }
  return SubspaceBasis(monos.size(), vs);
}

}  // namespace

TEST(Monomials, CountsAndOrder) {
  for (std::size_t d = 1; d <= 4; ++d) {
    for (unsigned n = 0; n <= 5; ++n) {
      std::size_t expect = 0;
      for (unsigned k = 0; k <= n; ++k) expect += oracle::sym_dimension(d, k);
      const auto ms = monomials_up_to(d, n);
      EXPECT_EQ(ms.size(), expect);
      for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_TRUE(GradedOrder{}(ms[i - 1], ms[i]));
    }
  }
}

TEST(Centralizer, AbelianLine) {
  EnvelopeSession s(catalog::abelian(1));
  const auto r = truncated_centralizer(s, 3);
  EXPECT_EQ(r.dimension(), 4u);
  EXPECT_FALSE(r.verdict);
  EXPECT_TRUE(r.sound);
  EXPECT_TRUE(r.used_full_system);
}

TEST(Centralizer, So3) {
  EnvelopeSession s(catalog::so3());
  const auto r = truncated_centralizer(s, 4);
  EXPECT_EQ(r.dimension(), oracle::centralizer_dimension(3));
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.sound);
  EXPECT_FALSE(r.used_full_system);
  EXPECT_EQ(r.top_kernel_dims, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(Centralizer, S2) {
  EnvelopeSession s(catalog::s2());
  const auto r = truncated_centralizer(s, 3);
  EXPECT_EQ(r.dimension(), 3u);
  EXPECT_TRUE(r.verdict);
  EXPECT_TRUE(r.sound);
}

TEST(Centralizer, SplitMatchesFull) {
  for (const char* name : {"S2", "S2tilde", "R2", "so3", "bilinear:2", "bilinear:3", "abelian:2"}) {
    EnvelopeSession s(catalog::by_name(name));
    for (unsigned n = 1; n <= 3; ++n) {
      const auto split = truncated_centralizer(s, n, CentralizerMethod::split);
      const auto full = truncated_centralizer(s, n, CentralizerMethod::full);
      const auto monos = monomials_up_to(s.dim(), n);
      EXPECT_EQ(coefficient_span(split, monos), coefficient_span(full, monos)) << name << " N=" << n;
      EXPECT_EQ(split.verdict, full.verdict) << name;
      EXPECT_TRUE(split.sound && full.sound) << name;
    }
  }
}

TEST(Centralizer, CompletenessAgainstMonomialProbe) {
  // No single monomial of degree 2 commutes with all generators of so3
  EnvelopeSession s(catalog::so3());
  for (const auto& w : monomials_up_to(3, 2)) {
    if (w.size() != 2) continue;
    const auto m = s.monomial(w);
    bool all = true;
    for (std::size_t g = 0; g < 3; ++g) all = all && s.commutator(m, s.generator(g)).is_zero();
    EXPECT_FALSE(all);
  }
}

TEST(Centralizer, RejectsZeroBound) {
  EnvelopeSession s(catalog::s2());
  EXPECT_THROW(truncated_centralizer(s, 0), std::invalid_argument);
}

TEST(LeadingTerm, S2Square) {
  EnvelopeSession s(catalog::s2());
  const auto f = unit_vector(2, 1);
  const auto pred = leading_commutator_prediction(s, f, Word{0, 0});
  EXPECT_EQ(pred, s.monomial(Word{0}, -2));
  const auto chk = check_leading_term(s, f, Word{0, 0});
  EXPECT_TRUE(chk.pass);
  // [e^2, f] = 2e
  EXPECT_EQ(-chk.actual, s.monomial(Word{0}, oracle::commutator_s2_coefficient(2)));
}

TEST(LeadingTerm, DegreeOneVanishes) {
  for (const char* name : {"S2", "so3", "R2"}) {
    EnvelopeSession s(catalog::by_name(name));
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j) {
        EXPECT_TRUE(leading_commutator_prediction(s, unit_vector(s.dim(), i), Word{static_cast<Letter>(j)}).is_zero());
      }
    }
  }
}

TEST(LeadingTerm, So3ZX) {
  EnvelopeSession s(catalog::so3());
  const auto z = unit_vector(3, 2);
  const Word zx{0, 2};
  const auto chk = check_leading_term(s, z, zx);
  // a m - m a = 1/2 x, so [zx, z] = -1/2 x
  EXPECT_EQ(chk.prediction, s.monomial(Word{0}, Scalar(1, 2)));
  EXPECT_EQ(s.commutator(s.monomial(zx), s.generator(2)), s.monomial(Word{0}, Scalar(-1, 2)));
  EXPECT_TRUE(chk.pass);
}

TEST(LeadingTerm, AllMonomialsDegreeFour) {
  for (const char* name : {"S2", "so3"}) {
    EnvelopeSession s(catalog::by_name(name));
    for (const auto& m : monomials_up_to(s.dim(), 4)) {
      for (std::size_t i = 0; i < s.dim(); ++i) {
        const auto chk = check_leading_term(s, unit_vector(s.dim(), i), m);
        EXPECT_TRUE(chk.pass) << name << " " << s.to_string(s.monomial(m));
      }
    }
  }
}

TEST(So3Det, Examples) {
  EXPECT_EQ(so3_condition_det(0, 0, 0).det, 16);
  EXPECT_EQ(so3_condition_det(1, 0, 0).det, 96);
  for (long n = 0; n <= 8; ++n) {
    for (long p = 0; n + p <= 8; ++p) {
      for (long q = 0; n + p + q <= 8; ++q) {
        const auto r = so3_condition_det(n, p, q);
        mpz_class m[3][3];
        oracle::so3_rows(n, p, q, m);
        EXPECT_EQ(r.det, mpq_class(oracle::det3(m)));
        EXPECT_EQ(r.formula, mpq_class(oracle::so3_det_formula(n, p, q)));
        EXPECT_TRUE(r.equal);
      }
    }
  }
}

TEST(Suite, S2) {
  EnvelopeSession s(catalog::s2());
  EXPECT_TRUE(is_s2(s.system()));
  const auto rep = lemma_suite(s, 6);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.witness;
  ASSERT_FALSE(rep.checks.empty());
  EXPECT_EQ(rep.checks.front().cases, 6u);
  const auto f = s.generator(1);
  const auto e3 = s.monomial(Word{0, 0, 0});
  EXPECT_EQ(e3 * f - f * e3, s.monomial(Word{0, 0}, 6));
  EXPECT_TRUE(s.commutator(s.generator(0), f).is_zero());
}

TEST(Suite, So3) {
  EnvelopeSession s(catalog::so3());
  EXPECT_FALSE(is_s2(s.system()));
  const auto rep = lemma_suite(s, 3);
  EXPECT_TRUE(rep.ok());
  for (const auto& c : rep.checks) EXPECT_GT(c.cases, 0u) << c.name;
}

TEST(Suite, OtherCatalog) {
  for (const char* name : {"S2tilde", "R2", "bilinear:2", "abelian:2"}) {
    EnvelopeSession s(catalog::by_name(name));
    EXPECT_TRUE(lemma_suite(s, 3).ok()) << name;
  }
}

TEST(BoundedNucleiTest, LeftEqualsMiddle) {
  for (const char* name : {"S2", "so3", "R2", "abelian:2"}) {
    EnvelopeSession s(catalog::by_name(name));
    const auto nu = bounded_nuclei(s, 2, 2);
    EXPECT_EQ(nu.left, nu.middle) << name;
    // 1 is always in the nucleus
    EXPECT_TRUE(nu.left.contains(unit_vector(nu.monomials.size(), 0))) << name;
  }
  EnvelopeSession ab(catalog::abelian(2));
  const auto nu = bounded_nuclei(ab, 2, 2);
  EXPECT_EQ(nu.left.dim(), nu.monomials.size());
}

TEST(CenterLemma, S2PlusLine) {
  EnvelopeSession s(catalog::direct_sum(catalog::s2(), catalog::abelian(1)));
  const auto c = center_lemma_check(s, 2);
  EXPECT_EQ(c.candidates, SubspaceBasis(3, {unit_vector(3, 2)}));
  EXPECT_TRUE(c.holds);
}

TEST(CenterLemma, SimpleHasNone) {
  EnvelopeSession s(catalog::so3());
  const auto c = center_lemma_check(s, 2);
  EXPECT_TRUE(c.candidates.empty());
  EXPECT_TRUE(c.holds);
}

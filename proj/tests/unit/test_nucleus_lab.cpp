#include <gtest/gtest.h>

#include "ltsenv/nucleus_lab.hpp"
#include "random_elements.hpp"

using namespace ltsenv;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

SubspaceBasis span(std::size_t n, std::vector<Vector> vs) { return SubspaceBasis(n, vs); }

const char* kTables[] = {"truncated:3", "truncated:4", "FxF", "idempotent", "mat2", "octonions", "nonassoc3"};

}  // namespace

TEST(FinAlgebraTest, RejectsBadUnit) {
  auto good = algebras::idempotent();
  std::vector<Vector> table;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) table.push_back(good.product(i, j));
  }
  EXPECT_NO_THROW(FinAlgebra(2, table, 0));
  EXPECT_THROW(FinAlgebra(2, table, 1), std::invalid_argument);
  EXPECT_THROW(FinAlgebra(3, table, 0), std::invalid_argument);
  EXPECT_THROW(algebras::by_name("nope"), std::invalid_argument);
}

TEST(FinAlgebraTest, OctonionsAlternativeNotAssociative) {
  const auto o = algebras::octonions();
  bool some_nonzero = false;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto x = unit_vector(8, i);
    EXPECT_EQ(o.multiply(x, x), i == 0 ? x : scale(-1, unit_vector(8, 0)));
    for (std::size_t j = 0; j < 8; ++j) {
      const auto y = unit_vector(8, j);
      EXPECT_TRUE(is_zero(o.associator(x, x, y)));
      EXPECT_TRUE(is_zero(o.associator(y, x, x)));
      for (std::size_t k = 0; k < 8; ++k) some_nonzero = some_nonzero || !is_zero(o.associator(x, y, unit_vector(8, k)));
    }
  }
  EXPECT_TRUE(some_nonzero);
}

TEST(Nuclei, AssociativeCommutative) {
  const auto a = algebras::truncated_polynomial(3);
  const auto nu = nuclei(a);
  const auto whole = SubspaceBasis::whole(3);
  EXPECT_EQ(nu.left, whole);
  EXPECT_EQ(nu.middle, whole);
  EXPECT_EQ(nu.right, whole);
  EXPECT_EQ(nu.center, whole);
}

TEST(Nuclei, Matrices) {
  const auto nu = nuclei(algebras::mat2());
  EXPECT_EQ(nu.left, SubspaceBasis::whole(4));
  EXPECT_EQ(nu.middle, SubspaceBasis::whole(4));
  EXPECT_EQ(nu.right, SubspaceBasis::whole(4));
  EXPECT_EQ(nu.center, span(4, {unit_vector(4, 0)}));
}

TEST(Nuclei, NonAssociativeTable) {
  const auto a = algebras::nonassociative3();
  // (e1,e1,e1) = e1 and (e2,e1,e1) = e2 force N_l = F1
  EXPECT_EQ(a.associator(unit_vector(3, 1), unit_vector(3, 1), unit_vector(3, 1)), unit_vector(3, 1));
  EXPECT_EQ(a.associator(unit_vector(3, 2), unit_vector(3, 1), unit_vector(3, 1)), unit_vector(3, 2));
  const auto nu = nuclei(a);
  EXPECT_EQ(nu.left, span(3, {unit_vector(3, 0)}));
  EXPECT_LT(nu.left.dim(), 3u);
  EXPECT_EQ(nu.center, span(3, {unit_vector(3, 0)}));
}

TEST(Nuclei, OctonionCenterIsScalars) {
  const auto nu = nuclei(algebras::octonions());
  EXPECT_EQ(nu.left, span(8, {unit_vector(8, 0)}));
  EXPECT_EQ(nu.center, span(8, {unit_vector(8, 0)}));
}

TEST(LnAltTest, AssociativeGivesDoubleCommutator) {
  const auto a = algebras::mat2();
  const auto ln = ln_alt(a);
  EXPECT_EQ(ln.space, SubspaceBasis::whole(4));
  EXPECT_TRUE(check_axioms(ln.system, AxiomMode::lts).ok());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) {
        const auto x = unit_vector(4, i), y = unit_vector(4, j), z = unit_vector(4, k);
        const auto xy = sub(a.multiply(x, y), a.multiply(y, x));
        const auto dc = sub(a.multiply(xy, z), a.multiply(z, xy));
        EXPECT_EQ(induced_bracket(a, x, y, z), dc);
      }
    }
  }
}

TEST(LnAltTest, CommutativeHasZeroBracket) {
  const auto ln = ln_alt(algebras::truncated_polynomial(4));
  EXPECT_EQ(ln.space, SubspaceBasis::whole(4));
  EXPECT_FALSE(ln.system.has_ternary());
}

TEST(LnAltTest, OctonionsAreLnAlt) {
  const auto ln = ln_alt(algebras::octonions());
  EXPECT_EQ(ln.space, SubspaceBasis::whole(8));
  EXPECT_TRUE(check_axioms(ln.system, AxiomMode::lts).ok());
  EXPECT_EQ(n_alt(algebras::octonions()), SubspaceBasis::whole(8));
}

TEST(LnAltTest, InducedSystemsAreLts) {
  for (const char* name : kTables) {
    const auto ln = ln_alt(algebras::by_name(name));
    EXPECT_TRUE(check_axioms(ln.system, AxiomMode::lts).ok()) << name;
  }
}

TEST(LnAltTest, NonAssociativeProper) {
  const auto a = algebras::nonassociative3();
  const auto ln = ln_alt(a);
  EXPECT_FALSE(ln.space.contains(unit_vector(3, 1)));
  EXPECT_TRUE(ln.space.contains(unit_vector(3, 0)));
}

TEST(LnAltTest, InducedSystemRejectsOpenSubspace) {
  const auto a = algebras::mat2();
  EXPECT_NO_THROW(induced_system(a, span(4, {unit_vector(4, 2), unit_vector(4, 3)})));
  // [E11, E12 + E21, E12 + E21] = 2(E11 - E22) leaves span(E11, E12 + E21)
  const auto open = span(4, {unit_vector(4, 1), vec({0, 0, 1, 1})});
  EXPECT_THROW(induced_system(a, open), InducedBracketNotClosed);
}

TEST(Tder, ZeroTriple) {
  for (const char* name : kTables) {
    const auto a = algebras::by_name(name);
    const Matrix z(a.dim(), a.dim());
    EXPECT_TRUE(check_tder(a, {z, z, z})) << name;
  }
}

TEST(Tder, LnAltMembershipAgrees) {
  for (const char* name : kTables) {
    const auto a = algebras::by_name(name);
    const auto ln = ln_alt(a);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const auto x = unit_vector(a.dim(), i);
      EXPECT_EQ(lnalt_membership_via_tder(a, x), ln.space.contains(x)) << name << " " << i;
    }
    for (const auto& v : ln.space.vectors()) EXPECT_TRUE(lnalt_membership_via_tder(a, v)) << name;
  }
  EXPECT_FALSE(lnalt_membership_via_tder(algebras::nonassociative3(), unit_vector(3, 1)));
}

TEST(Tder, WrongTripleFails) {
  const auto a = algebras::mat2();
  const auto la = a.left_mult(unit_vector(4, 2));
  EXPECT_FALSE(check_tder(a, {la, la, la}));
}

TEST(Jc, WorkedExamples) {
  {
    const auto a = algebras::truncated_polynomial(3);
    const auto p = jc_element(a, unit_vector(3, 1));
    EXPECT_EQ(p.semisimple, zero_vector(3));
    EXPECT_EQ(p.nilpotent, unit_vector(3, 1));
  }
  {
    const auto a = algebras::product_ff();
    const auto p = jc_element(a, unit_vector(2, 1));
    EXPECT_EQ(p.semisimple, unit_vector(2, 1));
    EXPECT_EQ(p.nilpotent, zero_vector(2));
  }
  {
    const auto a = algebras::idempotent();
    const auto p = jc_element(a, unit_vector(2, 1));
    EXPECT_EQ(p.semisimple, unit_vector(2, 1));
    EXPECT_EQ(p.nilpotent, zero_vector(2));
  }
  {
    // 2 + x in F[x]/(x^3)
    const auto a = algebras::truncated_polynomial(3);
    const auto p = jc_element(a, vec({2, 1, 0}));
    EXPECT_EQ(p.semisimple, vec({2, 0, 0}));
    EXPECT_EQ(p.nilpotent, vec({0, 1, 0}));
  }
  EXPECT_THROW(jc_element(algebras::nonassociative3(), unit_vector(3, 1)), std::invalid_argument);
}

TEST(Jc, PartsOnAllTables) {
  testing_support::Rng rng(11);
  for (const char* name : kTables) {
    const auto a = algebras::by_name(name);
    const auto ln = ln_alt(a);
    std::vector<Vector> samples = ln.space.vectors();
    for (int t = 0; t < 4; ++t) {
      Vector x = zero_vector(a.dim());
      for (const auto& b : ln.space.vectors()) axpy(x, rng.scalar(3), b);
      samples.push_back(x);
    }
    for (const auto& x : samples) {
      const auto p = jc_element(a, x);
      EXPECT_EQ(add(p.semisimple, p.nilpotent), x) << name;
      const Matrix ls = a.left_mult(p.semisimple), ln_ = a.left_mult(p.nilpotent);
      EXPECT_TRUE(commutator(ls, ln_).is_zero()) << name;
      EXPECT_TRUE(is_nilpotent(ln_)) << name;
      EXPECT_EQ(ls + ln_, a.left_mult(x)) << name;
      EXPECT_TRUE(ln.space.contains(p.semisimple) && ln.space.contains(p.nilpotent)) << name;
    }
  }
}

TEST(Generation, SubalgebraIdealPowers) {
  const auto a = algebras::truncated_polynomial(4);
  const auto x = span(4, {unit_vector(4, 1)});
  EXPECT_EQ(generated_subalgebra(a, x, true), SubspaceBasis::whole(4));
  const auto nonunital = generated_subalgebra(a, x, false);
  EXPECT_EQ(nonunital.dim(), 3u);
  EXPECT_EQ(generated_ideal(a, x), nonunital);
  const auto pw = algebra_powers(a, nonunital);
  ASSERT_EQ(pw.size(), 4u);
  EXPECT_EQ(pw[1].dim(), 2u);
  EXPECT_EQ(pw[2].dim(), 1u);
  EXPECT_TRUE(pw[3].empty());
  EXPECT_TRUE(is_nilpotent_subalgebra(a, nonunital));
  EXPECT_FALSE(is_nilpotent_subalgebra(a, SubspaceBasis::whole(4)));
  EXPECT_TRUE(in_center(a, SubspaceBasis::whole(4)));
  EXPECT_FALSE(in_center(algebras::mat2(), span(4, {unit_vector(4, 1)})));
}

TEST(Decompose, TruncatedCubic) {
  const auto a = algebras::truncated_polynomial(3);
  const auto rep = theorem_decompose(a, span(3, {unit_vector(3, 1)}));
  EXPECT_EQ(rep.q, span(3, {unit_vector(3, 0)}));
  EXPECT_EQ(rep.r, span(3, {unit_vector(3, 1), unit_vector(3, 2)}));
  EXPECT_TRUE(rep.v_nilpotent);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  EXPECT_TRUE(rep.verdict());
}

TEST(Decompose, ProductField) {
  const auto a = algebras::product_ff();
  const auto rep = theorem_decompose(a, span(2, {unit_vector(2, 1)}));
  EXPECT_EQ(rep.q, SubspaceBasis::whole(2));
  EXPECT_TRUE(rep.r.empty());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
  EXPECT_TRUE(rep.verdict());
}

TEST(Decompose, Idempotent) {
  const auto a = algebras::idempotent();
  const auto rep = theorem_decompose(a, span(2, {unit_vector(2, 1)}));
  EXPECT_EQ(rep.q, SubspaceBasis::whole(2));
  EXPECT_TRUE(rep.r.empty());
  EXPECT_TRUE(rep.verdict());
}

TEST(Decompose, MixedElement) {
  // V = span(2 + x) in F[x]/(x^3): a_s = 2, a_n = x
  const auto a = algebras::truncated_polynomial(3);
  const auto rep = theorem_decompose(a, span(3, {vec({2, 1, 0})}));
  EXPECT_EQ(rep.v_hat, span(3, {unit_vector(3, 0), unit_vector(3, 1)}));
  EXPECT_EQ(rep.q, span(3, {unit_vector(3, 0)}));
  EXPECT_EQ(rep.r.dim(), 2u);
  EXPECT_TRUE(rep.verdict());
}

TEST(Decompose, Preconditions) {
  EXPECT_THROW(theorem_decompose(algebras::nonassociative3(), span(3, {unit_vector(3, 1)})), PreconditionViolated);
  // x^2 does not generate F[x]/(x^3)
  EXPECT_THROW(theorem_decompose(algebras::truncated_polynomial(3), span(3, {unit_vector(3, 2)})), PreconditionViolated);
  // E12 and E21 do not commute
  EXPECT_THROW(theorem_decompose(algebras::mat2(), span(4, {unit_vector(4, 2), unit_vector(4, 3)})),
               PreconditionViolated);
  EXPECT_THROW(theorem_decompose(algebras::mat2(), SubspaceBasis(3)), PreconditionViolated);
}

TEST(Decompose, NilpotentGenerators) {
  // a = a_n and commuting: the non-unital subalgebra generated by V is nilpotent
  for (std::size_t n : {2u, 3u, 5u}) {
    const auto a = algebras::truncated_polynomial(n);
    const auto v = span(n, {unit_vector(n, 1)});
    EXPECT_TRUE(is_nilpotent_subalgebra(a, generated_subalgebra(a, v, false)));
    EXPECT_TRUE(theorem_decompose(a, v).verdict());
  }
}

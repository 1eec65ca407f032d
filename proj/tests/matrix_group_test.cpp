#include <gtest/gtest.h>

#include <random>

#include "qgroups/cyclotomic_io.hpp"
#include "qgroups/matrix_group.hpp"

using namespace qgroups;

namespace {

UnitaryMatrix m(std::string const &text) { return parse_matrix(text); }

UnitaryMatrix hadamard() { return m("[[1/2*E(8)-1/2*E(8)^3, 1/2*E(8)-1/2*E(8)^3], [1/2*E(8)-1/2*E(8)^3, -1/2*E(8)+1/2*E(8)^3]]"); }
UnitaryMatrix phase() { return m("[[1,0],[0,E(4)]]"); }
UnitaryMatrix sx() { return m("[[0,1],[1,0]]"); }
UnitaryMatrix sz() { return m("[[1,0],[0,-1]]"); }

} // namespace

TEST(Matrix, GateIdentities)
{
  auto h = hadamard();
  EXPECT_TRUE((h * h).is_identity());
  EXPECT_EQ(sx() * sz(), -(sz() * sx()));
  EXPECT_EQ(phase() * phase(), sz());
  EXPECT_EQ(phase().order(), 4u);
  EXPECT_EQ(h.order(), 2u);
  EXPECT_EQ(dagger(phase()), m("[[1,0],[0,-E(4)]]"));
  EXPECT_EQ(h, Cyclotomic::sqrt(2) / 2 * m("[[1,1],[1,-1]]"));
}

TEST(Matrix, KronIsLeftMajor)
{
  auto k = kron(sx(), UnitaryMatrix::identity(2));
  // x tensor I swaps |0b> and |1b>, i.e. rows 0<->2 and 1<->3.
  EXPECT_EQ(k, m("[[0,0,1,0],[0,0,0,1],[1,0,0,0],[0,1,0,0]]"));
  auto a = kron(phase(), sz());
  EXPECT_EQ(a, UnitaryMatrix::diagonal({1, -1, Cyclotomic::root_of_unity(4), -Cyclotomic::root_of_unity(4)}));
  // mixed product rule
  EXPECT_EQ(kron(sx(), sz()) * kron(sz(), phase()), kron(sx() * sz(), sz() * phase()));
}

TEST(Matrix, ParseAndPrint)
{
  auto h = hadamard();
  EXPECT_EQ(parse_matrix(h.str()), h);
  EXPECT_THROW(parse_matrix("[[1,2],[3]]"), ParseError);
  EXPECT_THROW(parse_matrix("[[1,2],[3,4]"), ParseError);
  EXPECT_FALSE(m("[[1,1],[0,1]]").is_unitary());
}

TEST(MatrixGroup, SmallClosures)
{
  EXPECT_EQ(MatrixGroup::closure({hadamard()}).order(), 2u);
  EXPECT_EQ(MatrixGroup::closure({sx(), sz()}).order(), 8u);
  EXPECT_EQ(MatrixGroup::closure({sx(), sz(), phase()}).order(), 32u);
  auto c1 = MatrixGroup::closure({hadamard(), phase()});
  EXPECT_EQ(c1.order(), 192u);
  EXPECT_EQ(c1.conductor(), 8u);
  EXPECT_THROW(MatrixGroup::closure({hadamard(), phase()}, 100), ClosureOverflow);
  EXPECT_THROW(MatrixGroup::closure({m("[[1,1],[0,1]]")}), InvalidArgument);
}

TEST(MatrixGroup, OrderIndependentOfGeneratorOrder)
{
  auto a = MatrixGroup::closure({hadamard(), phase()});
  auto b = MatrixGroup::closure({phase(), hadamard(), sz()});
  ASSERT_EQ(a.order(), b.order());
  for (CayleyTable::Index i = 0; i < a.order(); ++i)
    EXPECT_TRUE(b.contains(a.element(i)));
}

TEST(MatrixGroup, ElementsAreUnitaryAndTableIsExact)
{
  auto g = MatrixGroup::closure({hadamard(), phase()});
  std::mt19937 rng(7);
  std::uniform_int_distribution<CayleyTable::Index> pick(0, static_cast<CayleyTable::Index>(g.order() - 1));
  EXPECT_TRUE(g.element(0).is_identity());
  for (int trial = 0; trial < 40; ++trial) {
    auto x = pick(rng), y = pick(rng);
    auto ex = g.element(x), ey = g.element(y);
    EXPECT_TRUE(ex.is_unitary());
    EXPECT_EQ(g.element(g.mul(x, y)), ex * ey);
    EXPECT_EQ(*g.index_of(ex), x);
  }
}

TEST(MatrixGroup, RegularRepresentationIsHomomorphism)
{
  auto g = MatrixGroup::closure({hadamard(), phase()});
  auto rep = g.regular_perm_rep();
  EXPECT_EQ(rep.order(), g.order());
  std::mt19937 rng(3);
  std::uniform_int_distribution<CayleyTable::Index> pick(0, static_cast<CayleyTable::Index>(g.order() - 1));
  for (int trial = 0; trial < 30; ++trial) {
    auto x = pick(rng), y = pick(rng);
    EXPECT_EQ(g.perm_of(x) * g.perm_of(y), g.perm_of(g.mul(x, y)));
  }
  auto paulis = g.image_of({sx(), sz()});
  EXPECT_EQ(paulis.order(), 8u);
  EXPECT_TRUE(paulis.is_subgroup_of(rep));
}

TEST(MatrixGroup, ExportRoundTrip)
{
  auto g = MatrixGroup::closure({sx(), sz(), phase()});
  auto text = g.str(true);
  auto back = parse_matrix_group(text);
  EXPECT_EQ(back.order(), g.order());
  EXPECT_EQ(back.generators(), g.generators());
  EXPECT_THROW(parse_matrix_group("dim 2\ntensor right-major\ngenerators 0\n"), ParseError);
  auto bad = "dim 2\ntensor left-major\ngenerators 1\n[[0,1],[1,0]]\nelements 2\n[[1,0],[0,1]]\n[[0,-1],[1,0]]\n";
  EXPECT_THROW(parse_matrix_group(bad), ParseError);
}

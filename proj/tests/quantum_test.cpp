#include <random>
#include <set>

#include "gtest/gtest.h"

#include "qgroups/cyclotomic_io.hpp"
#include "qgroups/quantum.hpp"
#include "qgroups/structlab.hpp"

using namespace qgroups;

namespace {

MatrixGroup const &c1()
{
  static auto g = clifford_group(1);
  return g;
}

MatrixGroup const &c2()
{
  static auto g = clifford_group(2);
  return g;
}

// Extraspecial 2-group orders of Aut: 2^(2n) |O^e(2n,2)|.
std::uint64_t orthogonal_order(unsigned n, bool plus)
{
  // |O^e(2n,2)| = 2 q^(n(n-1)) (q^n - e) prod_{i=1}^{n-1} (q^(2i) - 1), q = 2
  std::uint64_t r = 2ull << (n * (n - 1));
  r *= plus ? (1ull << n) - 1 : (1ull << n) + 1;
  for (unsigned i = 1; i < n; ++i)
    r *= (1ull << (2 * i)) - 1;
  return r;
}

} // namespace

TEST(Gates, Catalog)
{
  using namespace gates;
  EXPECT_EQ(sigma_y(), parse_matrix("[[0,-E(4)],[E(4),0]]"));
  EXPECT_TRUE((hadamard() * hadamard()).is_identity());
  EXPECT_TRUE(phase().pow(4).is_identity());
  EXPECT_FALSE(phase().pow(2).is_identity());
  EXPECT_EQ(cz(), UnitaryMatrix::diagonal({1, 1, 1, -1}));
  EXPECT_TRUE(bell().is_unitary());
  auto r = bell();
  for (auto const &e : r.entries())
    EXPECT_TRUE(e == 0 || e * e == Cyclotomic(Rational(1, 2)));
  EXPECT_EQ(pauli_operator("XZ"), kron(sigma_x(), sigma_z()));
  EXPECT_THROW(pauli_operator("XQ"), InvalidArgument);
}

TEST(Gates, PauliLabels)
{
  // (x << n) | z with qubit 0 leftmost
  EXPECT_EQ(pauli_label(0b1000, 2), "XI");
  EXPECT_EQ(pauli_label(0b0001, 2), "IZ");
  EXPECT_EQ(pauli_label(0b1010, 2), "YI");
  for (std::uint32_t l = 0; l < 16; ++l)
    EXPECT_EQ(pauli_operator(l, 2), pauli_operator(pauli_label(l, 2)));
  // commutation from the symplectic form agrees with the matrices
  for (std::uint32_t a = 0; a < 64; ++a)
    for (std::uint32_t b = 0; b < 64; b += 5) {
      auto x = pauli_operator(a, 3), y = pauli_operator(b, 3);
      EXPECT_EQ(paulis_commute(a, b, 3), x * y == y * x);
    }
}

TEST(Groups, Orders)
{
  EXPECT_EQ(pauli_group(1).order(), 16u);
  EXPECT_EQ(pauli_group(2).order(), 64u);
  EXPECT_EQ(pauli_group(3).order(), 256u);
  // the five generators XX, ZZ, XY, YZ, ZX on their own miss i*I
  auto five = MatrixGroup::closure(pauli_paper_generators());
  EXPECT_EQ(five.order(), 32u);
  EXPECT_FALSE(five.contains(gates::i_unit() * UnitaryMatrix::identity(4)));
  EXPECT_EQ(c1().order(), 192u);
  EXPECT_EQ(c2().order(), 92160u);
  EXPECT_EQ(bell_group().order(), 15360u);
  EXPECT_EQ(center(pauli_group(2).regular_perm_rep()).order(), 4u);
}

TEST(Groups, CliffordOrderFormula)
{
  EXPECT_EQ(clifford_order_formula(1), c1().order());
  EXPECT_EQ(clifford_order_formula(2), c2().order());
  mpz_class expected = mpz_class(1) << 18;
  expected *= 3 * 15 * 63;
  EXPECT_EQ(clifford_order_formula(3), expected);
  // independent evaluation: product of small factors
  mpz_class by_hand = 1;
  for (int i = 0; i < 27; ++i)
    by_hand *= 2;
  by_hand *= 3;
  by_hand *= 15;
  by_hand *= 63;
  by_hand *= 255;
  EXPECT_EQ(clifford_order_formula(4), by_hand);
}

TEST(Groups, CliffordNormalisesPauli)
{
  auto const &c = c2();
  auto p = pauli_group(2);
  std::mt19937 rng(5);
  std::uniform_int_distribution<CayleyTable::Index> pc(0, static_cast<CayleyTable::Index>(c.order() - 1));
  std::uniform_int_distribution<CayleyTable::Index> pp(0, static_cast<CayleyTable::Index>(p.order() - 1));
  for (int trial = 0; trial < 50; ++trial) {
    auto u = c.element(pc(rng));
    EXPECT_TRUE(p.contains(u * p.element(pp(rng)) * u.dagger()));
  }
  auto g = c.regular_perm_rep();
  auto image = c.image_of(p);
  EXPECT_EQ(image.order(), 64u);
  EXPECT_TRUE(is_normal(g, image));
  EXPECT_TRUE(normal_closure(g, image.generators()).same_elements(image));

  auto const &g1 = c1();
  auto p1 = pauli_group(1);
  for (CayleyTable::Index x = 0; x < g1.order(); ++x)
    for (auto const &s : p1.generators())
      EXPECT_TRUE(p1.contains(g1.element(x) * s * g1.element(x).dagger()));
}

TEST(Groups, BellGroupInsideClifford)
{
  auto b = bell_group();
  for (auto const &g : b.generators())
    EXPECT_TRUE(c2().contains(g));
  EXPECT_EQ(c2().order() / b.order(), 6u);
  EXPECT_TRUE(is_normal(b.regular_perm_rep(), b.image_of(pauli_group(2))));
}

TEST(YangBaxter, Examples)
{
  EXPECT_TRUE(yang_baxter_check(gates::bell()));
  // (CZ x I)(I x CZ) commute, so both sides collapse to a single factor:
  // A B A = B and B A B = A, which differ.
  EXPECT_FALSE(yang_baxter_check(gates::cz()));
  // identity and swap are the classical solutions
  EXPECT_TRUE(yang_baxter_check(UnitaryMatrix::identity(4)));
  EXPECT_TRUE(yang_baxter_check(UnitaryMatrix({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})));
  // direct evaluation: (H x I) x I and I x (H x I) do not braid
  auto r = kron(gates::hadamard(), gates::sigma0());
  auto id = UnitaryMatrix::identity(2);
  auto a = kron(r, id), b = kron(id, r);
  EXPECT_EQ(yang_baxter_check(r), a * b * a == b * a * b);
  EXPECT_FALSE(yang_baxter_check(r));
  EXPECT_THROW(yang_baxter_check(gates::hadamard()), InvalidArgument);
}

TEST(Graphs, IndependentSets)
{
  EXPECT_EQ(max_independent_set(complete_graph(3)), (std::vector<std::size_t>{0}));
  EXPECT_EQ(max_independent_set(petersen_graph()).size(), 4u);
  Graph path(5);
  for (std::size_t i = 0; i + 1 < 5; ++i)
    path.add_edge(i, i + 1);
  EXPECT_EQ(max_independent_set(path), (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(automorphism_count(petersen_graph()), 120u);
  EXPECT_EQ(petersen_graph().girth(), 5u);
  EXPECT_EQ(maximal_cliques(complete_graph(4)).size(), 1u);

  // exhaustive oracle on random graphs
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g(12);
    for (std::size_t u = 0; u < 12; ++u)
      for (std::size_t v = u + 1; v < 12; ++v)
        if (rng() % 3 == 0)
          g.add_edge(u, v);
    std::size_t best = 0;
    std::uint32_t best_mask = 0;
    for (std::uint32_t m = 0; m < (1u << 12); ++m) {
      bool ok = true;
      for (std::size_t u = 0; u < 12 && ok; ++u)
        if ((m >> u) & 1)
          ok = (g.neighbours(u) & m) == 0;
      auto c = static_cast<std::size_t>(std::popcount(m));
      // lexicographic order of sorted vertex lists: compare bit-reversed masks
      auto rev = [](std::uint32_t x) {
        std::uint32_t r = 0;
        for (int i = 0; i < 12; ++i)
          r |= ((x >> i) & 1u) << (11 - i);
        return r;
      };
      if (ok && (c > best || (c == best && rev(m) > rev(best_mask)))) {
        best = c;
        best_mask = m;
      }
    }
    auto s = max_independent_set(g);
    std::uint32_t mask = 0;
    for (auto v : s)
      mask |= 1u << v;
    EXPECT_EQ(s.size(), best);
    EXPECT_EQ(mask, best_mask);
  }
}

TEST(PauliGeometry, OneQubit)
{
  auto g = pauli_graph(1);
  EXPECT_EQ(g.graph.size(), 3u);
  EXPECT_EQ(g.graph.edge_count(), 0u);
}

TEST(PauliGeometry, TwoQubitQuadrangle)
{
  auto pg = pauli_graph(2);
  EXPECT_EQ(pg.graph.size(), 15u);
  auto r = quadrangle_checks(pg);
  EXPECT_TRUE(r.ok());
  for (auto const &f : r.failures)
    ADD_FAILURE() << f;
  EXPECT_EQ(r.lines.size(), 15u);
  EXPECT_EQ(r.ovoid.size(), 5u);
  EXPECT_EQ(r.cover_girth, 5u);
  EXPECT_EQ(r.automorphisms, 720u);
  auto dot = pg.dot();
  EXPECT_NE(dot.find("label=\"XX\""), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 1 + 15 + 45 + 1);
}

TEST(PauliGeometry, ThreeQubitIndependentSet)
{
  auto pg = pauli_graph(3);
  EXPECT_EQ(pg.graph.size(), 63u);
  for (std::size_t v = 0; v < 63; ++v)
    EXPECT_EQ(pg.graph.degree(v), 30u);
  EXPECT_EQ(max_independent_set(pg.graph).size(), 7u);
}

TEST(MubChain, TwoQubits)
{
  auto chain = mub_chain(2);
  ASSERT_EQ(chain.size(), 4u);
  std::vector<std::uint64_t> orders, auts;
  for (auto const &s : chain) {
    orders.push_back(s.group.order());
    ASSERT_TRUE(s.aut_order) << s.aut_note;
    auts.push_back(*s.aut_order);
  }
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{8, 16, 32, 32}));
  EXPECT_EQ(auts, (std::vector<std::uint64_t>{8, 48, 1920, 1920}));
  // g5 = g4, and the chain is nested
  auto g5 = chain[3].group, g4 = chain[2].group;
  for (CayleyTable::Index i = 0; i < g5.order(); ++i)
    EXPECT_TRUE(g4.contains(g5.element(i)));
  for (std::size_t k = 1; k < chain.size(); ++k)
    for (auto const &m : chain[k - 1].group.generators())
      EXPECT_TRUE(chain[k].group.contains(m));
  // g2 is D8, not Z2 x Z2
  EXPECT_TRUE(isomorphic(chain[0].group.regular_perm_rep(), dihedral_group(8)));
}

TEST(MubChain, ExtraspecialAutomorphismOrders)
{
  // <X_i, Z_i> over n qubits with real phases is 2^(1+2n)_+; Aut has order
  // 2^(2n) |O^+(2n,2)|.
  for (unsigned n = 1; n <= 3; ++n) {
    std::vector<UnitaryMatrix> gens;
    for (unsigned q = 0; q < n; ++q)
      for (char c : {'X', 'Z'}) {
        std::string s(n, 'I');
        s[q] = c;
        gens.push_back(pauli_operator(s));
      }
    auto g = MatrixGroup::closure(gens);
    ASSERT_EQ(g.order(), 2u << (2 * n));
    EXPECT_EQ(automorphism_group(g.regular_perm_rep(), true).order,
              (1ull << (2 * n)) * orthogonal_order(n, true));
  }
  // g4 of the two-qubit chain is of minus type
  EXPECT_EQ(mub_chain(2)[2].aut_order, 16 * orthogonal_order(2, false));
}

TEST(Structure, CliffordOneQubit)
{
  auto g = c1().regular_perm_rep();
  EXPECT_EQ(center(g).order(), 8u);
  EXPECT_TRUE(isomorphic(derived_subgroup(g), sl23()));
  EXPECT_TRUE(isomorphic(coset_action(g, center(g)).image, symmetric_group(4)));
  EXPECT_EQ(abelian_invariants(g), (std::vector<std::uint64_t>{2, 4}));
  auto p = c1().image_of(pauli_group(1));
  auto q = coset_action(g, p).image;
  EXPECT_TRUE(isomorphic(q, dihedral_group(12)));
  // G / SL(2,3) has order 8, not 6
  EXPECT_EQ(coset_action(g, derived_subgroup(g)).image.order(), 8u);
}

TEST(Structure, CliffordOneQubitOverPauliDoesNotSplit)
{
  auto g = c1().regular_perm_rep();
  auto p = c1().image_of(pauli_group(1));
  auto r = find_complement(g, p);
  EXPECT_FALSE(r.complement);
  EXPECT_TRUE(r.exhaustive);

  // Oracle: every subgroup of order 12 is generated by two elements (it is
  // D12); none of them meets P1 trivially.
  auto const &t = g.table();
  auto pn = elements_in(g, p);
  std::size_t order12 = 0;
  for (Index a = 0; a < t.size(); ++a)
    for (Index b = a; b < t.size(); ++b) {
      auto h = generate(t, {a, b});
      if (h.size() != 12)
        continue;
      ++order12;
      std::size_t common = 0;
      for (auto x : h.elements)
        common += pn.contains(x);
      EXPECT_GT(common, 1u);
    }
  EXPECT_GT(order12, 0u);

  // reason: the central element E(8)*I maps to the centre of C1/P1, and no
  // element of its coset has order 2
  auto w = Cyclotomic::root_of_unity(8) * UnitaryMatrix::identity(2);
  auto p1 = pauli_group(1);
  for (CayleyTable::Index i = 0; i < p1.order(); ++i)
    EXPECT_FALSE((w * p1.element(i)).pow(2).is_identity());
}

TEST(Structure, BellGroup)
{
  auto b = bell_group();
  auto g = b.regular_perm_rep();
  auto z = center(g);
  EXPECT_EQ(z.order(), 8u);
  EXPECT_EQ(abelian_invariants(z), (std::vector<std::uint64_t>{8}));
  auto q = coset_action(g, b.image_of(pauli_group(2))).image;
  EXPECT_TRUE(isomorphic(q, direct_product({cyclic_group(2), symmetric_group(5)})));
  auto cq = coset_action(g, z).image;
  std::vector<std::uint64_t> orders;
  PermGroup big;
  for (auto const &n : normal_subgroups(cq)) {
    orders.push_back(n.order());
    if (n.order() == 960)
      big = n;
  }
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{1, 16, 960, 1920}));
  EXPECT_TRUE(is_perfect(big));
  EXPECT_TRUE(isomorphic(big, derived_subgroup(wreath_product(cyclic_group(2), symmetric_group(5)))));
}

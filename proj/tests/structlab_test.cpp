#include <random>
#include <set>

#include "gtest/gtest.h"

#include "qgroups/structlab.hpp"
#include "support.hpp"

using namespace qgroups;
using namespace testsupport;

namespace {

// SL(2,3) oracle: every 2x2 matrix over F_3 with determinant 1, as the
// permutation v -> vM of the nonzero vectors in the order sl23() uses.
std::set<std::vector<std::uint32_t>> sl23_by_enumeration(std::size_t *involutions)
{
  std::vector<std::pair<int, int>> vs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b)
        vs.emplace_back(a, b);
  std::set<std::vector<std::uint32_t>> out;
  *involutions = 0;
  for (int m = 0; m < 81; ++m) {
    int a = m % 3, b = m / 3 % 3, c = m / 9 % 3, d = m / 27;
    if ((a * d - b * c + 9) % 3 != 1)
      continue;
    // M^2 = I with M != I
    bool sq = (a * a + b * c) % 3 == 1 && (a * b + b * d) % 3 == 0 && (c * a + d * c) % 3 == 0 &&
              (c * b + d * d) % 3 == 1;
    bool id = a == 1 && b == 0 && c == 0 && d == 1;
    *involutions += sq && !id;
    std::vector<std::uint32_t> img;
    for (auto [x, y] : vs) {
      std::pair<int, int> w{(x * a + y * c) % 3, (x * b + y * d) % 3};
      img.push_back(static_cast<std::uint32_t>(std::find(vs.begin(), vs.end(), w) - vs.begin()));
    }
    out.insert(img);
  }
  return out;
}

// Same group, generators conjugated by a random relabelling of the points.
PermGroup relabel(PermGroup const &g, std::mt19937 &rng)
{
  std::vector<std::uint32_t> p(g.degree());
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  Permutation s(p);
  std::vector<Permutation> gens;
  for (auto const &x : g.generators())
    gens.push_back(s.inverse() * x * s);
  return PermGroup(g.degree(), gens);
}

} // namespace

TEST(GroupSpec, Orders)
{
  EXPECT_EQ(cyclic_group(6).order(), 6u);
  EXPECT_EQ(dihedral_group(8).order(), 8u);
  EXPECT_EQ(dihedral_group(4).order(), 4u);
  EXPECT_EQ(dihedral_group(12).order(), 12u);
  EXPECT_EQ(symmetric_group(5).order(), 120u);
  EXPECT_EQ(alternating_group(5).order(), 60u);
  EXPECT_EQ(alternating_group(6).order(), 360u);
  EXPECT_EQ(quaternion8().order(), 8u);
  EXPECT_EQ(wreath_product(cyclic_group(2), symmetric_group(5)).order(), 3840u);
  EXPECT_EQ(wreath_product(cyclic_group(2), alternating_group(5)).order(), 1920u);
  EXPECT_EQ(direct_product({cyclic_group(2), symmetric_group(3)}).order(), 12u);
  EXPECT_THROW(dihedral_group(7), InvalidArgument);
}

TEST(GroupSpec, Sl23MatchesMatrixEnumeration)
{
  std::size_t involutions = 0;
  auto oracle = sl23_by_enumeration(&involutions);
  EXPECT_EQ(oracle.size(), 24u);
  EXPECT_EQ(involutions, 1u);
  auto g = sl23();
  EXPECT_EQ(brute_elements(g), oracle);
  std::size_t order_two = 0;
  for (auto o : g.table().element_orders())
    order_two += o == 2;
  EXPECT_EQ(order_two, 1u);
}

TEST(GroupSpec, ParseAndConstruct)
{
  auto s = parse_group_spec("wreath(cyclic(2), alternating(5))");
  EXPECT_EQ(s.str(), "wreath(cyclic(2), alternating(5))");
  EXPECT_EQ(s.construct().order(), 1920u);
  EXPECT_EQ(parse_group_spec(" direct( quaternion8 ,sl23 )").construct().order(), 192u);
  auto f21 = parse_group_spec("semidirect(cyclic(7), cyclic(3), 2)").construct();
  EXPECT_EQ(f21.order(), 21u);
  EXPECT_EQ(center(f21).order(), 1u);
  EXPECT_EQ(parse_group_spec(parse_group_spec("semidirect(cyclic(7), cyclic(3), 2)").str()).str(),
            "semidirect(cyclic(7), cyclic(3), 2)");
  // x -> x^3 has order 6 mod 7, so it is not an action of Z3
  EXPECT_THROW(parse_group_spec("semidirect(cyclic(7), cyclic(3), 3)").construct(), InvalidArgument);
  EXPECT_THROW(parse_group_spec("cyclic(2"), ParseError);
  EXPECT_THROW(parse_group_spec("frobnicate(3)"), ParseError);
  EXPECT_THROW(parse_group_spec("wreath(cyclic(2))"), ParseError);
}

TEST(Isomorphism, KnownPairs)
{
  EXPECT_TRUE(isomorphic(dihedral_group(12), direct_product({cyclic_group(2), symmetric_group(3)})));
  EXPECT_TRUE(isomorphic(quaternion8(), group(8, {"(1,2,5,6)(3,8,7,4)", "(1,3,5,7)(2,4,6,8)"})));
  EXPECT_FALSE(isomorphic(quaternion8(), dihedral_group(8)));
  EXPECT_FALSE(isomorphic(cyclic_group(4), dihedral_group(4)));
  EXPECT_FALSE(isomorphic(sl23(), symmetric_group(4)));
  EXPECT_TRUE(isomorphic(derived_subgroup(symmetric_group(4)), alternating_group(4)));
  EXPECT_TRUE(isomorphic(semidirect_product(cyclic_group(3), cyclic_group(2), {power_automorphism(cyclic_group(3), -1)}),
                         symmetric_group(3)));
}

TEST(Isomorphism, WitnessIsAHomomorphismOnEveryPair)
{
  std::mt19937 rng(11);
  for (auto const &[name, g] : corpus()) {
    if (g.order() > 200)
      continue;
    auto h = relabel(g, rng);
    auto const &ta = g.table();
    auto const &tb = h.table();
    auto iso = find_isomorphism(ta, tb);
    ASSERT_TRUE(iso) << name;
    auto const &map = iso->map;
    std::set<Index> image(map.begin(), map.end());
    EXPECT_EQ(image.size(), ta.size()) << name;
    // Check through the permutations themselves, not the tables.
    for (Index x = 0; x < ta.size(); ++x)
      for (Index y = 0; y < ta.size(); ++y)
        ASSERT_EQ(h.element(map[ta.mul(x, y)]), h.element(map[x]) * h.element(map[y])) << name;
  }
}

TEST(Automorphisms, SmallGroups)
{
  EXPECT_EQ(automorphism_group(dihedral_group(4)).order, 6u);
  EXPECT_EQ(automorphism_group(quaternion8()).order, 24u);
  EXPECT_EQ(automorphism_group(dihedral_group(8)).order, 8u);
  EXPECT_EQ(automorphism_group(cyclic_group(12)).order, 4u);
  EXPECT_EQ(automorphism_group(symmetric_group(4)).order, 24u);
  EXPECT_EQ(automorphism_group(PermGroup::trivial(1)).order, 1u);
  EXPECT_EQ(automorphism_group(symmetric_group(6), true).order, 1440u);
  EXPECT_THROW(automorphism_group(symmetric_group(6)), CapacityError);
}

TEST(Automorphisms, MatchBruteForceCount)
{
  for (auto const &[name, g] : corpus()) {
    auto n = g.order();
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < g.generators().size(); ++i)
      tuples *= n;
    if (tuples > 200000)
      continue;
    EXPECT_EQ(automorphism_group(g, true).order, brute_automorphism_count(g)) << name;
  }
}

TEST(Automorphisms, InnerGroupIsCentralQuotient)
{
  for (auto const &[name, g] : corpus()) {
    if (g.order() > limits().automorphism_extended || g.order() > 1000)
      continue;
    auto a = automorphism_group(g, true);
    EXPECT_EQ(a.inner_order, a.central_quotient_order) << name;
    EXPECT_EQ(a.order % a.inner_order, 0u) << name;
    EXPECT_TRUE(a.inner.is_subgroup_of(a.group)) << name;
    EXPECT_TRUE(is_normal(a.group, a.inner)) << name;
  }
}

TEST(Commutators, ContainedInAndGenerateDerivedSubgroup)
{
  for (auto const &[name, g] : corpus()) {
    if (g.order() > limits().commutator_pairs)
      continue;
    auto a = commutator_set(g, CommutatorPath::all_pairs);
    auto b = commutator_set(g, CommutatorPath::class_representatives);
    EXPECT_TRUE(a.subset_of_derived) << name;
    EXPECT_TRUE(a.generates_derived) << name;
    EXPECT_EQ(a.members, b.members) << name;
    if (g.order() <= 720) {
      BruteTable bt(g);
      EXPECT_EQ(brute_commutators(bt).size(), a.commutators) << name;
    }
  }
}

TEST(Commutators, SmallestPerfectCounterexample)
{
  auto w = wreath_product(cyclic_group(2), symmetric_group(5));
  auto m20 = derived_subgroup(w);
  ASSERT_EQ(m20.order(), 960u);
  EXPECT_TRUE(is_perfect(m20));
  auto a = commutator_set(m20, CommutatorPath::all_pairs);
  auto b = commutator_set(m20, CommutatorPath::class_representatives);
  EXPECT_LT(a.commutators, 960u);
  EXPECT_EQ(a.deficiency(), b.deficiency());
  EXPECT_EQ(a.members, b.members);
  EXPECT_TRUE(a.generates_derived);
  // A5 is perfect and every element is a commutator
  EXPECT_TRUE(commutator_set(alternating_group(5)).equals_derived());
}

TEST(Complements, SplitAndNonSplit)
{
  auto s3 = symmetric_group(3), z4 = cyclic_group(4);
  auto g = direct_product({z4, s3});
  auto n = normal_closure(g, {g.generators()[0]});
  ASSERT_EQ(n.order(), 4u);
  auto r = find_complement(g, n);
  ASSERT_TRUE(r.complement);
  EXPECT_EQ(r.complement->order(), 6u);
  EXPECT_EQ(elements_in(g, n).size(), 4u);

  // S4 = V4 x| S3
  auto s4 = symmetric_group(4);
  auto v4 = derived_subgroup(derived_subgroup(s4));
  auto c = find_complement(s4, v4);
  ASSERT_TRUE(c.complement);
  EXPECT_TRUE(isomorphic(*c.complement, s3));
  auto meet = elements_in(s4, *c.complement);
  auto vn = elements_in(s4, v4);
  std::size_t common = 0;
  for (auto x : meet.elements)
    common += vn.contains(x);
  EXPECT_EQ(common, 1u);

  // Q8 over its center, and Z4 over Z2: no complement, and the search says so
  auto q = find_complement(quaternion8(), center(quaternion8()));
  EXPECT_FALSE(q.complement);
  EXPECT_TRUE(q.exhaustive);
  auto z = find_complement(z4, normal_closure(z4, {z4.generators()[0] * z4.generators()[0]}));
  EXPECT_FALSE(z.complement);
  EXPECT_TRUE(z.exhaustive);

  // a tiny node budget cannot settle anything
  auto tight = find_complement(s4.table(), vn, 1);
  EXPECT_FALSE(tight.exhaustive || tight.complement);
}

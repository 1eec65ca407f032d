#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "matrix_group.hpp"

namespace qgroups {

// ---------------------------------------------------------------------------
// Gates. Tensor products are left-major: in kron(a, b) the first factor acts
// on the most significant qubit.

namespace gates {

inline Cyclotomic i_unit() { return Cyclotomic::root_of_unity(4); }

inline UnitaryMatrix sigma0() { return UnitaryMatrix::identity(2); }
inline UnitaryMatrix sigma_x() { return UnitaryMatrix({{0, 1}, {1, 0}}); }
inline UnitaryMatrix sigma_z() { return UnitaryMatrix::diagonal({1, -1}); }
inline UnitaryMatrix sigma_y() { return i_unit() * (sigma_x() * sigma_z()); }

inline UnitaryMatrix hadamard()
{
  return (Cyclotomic(1) / Cyclotomic::sqrt(2)) * UnitaryMatrix({{1, 1}, {1, -1}});
}

inline UnitaryMatrix phase() { return UnitaryMatrix::diagonal({1, i_unit()}); }
inline UnitaryMatrix cz() { return UnitaryMatrix::diagonal({1, 1, 1, -1}); }

// Bell basis change.
inline UnitaryMatrix bell()
{
  return (Cyclotomic(1) / Cyclotomic::sqrt(2)) *
         UnitaryMatrix({{1, 0, 0, 1}, {0, 1, -1, 0}, {0, 1, 1, 0}, {-1, 0, 0, 1}});
}

} // namespace gates

// ---------------------------------------------------------------------------
// Pauli operators by symplectic label. For n qubits the label is (x << n) | z
// where bit n-1-j of x and z describes qubit j (qubit 0 leftmost):
// 00 = I, 10 = X, 01 = Z, 11 = Y.

inline char pauli_letter(std::uint32_t label, std::size_t n, std::size_t qubit)
{
  auto shift = n - 1 - qubit;
  bool x = (label >> (n + shift)) & 1, z = (label >> shift) & 1;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

inline std::string pauli_label(std::uint32_t label, std::size_t n)
{
  std::string s;
  for (std::size_t q = 0; q < n; ++q)
    s += pauli_letter(label, n, q);
  return s;
}

// The Hermitian tensor product of sigma matrices for the label.
inline UnitaryMatrix pauli_operator(std::uint32_t label, std::size_t n)
{
  std::vector<UnitaryMatrix> factors;
  for (std::size_t q = 0; q < n; ++q) {
    switch (pauli_letter(label, n, q)) {
    case 'I': factors.push_back(gates::sigma0()); break;
    case 'X': factors.push_back(gates::sigma_x()); break;
    case 'Y': factors.push_back(gates::sigma_y()); break;
    default: factors.push_back(gates::sigma_z()); break;
    }
  }
  return kron(factors);
}

inline UnitaryMatrix pauli_operator(std::string const &letters)
{
  std::vector<UnitaryMatrix> factors;
  for (auto c : letters) {
    switch (c) {
    case 'I': factors.push_back(gates::sigma0()); break;
    case 'X': factors.push_back(gates::sigma_x()); break;
    case 'Y': factors.push_back(gates::sigma_y()); break;
    case 'Z': factors.push_back(gates::sigma_z()); break;
    default: throw InvalidArgument("bad Pauli letter '" + std::string(1, c) + "'");
    }
  }
  if (factors.empty())
    throw InvalidArgument("empty Pauli label");
  return kron(factors);
}

// Two Pauli operators commute iff their symplectic product vanishes.
inline bool paulis_commute(std::uint32_t a, std::uint32_t b, std::size_t n)
{
  auto mask = (std::uint32_t(1) << n) - 1;
  auto ax = a >> n, az = a & mask, bx = b >> n, bz = b & mask;
  return (std::popcount(ax & bz) + std::popcount(az & bx)) % 2 == 0;
}

// ---------------------------------------------------------------------------
// Groups.

// XX, ZZ, XY, YZ, ZX
inline std::vector<UnitaryMatrix> pauli_paper_generators()
{
  std::vector<UnitaryMatrix> gens;
  for (auto s : {"XX", "ZZ", "XY", "YZ", "ZX"})
    gens.push_back(pauli_operator(s));
  return gens;
}

inline MatrixGroup pauli_group(std::size_t n)
{
  if (n < 1 || n > 3)
    throw InvalidArgument("pauli_group: n must be 1, 2 or 3");
  std::vector<UnitaryMatrix> gens;
  if (n == 2) {
    // These five alone generate only 32 elements: every product keeps a
    // real phase, so i*I is missing. It is added as the sixth generator.
    gens = pauli_paper_generators();
    gens.push_back(gates::i_unit() * UnitaryMatrix::identity(4));
  } else {
    for (std::size_t q = 0; q < n; ++q)
      for (char c : {'X', 'Y', 'Z'}) {
        std::string s(n, 'I');
        s[q] = c;
        gens.push_back(pauli_operator(s));
      }
  }
  return MatrixGroup::closure(std::move(gens));
}

inline MatrixGroup clifford_group(std::size_t n)
{
  using namespace gates;
  if (n == 1)
    return MatrixGroup::closure({hadamard(), phase()});
  if (n == 2)
    return MatrixGroup::closure({kron(hadamard(), hadamard()), kron(hadamard(), phase()), cz()});
  throw InvalidArgument("clifford_group: n must be 1 or 2");
}

inline MatrixGroup bell_group()
{
  using namespace gates;
  return MatrixGroup::closure({kron(hadamard(), hadamard()), kron(hadamard(), phase()), bell()});
}

// 2^(n^2+2n+3) * prod_{j=1..n} (4^j - 1)
inline mpz_class clifford_order_formula(unsigned n)
{
  if (n < 1)
    throw InvalidArgument("clifford_order_formula: n must be positive");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n * n + 2 * n + 3);
  for (unsigned j = 1; j <= n; ++j) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), 4, j);
    r *= f - 1;
  }
  return r;
}

// (R x I)(I x R)(R x I) == (I x R)(R x I)(I x R), exactly.
inline bool yang_baxter_check(UnitaryMatrix const &r)
{
  if (r.dim() != 4)
    throw InvalidArgument("yang_baxter_check needs a 4x4 matrix");
  auto id = UnitaryMatrix::identity(2);
  auto a = kron(r, id), b = kron(id, r);
  return a * b * a == b * a * b;
}

// ---------------------------------------------------------------------------
// Pauli commutation graph.

struct PauliGraph
{
  std::size_t qubits = 0;
  std::vector<std::uint32_t> labels; // vertex -> symplectic label, increasing
  Graph graph;

  std::string label(std::size_t v) const { return pauli_label(labels[v], qubits); }
  UnitaryMatrix operator_of(std::size_t v) const { return pauli_operator(labels[v], qubits); }

  std::string dot() const
  {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < labels.size(); ++v)
      names.push_back(label(v));
    return to_dot(graph, names, "pauli" + std::to_string(qubits));
  }
};

// Vertices: the 4^n - 1 nonidentity Pauli operators up to phase, ordered by
// symplectic label. Edge iff the operators commute.
inline PauliGraph pauli_graph(std::size_t n)
{
  if (n < 1 || n > 3)
    throw InvalidArgument("pauli_graph: n must be 1, 2 or 3");
  PauliGraph pg;
  pg.qubits = n;
  for (std::uint32_t l = 1; l < (1u << (2 * n)); ++l)
    pg.labels.push_back(l);
  pg.graph = Graph(pg.labels.size());
  for (std::size_t u = 0; u < pg.labels.size(); ++u)
    for (std::size_t v = u + 1; v < pg.labels.size(); ++v)
      if (paulis_commute(pg.labels[u], pg.labels[v], n))
        pg.graph.add_edge(u, v);
  return pg;
}

struct QuadrangleReport
{
  std::size_t vertices = 0;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<std::size_t>> lines;
  std::vector<std::size_t> lines_per_point;
  std::vector<std::size_t> ovoid;
  bool cover_is_petersen = false;
  std::size_t cover_girth = 0;
  std::uint64_t automorphisms = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline QuadrangleReport quadrangle_checks(PauliGraph const &pg)
{
  if (pg.qubits != 2)
    throw InvalidArgument("quadrangle checks need the two-qubit graph");
  auto const &g = pg.graph;
  QuadrangleReport r;
  auto fail = [&](std::string s) { r.failures.push_back(std::move(s)); };

  r.vertices = g.size();
  if (r.vertices != 15)
    fail("vertex count " + std::to_string(r.vertices));
  for (std::size_t v = 0; v < g.size(); ++v) {
    r.degrees.push_back(g.degree(v));
    if (g.degree(v) != 6)
      fail("vertex " + pg.label(v) + " has degree " + std::to_string(g.degree(v)));
  }

  r.lines = maximal_cliques(g);
  if (r.lines.size() != 15)
    fail("line count " + std::to_string(r.lines.size()));
  r.lines_per_point.assign(g.size(), 0);
  for (auto const &l : r.lines) {
    if (l.size() != 3)
      fail("line of size " + std::to_string(l.size()));
    for (auto v : l)
      ++r.lines_per_point[v];
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (r.lines_per_point[v] != 3)
      fail("point " + pg.label(v) + " on " + std::to_string(r.lines_per_point[v]) + " lines");

  r.ovoid = max_independent_set(g);
  if (r.ovoid.size() != 5)
    fail("maximum independent set of size " + std::to_string(r.ovoid.size()));
  std::vector<std::size_t> cover;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!std::binary_search(r.ovoid.begin(), r.ovoid.end(), v))
      cover.push_back(v);
  auto h = g.induced(cover);
  r.cover_girth = h.girth();
  r.cover_is_petersen = graph_isomorphism(h, petersen_graph()).has_value();
  if (!r.cover_is_petersen)
    fail("vertex cover graph is not the Petersen graph");

  r.automorphisms = automorphism_count(g);
  if (r.automorphisms != 720)
    fail("graph automorphism count " + std::to_string(r.automorphisms));
  return r;
}

// ---------------------------------------------------------------------------
// Groups generated by a maximum independent set m_1..m_k of Pauli operators
// (Hermitian representatives, phases kept): g_i = <m_1..m_i>.

struct MubStep
{
  std::size_t index = 0; // i in g_i
  std::vector<std::string> operators;
  MatrixGroup group;
  std::optional<std::uint64_t> aut_order; // empty: above the tier or budget
  std::string aut_note;
};

// Labels of m_1..m_k: the lexicographically smallest maximum independent
// set of pauli_graph(n).
inline std::vector<std::string> mub_operators(std::size_t n)
{
  auto pg = pauli_graph(n);
  std::vector<std::string> out;
  for (auto v : max_independent_set(pg.graph))
    out.push_back(pg.label(v));
  return out;
}

// g_k = <m_1..m_k>
inline MatrixGroup mub_group(std::size_t n, std::size_t k)
{
  auto ops = mub_operators(n);
  if (k < 1 || k > ops.size())
    throw InvalidArgument("mub_group: k out of range");
  std::vector<UnitaryMatrix> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(pauli_operator(ops[i]));
  return MatrixGroup::closure(std::move(gens));
}

// `extended` raises the Aut tier from limits().automorphism to
// limits().automorphism_extended.
inline std::vector<MubStep> mub_chain(std::size_t n, bool extended = false)
{
  if (n < 2 || n > 3)
    throw InvalidArgument("mub_chain: n must be 2 or 3");
  auto ops = mub_operators(n);
  std::vector<MubStep> chain;
  std::vector<UnitaryMatrix> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    gens.push_back(pauli_operator(ops[i]));
    names.push_back(ops[i]);
    if (i == 0)
      continue;
    MubStep step;
    step.index = i + 1;
    step.operators = names;
    step.group = MatrixGroup::closure(gens);
    try {
      step.aut_order = automorphism_group(step.group.regular_perm_rep(), extended).order;
    } catch (CapacityError const &e) {
      step.aut_note = e.what();
    } catch (BudgetExceeded const &e) {
      step.aut_note = e.what();
    }
    chain.push_back(std::move(step));
  }
  return chain;
}

} // namespace qgroups

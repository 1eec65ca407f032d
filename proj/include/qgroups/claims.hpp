#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "group_algorithms.hpp"
#include "group_spec.hpp"
#include "isomorphism.hpp"
#include "quantum.hpp"
#include "structlab.hpp"

namespace qgroups {

// ---------------------------------------------------------------------------
// Ledger records: `id | tier | recipe | expected | provenance | citation`.
// Blank lines and lines starting with '#' are ignored.

enum class Tier
{
  core,
  long_test,
  extended
};

enum class Provenance
{
  paper,
  derived,
  disputed
};

inline std::string to_string(Tier t)
{
  switch (t) {
  case Tier::core: return "core";
  case Tier::long_test: return "long";
  case Tier::extended: return "extended";
  }
  return "?";
}

inline std::string to_string(Provenance p)
{
  switch (p) {
  case Provenance::paper: return "paper";
  case Provenance::derived: return "derived";
  case Provenance::disputed: return "disputed";
  }
  return "?";
}

struct Claim
{
  std::string id;
  Tier tier = Tier::core;
  std::string recipe;
  std::string expected;
  Provenance provenance = Provenance::derived;
  std::string citation;
  std::size_t line = 0;
};

namespace detail {

inline std::string trim(std::string s)
{
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::string strip_spaces(std::string const &s)
{
  std::string out;
  for (auto c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += c;
  return out;
}

// Recipe expressions: name, integer, or name(arg, ...).
struct Expr
{
  std::string name;
  std::vector<Expr> args;
  bool call = false;
  bool number = false;

  std::string str() const
  {
    if (!call)
      return name;
    std::string s = name + "(";
    for (std::size_t i = 0; i < args.size(); ++i)
      s += (i ? "," : "") + args[i].str();
    return s + ")";
  }
};

class ExprParser
{
public:
  explicit ExprParser(std::string_view text) : _t(text) {}

  Expr parse()
  {
    auto e = expr();
    skip();
    if (_p != _t.size())
      fail("unexpected '" + std::string(1, _t[_p]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(std::string const &what)
  {
    throw ParseError("recipe: " + what + " at column " + std::to_string(_p + 1));
  }

  void skip()
  {
    while (_p < _t.size() && std::isspace(static_cast<unsigned char>(_t[_p])))
      ++_p;
  }

  Expr expr()
  {
    skip();
    Expr e;
    auto start = _p;
    while (_p < _t.size() && (std::isalnum(static_cast<unsigned char>(_t[_p])) || _t[_p] == '_' || _t[_p] == '-'))
      ++_p;
    if (_p == start)
      fail("expected a name or number");
    e.name = std::string(_t.substr(start, _p - start));
    e.number = std::all_of(e.name.begin(), e.name.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; });
    skip();
    if (_p < _t.size() && _t[_p] == '(') {
      ++_p;
      e.call = true;
      skip();
      if (_p < _t.size() && _t[_p] == ')') {
        ++_p;
        return e;
      }
      while (true) {
        e.args.push_back(expr());
        skip();
        if (_p < _t.size() && _t[_p] == ',') {
          ++_p;
          continue;
        }
        if (_p < _t.size() && _t[_p] == ')') {
          ++_p;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return e;
  }

  std::string_view _t;
  std::size_t _p = 0;
};

} // namespace detail

inline std::vector<Claim> parse_ledger(std::string const &text)
{
  std::vector<Claim> claims;
  std::set<std::string> ids;
  std::istringstream is(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    auto t = detail::trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    std::vector<std::string> f;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, '|'))
      f.push_back(detail::trim(part));
    if (!t.empty() && t.back() == '|')
      f.push_back("");
    if (f.size() != 6)
      throw ParseError("ledger: expected 6 fields, found " + std::to_string(f.size()), no);
    Claim c;
    c.line = no;
    c.id = f[0];
    if (c.id.empty() || !ids.insert(c.id).second)
      throw ParseError("ledger: missing or duplicate id '" + c.id + "'", no);
    if (f[1] == "core")
      c.tier = Tier::core;
    else if (f[1] == "long")
      c.tier = Tier::long_test;
    else if (f[1] == "extended")
      c.tier = Tier::extended;
    else
      throw ParseError("ledger: unknown tier '" + f[1] + "'", no);
    c.recipe = f[2];
    try {
      detail::ExprParser(c.recipe).parse();
    } catch (ParseError const &e) {
      throw ParseError(std::string("ledger: ") + e.what(), no);
    }
    c.expected = f[3];
    if (c.expected.empty())
      throw ParseError("ledger: empty expected value", no);
    if (f[4] == "paper")
      c.provenance = Provenance::paper;
    else if (f[4] == "derived")
      c.provenance = Provenance::derived;
    else if (f[4] == "disputed")
      c.provenance = Provenance::disputed;
    else
      throw ParseError("ledger: unknown provenance '" + f[4] + "'", no);
    c.citation = f[5];
    if (c.provenance != Provenance::derived && c.citation.empty())
      throw ParseError("ledger: claims checked against the source need a citation", no);
    claims.push_back(std::move(c));
  }
  return claims;
}

inline std::vector<Claim> load_ledger(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open ledger '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ledger(ss.str());
}

// ---------------------------------------------------------------------------
// Recipe evaluation.

class Inconclusive : public Error
{
public:
  using Error::Error;
};

struct GroupValue
{
  PermGroup perm;
  std::optional<MatrixGroup> matrix;
};

struct Value
{
  enum class Kind
  {
    group,
    integer,
    boolean,
    list,
    text
  };

  Kind kind = Kind::integer;
  std::shared_ptr<GroupValue const> group;
  mpz_class integer;
  bool boolean = false;
  std::vector<mpz_class> list;
  std::string text;

  static Value of(mpz_class v)
  {
    Value r;
    r.integer = std::move(v);
    return r;
  }
  static Value of_int(std::uint64_t v)
  {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return of(z);
  }
  static Value of_bool(bool b)
  {
    Value r;
    r.kind = Kind::boolean;
    r.boolean = b;
    return r;
  }
  static Value of_list(std::vector<std::uint64_t> const &v)
  {
    Value r;
    r.kind = Kind::list;
    for (auto x : v)
      r.list.push_back(of_int(x).integer);
    return r;
  }
  static Value of_text(std::string s)
  {
    Value r;
    r.kind = Kind::text;
    r.text = std::move(s);
    return r;
  }
  static Value of_group(PermGroup g, std::optional<MatrixGroup> m = std::nullopt)
  {
    Value r;
    r.kind = Kind::group;
    r.group = std::make_shared<GroupValue const>(GroupValue{std::move(g), std::move(m)});
    return r;
  }

  std::string str() const
  {
    switch (kind) {
    case Kind::group: return "group of order " + std::to_string(group->perm.order());
    case Kind::integer: return integer.get_str();
    case Kind::boolean: return boolean ? "true" : "false";
    case Kind::list: {
      std::string s = "[";
      for (std::size_t i = 0; i < list.size(); ++i)
        s += (i ? "," : "") + list[i].get_str();
      return s + "]";
    }
    case Kind::text: return text;
    }
    return "?";
  }
};

class Evaluator
{
public:
  // `extended` lifts the automorphism tier to the extended bound.
  Value evaluate(std::string const &recipe, bool extended = false)
  {
    _extended = extended;
    return eval(detail::ExprParser(recipe).parse());
  }

private:
  using Expr = detail::Expr;

  Value eval(Expr const &e)
  {
    if (e.number) {
      if (e.call)
        throw InvalidArgument("a number cannot be called");
      return Value::of(mpz_class(e.name));
    }
    auto key = e.str();
    if (auto it = _cache.find(key); it != _cache.end())
      return it->second;
    auto v = compute(e);
    _cache.emplace(key, v);
    return v;
  }

  void arity(Expr const &e, std::size_t lo, std::size_t hi)
  {
    if (e.args.size() < lo || e.args.size() > hi)
      throw InvalidArgument(e.name + ": wrong number of arguments");
  }

  std::shared_ptr<GroupValue const> group_arg(Expr const &e, std::size_t i)
  {
    auto v = eval(e.args.at(i));
    if (v.kind != Value::Kind::group)
      throw InvalidArgument(e.name + ": argument " + std::to_string(i + 1) + " is not a group");
    return v.group;
  }

  std::uint64_t int_arg(Expr const &e, std::size_t i)
  {
    auto v = eval(e.args.at(i));
    if (v.kind != Value::Kind::integer || !v.integer.fits_ulong_p())
      throw InvalidArgument(e.name + ": argument " + std::to_string(i + 1) + " is not a small integer");
    return v.integer.get_ui();
  }

  // Subgroup N of G in G's own permutation domain.
  static PermGroup inside(GroupValue const &g, GroupValue const &n)
  {
    if (g.matrix && n.matrix && g.matrix->dim() == n.matrix->dim())
      return g.matrix->image_of(*n.matrix);
    if (n.perm.degree() == g.perm.degree() && n.perm.is_subgroup_of(g.perm))
      return n.perm;
    throw InvalidArgument("not a subgroup of the given group");
  }

  static Value matrix_group(MatrixGroup m)
  {
    auto p = m.regular_perm_rep();
    return Value::of_group(std::move(p), std::move(m));
  }

  AutomorphismGroup const &automorphisms(Expr const &e)
  {
    auto g = group_arg(e, 0);
    auto key = e.args[0].str();
    auto it = _auts.find(key);
    if (it == _auts.end())
      it = _auts.emplace(key, automorphism_group(g->perm, _extended)).first;
    return it->second;
  }

  static UnitaryMatrix named_matrix(std::string const &name)
  {
    using namespace gates;
    if (name == "bell")
      return bell();
    if (name == "cz")
      return cz();
    if (name == "identity")
      return UnitaryMatrix::identity(4);
    if (name == "swap")
      return UnitaryMatrix({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    if (name == "h_x_i")
      return kron(hadamard(), sigma0());
    throw InvalidArgument("unknown matrix '" + name + "'");
  }

  Value compute(Expr const &e)
  {
    auto const &f = e.name;
    // named gate groups
    if (!e.call) {
      if (f == "p1") return matrix_group(pauli_group(1));
      if (f == "p2") return matrix_group(pauli_group(2));
      if (f == "p3") return matrix_group(pauli_group(3));
      if (f == "c1") return matrix_group(clifford_group(1));
      if (f == "c2") return matrix_group(clifford_group(2));
      if (f == "b2") return matrix_group(bell_group());
      if (f == "p2_five") return matrix_group(MatrixGroup::closure(pauli_paper_generators()));
      if (f == "quaternion8") return Value::of_group(quaternion8());
      if (f == "sl23") return Value::of_group(sl23());
      return Value::of_text(f);
    }
    // reference groups and products
    if (f == "cyclic") return arity(e, 1, 1), Value::of_group(cyclic_group(static_cast<std::uint32_t>(int_arg(e, 0))));
    if (f == "dihedral") return arity(e, 1, 1), Value::of_group(dihedral_group(static_cast<std::uint32_t>(int_arg(e, 0))));
    if (f == "symmetric") return arity(e, 1, 1), Value::of_group(symmetric_group(static_cast<std::uint32_t>(int_arg(e, 0))));
    if (f == "alternating") return arity(e, 1, 1), Value::of_group(alternating_group(static_cast<std::uint32_t>(int_arg(e, 0))));
    if (f == "direct") {
      arity(e, 1, 16);
      std::vector<PermGroup> fs;
      for (std::size_t i = 0; i < e.args.size(); ++i)
        fs.push_back(group_arg(e, i)->perm);
      return Value::of_group(direct_product(fs));
    }
    if (f == "wreath") return arity(e, 2, 2), Value::of_group(wreath_product(group_arg(e, 0)->perm, group_arg(e, 1)->perm));
    if (f == "semidirect") {
      arity(e, 3, 16);
      auto n = group_arg(e, 0)->perm, h = group_arg(e, 1)->perm;
      std::vector<std::vector<Index>> autos;
      for (std::size_t i = 2; i < e.args.size(); ++i)
        autos.push_back(power_automorphism(n, static_cast<long>(int_arg(e, i))));
      return Value::of_group(semidirect_product(n, h, autos));
    }
    if (f == "mub") return arity(e, 2, 2), matrix_group(mub_group(int_arg(e, 0), int_arg(e, 1)));

    // subgroups and quotients
    if (f == "center") return arity(e, 1, 1), Value::of_group(center(group_arg(e, 0)->perm));
    if (f == "derived") return arity(e, 1, 1), Value::of_group(derived_subgroup(group_arg(e, 0)->perm));
    if (f == "central_quotient") {
      arity(e, 1, 1);
      auto g = group_arg(e, 0)->perm;
      return Value::of_group(coset_action(g, center(g)).image);
    }
    if (f == "quotient") {
      arity(e, 2, 2);
      auto g = group_arg(e, 0);
      return Value::of_group(coset_action(g->perm, inside(*g, *group_arg(e, 1))).image);
    }
    if (f == "normal_subgroup") {
      arity(e, 2, 2);
      auto k = int_arg(e, 1);
      std::optional<PermGroup> found;
      for (auto &n : normal_subgroups(group_arg(e, 0)->perm)) {
        if (n.order() != k)
          continue;
        if (found)
          throw InvalidArgument("normal_subgroup: more than one of order " + std::to_string(k));
        found = std::move(n);
      }
      if (!found)
        throw InvalidArgument("normal_subgroup: none of order " + std::to_string(k));
      return Value::of_group(std::move(*found));
    }
    if (f == "aut") return arity(e, 1, 1), Value::of_group(automorphisms(e).group);
    if (f == "inn") return arity(e, 1, 1), Value::of_group(automorphisms(e).inner);

    // numbers and predicates
    if (f == "order") return arity(e, 1, 1), Value::of_int(group_arg(e, 0)->perm.order());
    if (f == "index") {
      arity(e, 2, 2);
      auto g = group_arg(e, 0);
      return Value::of_int(g->perm.order() / inside(*g, *group_arg(e, 1)).order());
    }
    if (f == "abelian_invariants") return arity(e, 1, 1), Value::of_list(abelian_invariants(group_arg(e, 0)->perm));
    if (f == "perfect") return arity(e, 1, 1), Value::of_bool(is_perfect(group_arg(e, 0)->perm));
    if (f == "iso") return arity(e, 2, 2), Value::of_bool(isomorphic(group_arg(e, 0)->perm, group_arg(e, 1)->perm));
    if (f == "normal") {
      arity(e, 2, 2);
      auto g = group_arg(e, 0);
      return Value::of_bool(is_normal(g->perm, inside(*g, *group_arg(e, 1))));
    }
    if (f == "same") {
      arity(e, 2, 2);
      auto a = group_arg(e, 0), b = group_arg(e, 1);
      if (a->matrix && b->matrix)
        return Value::of_bool(a->matrix->order() == b->matrix->order() && inside(*a, *b).order() == a->perm.order());
      return Value::of_bool(a->perm.same_elements(b->perm));
    }
    if (f == "normal_orders") {
      arity(e, 1, 1);
      auto g = group_arg(e, 0)->perm;
      std::set<std::uint64_t> orders;
      for (auto const &n : normal_subgroups(g))
        if (n.order() != 1 && n.order() != g.order())
          orders.insert(n.order());
      return Value::of_list({orders.begin(), orders.end()});
    }
    if (f == "aut_order") return arity(e, 1, 1), Value::of_int(automorphisms(e).order);
    if (f == "inn_order") return arity(e, 1, 1), Value::of_int(automorphisms(e).inner_order);
    if (f == "out_order") {
      arity(e, 1, 1);
      auto const &a = automorphisms(e);
      return Value::of_int(a.order / a.inner_order);
    }
    if (f == "commutators" || f == "commutators_by_classes" || f == "deficiency" || f == "deficiency_by_classes") {
      arity(e, 1, 1);
      auto path = f.find("classes") != std::string::npos ? CommutatorPath::class_representatives
                                                        : CommutatorPath::all_pairs;
      auto r = commutator_set(group_arg(e, 0)->perm, path);
      return Value::of_int(f[0] == 'c' ? r.commutators : r.deficiency());
    }
    if (f == "has_noncommutators") {
      arity(e, 1, 1);
      auto r = commutator_set(group_arg(e, 0)->perm, CommutatorPath::class_representatives);
      return Value::of_bool(r.commutators < r.group_order);
    }
    if (f == "commutator_paths_agree") {
      arity(e, 1, 1);
      auto g = group_arg(e, 0)->perm;
      auto a = commutator_set(g, CommutatorPath::all_pairs);
      auto b = commutator_set(g, CommutatorPath::class_representatives);
      return Value::of_bool(a.members == b.members);
    }
    if (f == "split") {
      arity(e, 2, 2);
      auto g = group_arg(e, 0);
      auto r = find_complement(g->perm, inside(*g, *group_arg(e, 1)));
      if (!r.complement && !r.exhaustive)
        throw Inconclusive("complement search hit its node budget");
      return Value::of_bool(r.complement.has_value());
    }
    if (f == "complement_iso") {
      arity(e, 3, 3);
      auto g = group_arg(e, 0);
      auto r = find_complement(g->perm, inside(*g, *group_arg(e, 1)));
      if (!r.complement)
        return Value::of_text(r.exhaustive ? "none" : "inconclusive");
      return Value::of_bool(isomorphic(*r.complement, group_arg(e, 2)->perm));
    }
    if (f == "clifford_formula") return arity(e, 1, 1), Value::of(clifford_order_formula(static_cast<unsigned>(int_arg(e, 0))));
    if (f == "yang_baxter") return arity(e, 1, 1), Value::of_bool(yang_baxter_check(named_matrix(e.args[0].str())));

    // Pauli graphs
    auto graph = [&]() -> PauliGraph const & {
      arity(e, 1, 1);
      auto n = int_arg(e, 0);
      auto it = _graphs.find(n);
      if (it == _graphs.end())
        it = _graphs.emplace(n, pauli_graph(n)).first;
      return it->second;
    };
    if (f == "pauli_vertices") return Value::of_int(graph().graph.size());
    if (f == "pauli_degrees") {
      auto const &g = graph().graph;
      std::set<std::uint64_t> d;
      for (std::size_t v = 0; v < g.size(); ++v)
        d.insert(g.degree(v));
      return Value::of_list({d.begin(), d.end()});
    }
    if (f == "pauli_lines") return Value::of_int(maximal_cliques(graph().graph).size());
    if (f == "line_sizes" || f == "lines_per_point") {
      auto const &g = graph().graph;
      auto lines = maximal_cliques(g);
      std::set<std::uint64_t> out;
      if (f == "line_sizes") {
        for (auto const &l : lines)
          out.insert(l.size());
      } else {
        std::vector<std::uint64_t> count(g.size(), 0);
        for (auto const &l : lines)
          for (auto v : l)
            ++count[v];
        out.insert(count.begin(), count.end());
      }
      return Value::of_list({out.begin(), out.end()});
    }
    if (f == "mis_size") return Value::of_int(max_independent_set(graph().graph).size());
    if (f == "cover_petersen") {
      auto const &g = graph().graph;
      auto set = max_independent_set(g);
      std::vector<std::size_t> cover;
      for (std::size_t v = 0; v < g.size(); ++v)
        if (!std::binary_search(set.begin(), set.end(), v))
          cover.push_back(v);
      return Value::of_bool(graph_isomorphism(g.induced(cover), petersen_graph()).has_value());
    }
    if (f == "graph_aut") return Value::of_int(automorphism_count(graph().graph));
    throw InvalidArgument("unknown function '" + f + "'");
  }

  bool _extended = false;
  std::map<std::string, Value> _cache;
  std::map<std::string, AutomorphismGroup> _auts;
  std::map<std::uint64_t, PauliGraph> _graphs;
};

// ---------------------------------------------------------------------------
// Running a suite.

enum class Status
{
  pass,
  fail,
  inconclusive,
  disputed_match,
  disputed_mismatch
};

inline std::string to_string(Status s)
{
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::inconclusive: return "inconclusive";
  case Status::disputed_match: return "disputed-match";
  case Status::disputed_mismatch: return "disputed-mismatch";
  }
  return "?";
}

struct ClaimReport
{
  Claim claim;
  Status status = Status::fail;
  std::string computed;
  double seconds = 0;
};

struct SuiteReport
{
  Tier suite = Tier::core;
  std::string ledger;
  std::vector<ClaimReport> claims;

  int exit_code() const
  {
    for (auto const &c : claims)
      if (c.status == Status::fail)
        return 1;
    return 0;
  }

  std::size_t count(Status s) const
  {
    return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [&](auto const &c) { return c.status == s; }));
  }
};

inline bool in_suite(Tier claim, Tier suite) { return static_cast<int>(claim) <= static_cast<int>(suite); }

inline ClaimReport run_claim(Evaluator &ev, Claim const &c)
{
  ClaimReport r;
  r.claim = c;
  auto start = std::chrono::steady_clock::now();
  bool matched = false, settled = true;
  try {
    r.computed = ev.evaluate(c.recipe, c.tier != Tier::core).str();
    matched = detail::strip_spaces(r.computed) == detail::strip_spaces(c.expected);
  } catch (Inconclusive const &e) {
    settled = false;
    r.computed = std::string("inconclusive: ") + e.what();
  } catch (CapacityError const &e) {
    settled = false;
    r.computed = std::string("inconclusive: ") + e.what();
  } catch (ClosureOverflow const &e) {
    settled = false;
    r.computed = std::string("inconclusive: ") + e.what();
  } catch (BudgetExceeded const &e) {
    settled = false;
    r.computed = std::string("inconclusive: ") + e.what();
  } catch (Error const &e) {
    r.computed = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!settled)
    r.status = Status::inconclusive;
  else if (c.provenance == Provenance::disputed)
    r.status = matched ? Status::disputed_match : Status::disputed_mismatch;
  else
    r.status = matched ? Status::pass : Status::fail;
  return r;
}

// Claims run one after another in ledger order; `progress` (if set) sees
// each result as it completes.
inline SuiteReport run_claims(std::vector<Claim> const &claims, Tier suite, std::string ledger_name = "",
                              std::function<void(ClaimReport const &)> progress = {})
{
  SuiteReport report;
  report.suite = suite;
  report.ledger = std::move(ledger_name);
  Evaluator ev;
  for (auto const &c : claims) {
    if (!in_suite(c.tier, suite))
      continue;
    report.claims.push_back(run_claim(ev, c));
    if (progress)
      progress(report.claims.back());
  }
  return report;
}

inline std::string human_table(SuiteReport const &r)
{
  std::size_t wid = 2, wst = 6, wcomp = 8;
  for (auto const &c : r.claims) {
    wid = std::max(wid, c.claim.id.size());
    wst = std::max(wst, to_string(c.status).size());
    wcomp = std::max(wcomp, std::min<std::size_t>(c.computed.size(), 40));
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(wid)) << "id" << "  " << std::setw(static_cast<int>(wst)) << "status"
     << "  " << std::setw(static_cast<int>(wcomp)) << "computed" << "  expected\n";
  for (auto const &c : r.claims) {
    os << std::setw(static_cast<int>(wid)) << c.claim.id << "  " << std::setw(static_cast<int>(wst))
       << to_string(c.status) << "  " << std::setw(static_cast<int>(wcomp)) << c.computed << "  " << c.claim.expected;
    if (c.claim.provenance != Provenance::derived)
      os << "  (" << c.claim.citation << ")";
    os << "\n";
  }
  os << r.claims.size() << " claims: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
     << r.count(Status::inconclusive) << " inconclusive, " << r.count(Status::disputed_match) << " disputed-match, "
     << r.count(Status::disputed_mismatch) << " disputed-mismatch\n";
  return os.str();
}

// Machine-readable report. Everything run-dependent (clock, timings) sits
// in the '#' header; the body is identical for identical inputs.
inline std::string machine_report(SuiteReport const &r, std::string const &timestamp)
{
  std::ostringstream os;
  os << "# qgroups claims report\n";
  os << "# generated " << timestamp << "\n";
  for (auto const &c : r.claims)
    os << "# seconds " << c.claim.id << " " << std::fixed << std::setprecision(3) << c.seconds << "\n";
  os << "suite " << to_string(r.suite) << "\n";
  os << "ledger " << r.ledger << "\n";
  os << "id | tier | status | computed | expected | provenance | citation\n";
  for (auto const &c : r.claims)
    os << c.claim.id << " | " << to_string(c.claim.tier) << " | " << to_string(c.status) << " | " << c.computed
       << " | " << c.claim.expected << " | " << to_string(c.claim.provenance) << " | " << c.claim.citation << "\n";
  os << "exit " << r.exit_code() << "\n";
  return os.str();
}

} // namespace qgroups

// qgroups: build, analyze and verify the gate groups from the command line.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "qgroups/claims.hpp"

using namespace qgroups;

namespace {

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(std::string const &path, std::string const &text)
{
  std::ofstream out(path);
  if (!out)
    throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

// A gate-group name, any group-valued recipe (GroupSpec syntax included),
// or a file in the matrix or permutation export format.
GroupValue resolve(std::string const &expr)
{
  if (std::filesystem::is_regular_file(expr)) {
    auto text = read_file(expr);
    if (text.find("dim ") != std::string::npos) {
      auto m = parse_matrix_group(text);
      return {m.regular_perm_rep(), m};
    }
    return {parse_perm_group(text), std::nullopt};
  }
  Evaluator ev;
  auto v = ev.evaluate(expr, true);
  if (v.kind != Value::Kind::group)
    throw InvalidArgument("'" + expr + "' is not a group");
  return *v.group;
}

std::string list(std::vector<std::uint64_t> const &v)
{
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// Each field is computed on its own so one capacity error does not hide the rest.
void field(std::string const &name, std::function<std::string()> const &f)
{
  std::cout << std::left << std::setw(19) << name;
  try {
    std::cout << f() << "\n";
  } catch (Error const &e) {
    std::cout << "unavailable (" << e.what() << ")\n";
  }
}

int cmd_build(std::string const &name, std::string const &export_path, bool elements)
{
  auto g = resolve(name);
  std::cout << name << ": order " << g.perm.order() << "\n";
  if (!export_path.empty()) {
    write_file(export_path, g.matrix ? g.matrix->str(elements) : g.perm.str());
    std::cout << "wrote " << export_path << "\n";
  }
  return 0;
}

int cmd_analyze(std::string const &expr, bool extended)
{
  auto g = resolve(expr);
  auto const &p = g.perm;
  field("order", [&] { return std::to_string(p.order()); });
  if (g.matrix)
    field("matrix dimension", [&] { return std::to_string(g.matrix->dim()); });
  field("center", [&] { return std::to_string(center(p).order()); });
  field("derived", [&] { return std::to_string(derived_subgroup(p).order()); });
  field("abelian invariants", [&] { return list(abelian_invariants(p)); });
  field("perfect", [&] { return std::string(is_perfect(p) ? "yes" : "no"); });
  field("fingerprint", [&] { return fingerprint(p).str(); });
  field("automorphisms", [&] {
    auto a = automorphism_group(p, extended);
    return std::to_string(a.order) + " (inner " + std::to_string(a.inner_order) + ")";
  });
  return 0;
}

std::string utc_now()
{
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_claims(std::string const &suite_name, std::string const &ledger, std::string const &report_path, bool quiet)
{
  Tier suite = suite_name == "core" ? Tier::core : suite_name == "long" ? Tier::long_test : Tier::extended;
  auto claims = load_ledger(ledger);
  auto report = run_claims(claims, suite, ledger, [&](ClaimReport const &c) {
    if (!quiet)
      std::cerr << "  " << c.claim.id << ": " << to_string(c.status) << " (" << std::fixed << std::setprecision(2)
                << c.seconds << " s)\n";
  });
  std::cout << human_table(report);
  if (!report_path.empty())
    write_file(report_path, machine_report(report, utc_now()));
  return report.exit_code();
}

int cmd_graph(std::size_t n, std::string const &dot_path)
{
  auto pg = pauli_graph(n);
  std::cout << "vertices " << pg.graph.size() << ", edges " << pg.graph.edge_count() << "\n";
  auto set = max_independent_set(pg.graph);
  std::cout << "maximum independent set (" << set.size() << "):";
  for (auto v : set)
    std::cout << " " << pg.label(v);
  std::cout << "\n";
  if (n == 2) {
    auto q = quadrangle_checks(pg);
    std::cout << "lines " << q.lines.size() << ", graph automorphisms " << q.automorphisms
              << ", complement of the set is Petersen: " << (q.cover_is_petersen ? "yes" : "no") << "\n";
    for (auto const &f : q.failures)
      std::cout << "check failed: " << f << "\n";
  }
  if (!dot_path.empty()) {
    write_file(dot_path, pg.dot());
    std::cout << "wrote " << dot_path << "\n";
  }
  return 0;
}

int cmd_mub(std::size_t n, bool extended)
{
  for (auto const &s : mub_chain(n, extended)) {
    std::cout << "g" << s.index << "  order " << std::setw(4) << s.group.order() << "  Aut ";
    if (s.aut_order)
      std::cout << *s.aut_order;
    else
      std::cout << "unavailable (" << s.aut_note << ")";
    std::cout << "  from";
    for (auto const &op : s.operators)
      std::cout << " " << op;
    std::cout << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact computations with the Pauli, Clifford and Bell gate groups"};
  app.require_subcommand(1);

  std::string name, export_path, expr, ledger = QGROUPS_DEFAULT_LEDGER, report_path, suite = "core", dot_path;
  bool elements = false, extended = false, quiet = false;
  std::size_t qubits = 2;

  auto *build = app.add_subcommand("build", "Construct a group and optionally export it");
  build->add_option("name", name, "p1, p2, p3, c1, c2, b2, a GroupSpec or a recipe")->required();
  build->add_option("--export", export_path, "Write generators to FILE");
  build->add_flag("--elements", elements, "Include every element in a matrix export");

  auto *analyze = app.add_subcommand("analyze", "Print structural invariants of a group");
  analyze->add_option("expr", expr, "Group name, GroupSpec, recipe or generator file")->required();
  analyze->add_flag("--extended", extended, "Allow the extended automorphism tier");

  auto *claims = app.add_subcommand("claims", "Claims ledger");
  claims->require_subcommand(1);
  auto *run = claims->add_subcommand("run", "Run a suite of the ledger");
  run->add_option("--suite", suite, "core, long or extended")->check(CLI::IsMember({"core", "long", "extended"}));
  run->add_option("--ledger", ledger, "Ledger file")->check(CLI::ExistingFile);
  run->add_option("--report", report_path, "Machine-readable report file");
  run->add_flag("-q,--quiet", quiet, "No per-claim progress on stderr");

  auto *graph = app.add_subcommand("graph", "Commutation graphs");
  graph->require_subcommand(1);
  auto *pauli = graph->add_subcommand("pauli", "Pauli commutation graph");
  pauli->add_option("-n", qubits, "Number of qubits (1 to 3)")->check(CLI::Range(1, 3));
  pauli->add_option("--dot", dot_path, "Write Graphviz text to FILE");

  std::size_t mub_qubits = 2;
  auto *mub = app.add_subcommand("mub-chain", "Groups generated by a maximum independent set");
  mub->add_option("-n", mub_qubits, "Number of qubits (2 or 3)")->check(CLI::Range(2, 3));
  mub->add_flag("--extended", extended, "Allow the extended automorphism tier");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build)
      return cmd_build(name, export_path, elements);
    if (*analyze)
      return cmd_analyze(expr, extended);
    if (*run)
      return cmd_claims(suite, ledger, report_path, quiet);
    if (*pauli)
      return cmd_graph(qubits, dot_path);
    if (*mub)
      return cmd_mub(mub_qubits, extended);
  } catch (ParseError const &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

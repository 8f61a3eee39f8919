#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "latagg/aggregation.hpp"
#include "latagg/catalog.hpp"
#include "latagg/io.hpp"
#include "latagg/properties.hpp"

namespace {

// Exit codes: 0 ok, 2 bad input, 3 bound exceeded, 4 internal inconsistency.
constexpr int kExitInput = 2;
constexpr int kExitBound = 3;
constexpr int kExitInternal = 4;

struct Options {
  uint64_t seed = 0;  // reserved for sampling commands
  bool quiet = false;
  int tolerance_bound = latagg::kToleranceEnumMaxElements;
  bool allow_n8 = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw latagg::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

latagg::Lattice load_lattice(const std::string& path) {
  return latagg::parse_lat(read_input(path));
}

std::string name_list(const latagg::Lattice& L, const std::vector<latagg::Elem>& xs) {
  std::string out;
  for (latagg::Elem x : xs) {
    if (!out.empty()) out += ' ';
    out += L.name(x);
  }
  return out;
}

void cmd_check(const std::string& path) {
  latagg::Lattice L = load_lattice(path);
  std::cout << "elements: " << L.size() << "\n";
  std::cout << "bottom: " << L.name(L.bottom()) << "\n";
  std::cout << "top: " << L.name(L.top()) << "\n";
  std::cout << "atoms: " << name_list(L, L.atoms()) << "\n";
  std::cout << "coatoms: " << name_list(L, L.coatoms()) << "\n";
  std::cout << "join_irreducibles: " << name_list(L, L.join_irreducibles()) << "\n";
  latagg::PropertyProfile p = latagg::profile(L);
  auto yn = [](bool b) { return b ? "Y" : "N"; };
  std::cout << "simple: " << yn(p.simple) << "\n";
  std::cout << "modular: " << yn(p.modular) << "\n";
  std::cout << "complemented: " << yn(p.complemented) << "\n";
  std::cout << "relatively_complemented: " << yn(p.relatively_complemented) << "\n";
  std::cout << "atoms_join_is_top: " << yn(p.atoms_join_is_top) << "\n";
  std::cout << "coatoms_meet_is_bottom: " << yn(p.coatoms_meet_is_bottom) << "\n";
  std::cout << "tolerance_trivial: " << yn(p.tolerance_trivial) << "\n";
  std::cout << "smallest_agg: " << yn(p.smallest_agg) << "\n";
}

void cmd_decide(const std::string& path) {
  latagg::Lattice L = load_lattice(path);
  latagg::DecisionReport report = latagg::decide_smallest_agg(L);
  if (report.smallest) {
    std::cout << "SMALLEST\n";
    for (const auto& [a, term] : report.chi_witnesses)
      std::cout << "chi " << L.name(a) << " := " << term.str(L) << "\n";
  } else {
    std::cout << "NOT-SMALLEST\n";
    std::cout << latagg::tolerance_pairs_text(L, *report.tolerance_witness);
  }
}

void cmd_chi(const std::string& path, const std::string& element) {
  latagg::Lattice L = load_lattice(path);
  latagg::Elem c = L.index_of(element);
  latagg::require_nondegenerate(L);

  // Witnesses for the join-irreducibles the combination step needs: c alone
  // when c is join-irreducible, the atoms for bottom, everything below c
  // otherwise.
  std::vector<latagg::Elem> irr = L.join_irreducibles();
  std::vector<latagg::Elem> needed;
  if (std::find(irr.begin(), irr.end(), c) != irr.end()) {
    needed.push_back(c);
  } else if (c == L.bottom()) {
    needed = L.atoms();
  } else {
    for (latagg::Elem a : irr)
      if (L.leq(a, c)) needed.push_back(a);
  }

  std::map<latagg::Elem, latagg::Term> witnesses;
  for (latagg::Elem a : needed) {
    auto term = latagg::synthesize_chi_polynomial(L, a);
    if (!term) {
      std::cout << "NONE\n";
      return;
    }
    witnesses.emplace(a, std::move(*term));
  }
  latagg::Term term = latagg::chi_for_any_element(L, c, witnesses);
  std::cout << term.str(L) << "\n";
}

void cmd_represent(const std::string& lat_path, const std::string& fun_path) {
  latagg::Lattice L = load_lattice(lat_path);
  latagg::AggTable f = latagg::parse_fun(L, read_input(fun_path));
  latagg::DecisionReport report = latagg::decide_smallest_agg(L);
  latagg::Term term = latagg::represent_aggregation(L, f, report);
  std::cout << term.str(L) << "\n";
}

void cmd_tolerances(const std::string& path, const Options& opt) {
  latagg::Lattice L = load_lattice(path);
  std::vector<latagg::Tolerance> tols = latagg::all_tolerances(L, opt.tolerance_bound);
  std::cout << "tolerances " << tols.size() << "\n";
  for (size_t i = 0; i < tols.size(); ++i) {
    std::cout << "tolerance " << i << "\n";
    std::cout << latagg::tolerance_pairs_text(L, tols[i]);
  }
}

void cmd_enumerate(int n, const Options& opt) {
  std::vector<latagg::CatalogEntry> entries = latagg::census(n, opt.allow_n8);
  for (size_t i = 0; i < entries.size(); ++i)
    std::cout << latagg::census_line(static_cast<int>(i), entries[i]) << "\n";
  if (!opt.quiet)
    std::cerr << "enumerated " << entries.size() << " classes for n=" << n << "\n";
}

void cmd_builtin(const std::string& name) {
  std::cout << latagg::to_lat_text(latagg::builtin(name));
}

void cmd_export_dot(const std::string& path) {
  std::cout << latagg::to_dot(load_lattice(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite bounded lattices: aggregation-function decision and witnesses"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "seed for sampling commands");
  app.add_flag("--quiet", opt.quiet, "suppress informational notes on stderr");
  app.add_option("--tolerance-bound", opt.tolerance_bound,
                 "max elements for tolerance enumeration")
      ->check(CLI::Range(2, 64));
  app.add_flag("--allow-n8", opt.allow_n8, "permit enumeration of 8-element lattices");

  std::string lat_path, fun_path, element, builtin_name;
  int enum_n = 0;

  CLI::App* check = app.add_subcommand("check", "validate a .lat file and print its profile");
  check->add_option("lattice", lat_path, "path to a .lat file, or - for stdin")->required();

  CLI::App* decide = app.add_subcommand(
      "decide", "decide smallest-class membership with a constructive witness");
  decide->add_option("lattice", lat_path, "path to a .lat file, or - for stdin")->required();

  CLI::App* chi = app.add_subcommand("chi", "print a polynomial term for chi of an element");
  chi->add_option("lattice", lat_path)->required();
  chi->add_option("element", element, "element name")->required();

  CLI::App* represent =
      app.add_subcommand("represent", "represent a .fun aggregation table as a polynomial");
  represent->add_option("lattice", lat_path)->required();
  represent->add_option("function", fun_path, "path to a .fun file")->required();

  CLI::App* tolerances = app.add_subcommand("tolerances", "list every tolerance");
  tolerances->add_option("lattice", lat_path)->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "census of all n-element lattices, one line each");
  enumerate->add_option("n", enum_n, "element count")->required();

  CLI::App* builtin_cmd = app.add_subcommand("builtin", "print a builtin lattice as .lat text");
  builtin_cmd->add_option("name", builtin_name, "chain-<k> | mn-<k> | bool-<k> | glued-m3")
      ->required();

  CLI::App* export_dot = app.add_subcommand("export-dot", "emit the Hasse diagram as DOT");
  export_dot->add_option("lattice", lat_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) cmd_check(lat_path);
    if (*decide) cmd_decide(lat_path);
    if (*chi) cmd_chi(lat_path, element);
    if (*represent) cmd_represent(lat_path, fun_path);
    if (*tolerances) cmd_tolerances(lat_path, opt);
    if (*enumerate) cmd_enumerate(enum_n, opt);
    if (*builtin_cmd) cmd_builtin(builtin_name);
    if (*export_dot) cmd_export_dot(lat_path);
  } catch (const latagg::InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const latagg::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const latagg::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}

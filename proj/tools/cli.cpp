#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>

#include "CLI11.hpp"
#include "efglat/bridge.hpp"
#include "efglat/dot.hpp"
#include "efglat/efg.hpp"
#include "efglat/error.hpp"
#include "efglat/io.hpp"
#include "efglat/lattice.hpp"

namespace efglat::cli {

namespace {

constexpr std::size_t kPathSamples = 10;

struct Settings {
  std::size_t max_elements = 20;
  std::size_t max_edges = 24;
  std::uint64_t seed = 1;
  bool quiet = false;
  bool ascii_sink = false;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write " + path);
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ShotSetConflict:
    case Errc::PropViolation:
      return kInternalViolation;
    case Errc::NotDistributive:
    case Errc::NotBijective:
    case Errc::OrderMismatch:
    case Errc::FireableMismatch:
    case Errc::NotAFilter:
      return kNegativeVerdict;
    default:
      return kInputError;
  }
}

BridgeOptions bridge_options(const Settings& s) {
  BridgeOptions o;
  if (s.ascii_sink) o.sink_label = kAsciiSink;
  return o;
}

// Runs the seeded path-independence check and returns the report line, or
// throws ShotSetConflict.
std::string path_report(const ConfigSpace& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (auto bad = check_path_independence(s, kPathSamples, rng))
    throw Error(Errc::ShotSetConflict,
                "random paths to c" + std::to_string(*bad) + " disagree on the fired vertices");
  std::size_t merges = 0;
  for (const auto& in : s.incoming)
    if (in.size() >= 2) ++merges;
  return "path independence: " + std::to_string(merges) +
         (merges == 1 ? " merge configuration, " : " merge configurations, ") +
         std::to_string(kPathSamples) + " sampled paths each, consistent (seed " + std::to_string(seed) +
         ")\n";
}

int poset_filters(const Settings& s, Streams io, const std::string& file) {
  Poset p = parse_poset(read_input(file, io.in));
  auto filters = enumerate_filters(p, FilterOptions{s.max_elements});
  io.out << filters.size() << (filters.size() == 1 ? " filter\n" : " filters\n");
  if (!s.quiet)
    for (const auto& f : filters) io.out << format_subset(p, f) << '\n';
  return kSuccess;
}

int lattice_check(const Settings& s, Streams io, const std::string& file, const std::string& dot) {
  Lattice l = check_lattice(parse_poset(read_input(file, io.in)));
  if (!dot.empty()) write_output(dot, poset_to_dot(l.base()));
  auto j = join_irreducibles(l);
  io.out << "lattice: " << l.size() << (l.size() == 1 ? " element, " : " elements, ") << j.members.size() << " join-irreducibles, "
         << (l.distributive() ? "distributive" : "not distributive") << '\n';
  if (!s.quiet) {
    io.out << "top " << l.base().label(l.top()) << ", bottom " << l.base().label(l.bottom()) << '\n';
    if (!l.distributive()) io.out << "witness: " << describe(l, *l.verdict().witness) << '\n';
  }
  return l.distributive() ? kSuccess : kNegativeVerdict;
}

int lattice_irreducibles(const Settings& s, Streams io, const std::string& file) {
  Lattice l = check_lattice(parse_poset(read_input(file, io.in)));
  auto j = join_irreducibles(l);
  if (!s.quiet) {
    io.out << "# " << j.members.size() << " join-irreducibles of a " << l.size()
           << "-element lattice\n";
    for (std::size_t k = 0; k < j.members.size(); ++k)
      io.out << "# " << l.base().label(j.members[k]) << " covers "
             << l.base().label(j.covered_by[k]) << '\n';
  }
  io.out << emit_poset(induced_order(l));
  return kSuccess;
}

int lattice_to_efg_cmd(const Settings& s, Streams io, const std::string& file,
                       const std::string& output, const std::string& dot) {
  Lattice l = check_lattice(parse_poset(read_input(file, io.in)));
  EfgInstance e = lattice_to_efg(l, bridge_options(s));
  std::string text;
  if (!s.quiet)
    text += "# simple game for a " + std::to_string(l.size()) + "-element distributive lattice\n";
  text += emit_efg(e);
  if (!dot.empty()) write_output(dot, orientation_to_dot(e.graph, e.initial));
  if (output.empty()) {
    io.out << text;
  } else {
    write_output(output, text);
    if (!s.quiet) io.out << "wrote " << output << '\n';
  }
  return kSuccess;
}

int efg_explore(const Settings& s, Streams io, const std::string& file, const std::string& dot) {
  EfgInstance e = parse_efg(read_input(file, io.in));
  ConfigSpace space = explore(e, ExploreOptions{s.max_edges});
  ProppVerdict propp = verify_propp(space);
  if (!dot.empty()) write_output(dot, space_to_dot(space));
  io.out << space.size() << (space.size() == 1 ? " configuration, " : " configurations, ")
         << (space.simple ? "simple" : "not simple") << ", "
         << (propp.holds ? "distributive" : "not distributive") << '\n';
  if (!propp.holds) {
    io.err << "error: " << propp.witness << '\n';
    return kInternalViolation;
  }
  std::string paths = path_report(space, s.seed);
  if (!s.quiet) {
    const FiringGraph& g = space.graph;
    for (std::size_t c = 0; c < space.size(); ++c) {
      std::string fire = "{";
      bool first = true;
      fireable(g, space.configs[c]).for_each([&](std::size_t v) {
        if (!first) fire += ',';
        first = false;
        fire += g.vertices[v];
      });
      io.out << 'c' << c << " shots " << format_shots(g, space.shots[c]) << " fireable " << fire
             << "}\n";
    }
    for (const auto& f : space.successors)
      io.out << 'c' << f.from << " -" << g.vertices[f.vertex] << "-> c" << f.to << '\n';
    io.out << paths;
  }
  return kSuccess;
}

int efg_simplify(const Settings& s, Streams io, const std::string& file, const std::string& output) {
  EfgInstance e = parse_efg(read_input(file, io.in));
  Simplification result = simplify_efg(e, ExploreOptions{s.max_edges}, bridge_options(s));
  std::string text;
  if (!s.quiet)
    text += "# simple game with " + std::to_string(result.space.size()) +
            " configurations, isomorphic to the input game\n";
  text += emit_efg(result.game);
  if (output.empty()) {
    io.out << text;
  } else {
    write_output(output, text);
    if (!s.quiet) io.out << "wrote " << output << '\n';
  }
  return kSuccess;
}

int efg_verify(const Settings& s, Streams io, const std::string& lattice_file,
               const std::string& efg_file) {
  Lattice l = check_lattice(parse_poset(read_input(lattice_file, io.in)));
  if (!l.distributive()) throw Error(Errc::NotDistributive, describe(l, *l.verdict().witness));
  ConfigSpace space = explore(parse_efg(read_input(efg_file, io.in)), ExploreOptions{s.max_edges});
  IsoCertificate cert = verify_isomorphism(l, space);
  io.out << "isomorphism certified: " << space.size() << " configurations, " << l.size()
         << " lattice elements, " << cert.irreducibles.size() << " join-irreducibles\n";
  if (!s.quiet) {
    for (std::size_t c = 0; c < space.size(); ++c)
      io.out << 'c' << c << ' ' << format_subset(cert.irreducibles, cert.config_to_filter[c])
             << " -> " << l.base().label(cert.composed[c]) << '\n';
  }
  return kSuccess;
}

int propp_check(const Settings& s, Streams io, const std::string& file) {
  ConfigSpace space = explore(parse_efg(read_input(file, io.in)), ExploreOptions{s.max_edges});
  ProppVerdict propp = verify_propp(space);
  if (!propp.holds) throw Error(Errc::PropViolation, propp.witness);
  io.out << "propp: " << space.size()
         << " configurations form a distributive lattice with the initial configuration on top\n";
  std::string paths = path_report(space, s.seed);
  if (!s.quiet) io.out << paths;
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Settings settings;
  Streams io{in, out, err};

  CLI::App app{"Distributive lattices and edge firing games", "efglat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--max-elements", settings.max_elements, "Filter enumeration cap")
      ->capture_default_str();
  app.add_option("--max-edges", settings.max_edges, "Exploration edge cap")->capture_default_str();
  app.add_option("--seed", settings.seed, "Seed for sampled path checks")->capture_default_str();
  app.add_flag("--quiet,-q", settings.quiet, "Summary lines only");
  app.add_flag("--ascii-sink", settings.ascii_sink, "Name constructed sinks _bot instead of ⊥");

  std::function<int()> action;
  std::string file, second, output, dot;

  auto* poset = app.add_subcommand("poset", "Poset queries");
  poset->require_subcommand(1);
  auto* filters = poset->add_subcommand("filters", "List the filters of a poset");
  filters->add_option("FILE", file)->required();
  filters->callback([&] { action = [&] { return poset_filters(settings, io, file); }; });

  auto* lattice = app.add_subcommand("lattice", "Lattice queries");
  lattice->require_subcommand(1);
  auto* check = lattice->add_subcommand("check", "Check lattice axioms and distributivity");
  check->add_option("FILE", file)->required();
  check->add_option("--dot", dot, "Write the Hasse diagram");
  check->callback([&] { action = [&] { return lattice_check(settings, io, file, dot); }; });
  auto* irr = lattice->add_subcommand("irreducibles", "Join-irreducibles and their order");
  irr->add_option("FILE", file)->required();
  irr->callback([&] { action = [&] { return lattice_irreducibles(settings, io, file); }; });
  auto* to_efg = lattice->add_subcommand("to-efg", "Build a simple game for a distributive lattice");
  to_efg->add_option("FILE", file)->required();
  to_efg->add_option("-o,--output", output, "Write the game here instead of stdout");
  to_efg->add_option("--dot", dot, "Write the initial orientation");
  to_efg->callback(
      [&] { action = [&] { return lattice_to_efg_cmd(settings, io, file, output, dot); }; });

  auto* efg = app.add_subcommand("efg", "Edge firing games");
  efg->require_subcommand(1);
  auto* expl = efg->add_subcommand("explore", "Enumerate the configuration space");
  expl->add_option("FILE", file)->required();
  expl->add_option("--dot", dot, "Write the configuration space");
  expl->callback([&] { action = [&] { return efg_explore(settings, io, file, dot); }; });
  auto* simp = efg->add_subcommand("simplify", "Rebuild a game as a simple one");
  simp->add_option("FILE", file)->required();
  simp->add_option("-o,--output", output, "Write the game here instead of stdout");
  simp->callback([&] { action = [&] { return efg_simplify(settings, io, file, output); }; });
  auto* ver = efg->add_subcommand("verify", "Certify a game against a lattice");
  ver->add_option("LATTICE_FILE", file)->required();
  ver->add_option("EFG_FILE", second)->required();
  ver->callback([&] { action = [&] { return efg_verify(settings, io, file, second); }; });

  auto* propp = app.add_subcommand("propp-check", "Check that a game's space is a distributive lattice");
  propp->add_option("FILE", file)->required();
  propp->callback([&] { action = [&] { return propp_check(settings, io, file); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  if (!action) {
    err << "error: no command given\n";
    return kInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace efglat::cli

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <queue>
#include <sstream>
#include <string>

#include "efglat/bridge.hpp"
#include "efglat/error.hpp"
#include "efglat/io.hpp"
#include "efglat/isomorphism.hpp"
#include "support/cli_harness.hpp"
#include "support/generators.hpp"

using namespace efglat;
using efglat::testing::Rng;

namespace {

constexpr std::uint64_t kLatticeSeed = 2024;
constexpr std::uint64_t kGameSeed = 7;
constexpr std::size_t kRandomLattices = 200;
constexpr int kRandomGames = 250;
constexpr std::size_t kPathSamples = 10;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
};

// Shared across criteria 1, 3 and 4.
struct Tally {
  std::size_t explorations = 0;
  std::size_t conflicts = 0;
  std::size_t merge_configs = 0;
  std::size_t bad_paths = 0;
};

Tally g_tally;

std::optional<ConfigSpace> explore_counted(const EfgInstance& e, Verdict& v, const std::string& name,
                                           const ExploreOptions& options = {}) {
  ++g_tally.explorations;
  try {
    return explore(e, options);
  } catch (const Error& err) {
    if (err.code() == Errc::ShotSetConflict) ++g_tally.conflicts;
    v.fail(name + ": " + err.what());
    return std::nullopt;
  }
}

void sample_paths(const ConfigSpace& s, Rng& rng, Verdict& v, const std::string& name) {
  for (const auto& in : s.incoming)
    if (in.size() >= 2) ++g_tally.merge_configs;
  if (auto bad = check_path_independence(s, kPathSamples, rng)) {
    ++g_tally.bad_paths;
    v.fail(name + ": sampled paths to c" + std::to_string(*bad) + " disagree");
  }
}

std::vector<efglat::testing::NamedLattice> lattice_corpus() {
  Rng rng(kLatticeSeed);
  return efglat::testing::distributive_corpus(rng, kRandomLattices);
}

std::vector<EfgInstance> game_corpus() {
  Rng rng(kGameSeed);
  std::vector<EfgInstance> out;
  for (int i = 0; i < kRandomGames; ++i) out.push_back(efglat::testing::random_efg(rng, 2, 6, 9));
  return out;
}

Verdict lattice_round_trip() {
  Verdict v;
  Rng rng(11);
  auto corpus = lattice_corpus();
  std::size_t largest = 0;
  for (const auto& [name, l] : corpus) {
    largest = std::max(largest, l.size());
    EfgInstance game;
    try {
      game = lattice_to_efg(l);
    } catch (const Error& e) {
      v.fail(name + ": " + e.what());
      continue;
    }
    auto s = explore_counted(game, v, name, ExploreOptions{64});
    if (!s) continue;
    if (!is_simple(*s)) v.fail(name + ": game is not simple");
    try {
      verify_isomorphism(l, *s);
    } catch (const Error& e) {
      v.fail(name + ": " + e.what());
    }
    sample_paths(*s, rng, v, name);
  }
  if (corpus.size() < 200) v.fail("corpus has only " + std::to_string(corpus.size()) + " lattices");
  v.detail = std::to_string(corpus.size()) + " distributive lattices up to " + std::to_string(largest) +
             " elements certified, all simple";
  return v;
}

Verdict birkhoff_round_trips() {
  Verdict v;
  Rng rng(kLatticeSeed + 1);
  std::size_t posets = 0;
  for (std::size_t i = 0; i < kRandomLattices; ++i) {
    std::size_t n = efglat::testing::uniform(rng, 0, 6);
    double density = std::uniform_real_distribution<double>(0.0, 0.7)(rng);
    Poset p = efglat::testing::random_poset(rng, n, density);
    if (!poset_isomorphic(induced_order(filter_lattice(p)), p))
      v.fail("poset " + emit_poset(p) + " does not come back");
    ++posets;
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Poset& p : {chain_poset(n), antichain_poset(n)}) {
      if (!poset_isomorphic(induced_order(filter_lattice(p)), p)) v.fail("chain or antichain of " + std::to_string(n));
      ++posets;
    }
  }

  auto corpus = lattice_corpus();
  for (const auto& [name, l] : corpus)
    if (!poset_isomorphic(filter_lattice(induced_order(l)).base(), l.base())) v.fail(name + " does not come back");

  std::size_t gated = 0;
  for (const auto& [name, l] : {std::pair{"M3", efglat::testing::m3_lattice()},
                                std::pair{"N5", efglat::testing::n5_lattice()}}) {
    try {
      lattice_to_efg(l);
      v.fail(std::string(name) + " passed the distributivity gate");
    } catch (const Error& e) {
      if (e.code() == Errc::NotDistributive)
        ++gated;
      else
        v.fail(std::string(name) + ": " + e.what());
    }
    if (poset_isomorphic(filter_lattice(induced_order(l)).base(), l.base()))
      v.fail(std::string(name) + " survived the round trip");
  }
  v.detail = std::to_string(posets) + " posets and " + std::to_string(corpus.size()) +
             " lattices round trip; M3 and N5 stopped as not distributive (" + std::to_string(gated) + "/2)";
  return v;
}

bool successor_dag_acyclic(const ConfigSpace& s) {
  std::vector<std::size_t> indegree(s.size(), 0);
  for (const auto& f : s.successors) ++indegree[f.to];
  std::queue<std::size_t> ready;
  for (std::size_t c = 0; c < s.size(); ++c)
    if (indegree[c] == 0) ready.push(c);
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t c = ready.front();
    ready.pop();
    ++seen;
    for (auto k : s.outgoing[c])
      if (--indegree[s.successors[k].to] == 0) ready.push(s.successors[k].to);
  }
  return seen == s.size();
}

Verdict propp_property() {
  Verdict v;
  Rng rng(13);
  auto games = game_corpus();
  std::size_t configs = 0, largest = 0;
  for (std::size_t i = 0; i < games.size(); ++i) {
    const std::string name = "game #" + std::to_string(i);
    auto s = explore_counted(games[i], v, name);
    if (!s) continue;
    configs += s->size();
    largest = std::max(largest, s->size());
    if (!successor_dag_acyclic(*s)) {
      v.fail(name + ": successor graph has a cycle");
      continue;
    }
    auto verdict = verify_propp(*s);
    if (!verdict.holds) v.fail(name + ": " + verdict.witness);
    if (maximal_elements(space_order(*s)).members() != std::vector<std::size_t>{0})
      v.fail(name + ": initial config is not the unique maximum");
    sample_paths(*s, rng, v, name);
  }
  v.detail = std::to_string(games.size()) + " random games, " + std::to_string(configs) +
             " configurations in total, largest space " + std::to_string(largest);
  return v;
}

Verdict path_independence() {
  Verdict v;
  if (g_tally.conflicts != 0) v.fail(std::to_string(g_tally.conflicts) + " explorations hit ShotSetConflict");
  if (g_tally.bad_paths != 0) v.fail(std::to_string(g_tally.bad_paths) + " spaces had disagreeing paths");
  if (g_tally.explorations == 0) v.fail("criteria 1 and 3 explored nothing");
  v.detail = std::to_string(g_tally.explorations) + " explorations without shot conflicts, " +
             std::to_string(g_tally.merge_configs) + " merge configurations with " +
             std::to_string(kPathSamples) + " sampled paths each";
  return v;
}

Verdict simplification() {
  Verdict v;
  auto games = game_corpus();
  std::size_t changed = 0;
  for (std::size_t i = 0; i < games.size(); ++i) {
    const std::string name = "game #" + std::to_string(i);
    try {
      ConfigSpace original = explore(games[i]);
      Simplification once = simplify_efg(games[i]);
      if (!is_simple(once.space)) v.fail(name + ": simplified game is not simple");
      Poset before = space_order(original);
      Poset after = space_order(once.space);
      if (!poset_isomorphic(after, before)) v.fail(name + ": simplified space differs");
      if (!is_order_isomorphism(after, before, once.certificate.composed))
        v.fail(name + ": certificate is not an order isomorphism");
      Simplification twice = simplify_efg(once.game);
      if (!poset_isomorphic(space_order(twice.space), after)) v.fail(name + ": second pass changes the space");
      if (!is_simple(original)) ++changed;
    } catch (const Error& e) {
      v.fail(name + ": " + e.what());
    }
  }
  v.detail = std::to_string(games.size()) + " games simplified twice, " + std::to_string(changed) +
             " of them not simple to begin with";
  return v;
}

Verdict counting_identities() {
  Verdict v;
  for (std::size_t k = 1; k <= 10; ++k) {
    Lattice l = filter_lattice(antichain_poset(k));
    if (induced_order(l).covers().size() != 0 || induced_order(l).size() != k) {
      v.fail("B" + std::to_string(k) + ": irreducibles are not an antichain of " + std::to_string(k));
      continue;
    }
    ConfigSpace s = explore(lattice_to_efg(l));
    if (s.size() != (std::size_t{1} << k)) {
      v.fail("B" + std::to_string(k) + ": " + std::to_string(s.size()) + " configurations");
      continue;
    }
    for (std::size_t c = 0; c < s.size(); ++c) {
      std::size_t shots = 0;
      for (auto x : s.shots[c]) shots += x;
      if (s.incoming[c].size() != shots) {
        v.fail("B" + std::to_string(k) + ": c" + std::to_string(c) + " has " +
               std::to_string(s.incoming[c].size()) + " predecessors for " + std::to_string(shots) + " shots");
        break;
      }
    }
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    Lattice l = check_lattice(chain_poset(n + 1));
    ConfigSpace s = explore(lattice_to_efg(l));
    bool chain = s.size() == n + 1 && s.successors.size() == n;
    for (std::size_t c = 0; c < s.size() && chain; ++c) chain = s.outgoing[c].size() <= 1;
    if (!chain || !poset_isomorphic(space_order(s), chain_poset(n + 1)))
      v.fail("chain of " + std::to_string(n) + " irreducibles: " + std::to_string(s.size()) + " configurations");
  }
  v.detail = "antichains k=1..10 give 2^k configurations with Boolean covers; chains n=1..10 give n+1";
  return v;
}

Verdict cli_and_formats() {
  using namespace efglat::testing;
  Verdict v;
  auto cases = golden_cases();
  for (const auto& c : cases) {
    std::string first = transcript(run(c.args, c.input));
    std::string second = transcript(run(c.args, c.input));
    fs::path path = fs::path(kGolden) / (c.name + ".txt");
    if (!fs::exists(path))
      v.fail(c.name + ": golden file missing");
    else if (first != slurp(path))
      v.fail(c.name + ": output differs from golden file");
    if (first != second) v.fail(c.name + ": output differs between runs");
  }

  Rng rng(17);
  std::vector<std::string> seeds;
  for (const char* f : {"v.poset", "grid2x3.poset", "b2.poset", "m3.poset", "single.poset", "kite.efg", "star.efg",
                        "triangle.efg", "path.efg", "single.efg"})
    seeds.push_back(read_fixture(f));
  const std::string alphabet = "abs0 <->:\n\r\t#\x01\x7f\xE2\x8A\xA5pefgolt";
  constexpr std::size_t kInputs = 100000;
  std::size_t accepted = 0, rejected = 0;
  for (std::size_t round = 0; round < kInputs; ++round) {
    std::string doc;
    if (round % 10 == 9) {
      std::size_t len = efglat::testing::uniform(rng, 0, 80);
      for (std::size_t k = 0; k < len; ++k) doc += alphabet[efglat::testing::uniform(rng, 0, alphabet.size() - 1)];
    } else {
      doc = seeds[efglat::testing::uniform(rng, 0, seeds.size() - 1)];
      std::size_t edits = efglat::testing::uniform(rng, 1, 6);
      for (std::size_t k = 0; k < edits; ++k) {
        std::size_t at = efglat::testing::uniform(rng, 0, doc.size());
        char ch = alphabet[efglat::testing::uniform(rng, 0, alphabet.size() - 1)];
        switch (efglat::testing::uniform(rng, 0, 3)) {
          case 0: doc.insert(doc.begin() + static_cast<std::ptrdiff_t>(at), ch); break;
          case 1: if (at < doc.size()) doc.erase(at, 1); break;
          case 2: if (at < doc.size()) doc[at] = ch; break;
          default: doc.insert(at, doc.substr(at / 2, 8));
        }
      }
    }
    try {
      if (round % 2 == 0) {
        Poset p = parse_poset(doc);
        if (!(parse_poset(emit_poset(p)) == p)) v.fail("poset did not survive emit and parse");
      } else {
        EfgInstance e = parse_efg(doc);
        if (!(parse_efg(emit_efg(e)) == e)) v.fail("game did not survive emit and parse");
      }
      ++accepted;
    } catch (const Error&) {
      ++rejected;
    } catch (const std::exception& e) {
      v.fail(std::string("uncontrolled ") + typeid(e).name() + ": " + e.what());
    }
  }
  v.detail = std::to_string(cases.size()) + " golden transcripts stable, " + std::to_string(kInputs) +
             " fuzzed documents (" + std::to_string(accepted) + " accepted, " + std::to_string(rejected) +
             " rejected with library errors)";
  return v;
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "distributive lattice to simple game round trip", 60, lattice_round_trip},
      {2, "Birkhoff round trips", 30, birkhoff_round_trips},
      {3, "every game space is a distributive lattice", 120, propp_property},
      {4, "shot sets are path independent", 0, path_independence},
      {5, "simplification keeps the space", 120, simplification},
      {6, "counting identities", 30, counting_identities},
      {7, "command line and document formats", 60, cli_and_formats},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("unexpected exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds)
      v.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << ": " << v.detail
              << " [" << timing << "]\n";
    for (const auto& f : v.failures) std::cout << "    " << f << '\n';
    if (!v.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}

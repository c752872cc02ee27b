#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "efglat/bridge.hpp"
#include "efglat/dot.hpp"
#include "efglat/error.hpp"
#include "efglat/io.hpp"
#include "support/generators.hpp"

using namespace efglat;
using efglat::testing::Rng;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(EFGLAT_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<Errc, std::string> failure_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  ADD_FAILURE() << "no error raised";
  return {Errc::SyntaxError, ""};
}

Errc error_of(auto&& fn) { return failure_of(fn).first; }

}  // namespace

TEST(ParsePoset, Fixtures) {
  Poset v = parse_poset(fixture("v.poset"));
  EXPECT_EQ(v, efglat::testing::v_poset());
  Poset grid = parse_poset(fixture("grid2x3.poset"));
  EXPECT_EQ(grid.size(), 6u);
  EXPECT_EQ(grid.covers().size(), 7u);
  EXPECT_EQ(parse_poset(fixture("single.poset")).labels(), (std::vector<std::string>{"a"}));
}

TEST(ParsePoset, ToleratesCommentsBlankLinesAndSpacing) {
  Poset p = parse_poset("# leading comment\n\n  poset  \n\telements:  a   b\n# middle\ncovers: a<b   \n\n");
  EXPECT_EQ(p, build_poset({"a", "b"}, std::vector<CoverPair>{{0, 1}}));
  EXPECT_EQ(parse_poset("poset\r\nelements: a b\r\ncovers: a<b\r\n"), p);
}

TEST(ParsePoset, SyntaxErrorsCarryPositions) {
  auto [code, what] = failure_of([] { parse_poset("poset\nelements: a b\ncovers: a<\n"); });
  EXPECT_EQ(code, Errc::SyntaxError);
  EXPECT_NE(what.find("line 3, column 11"), std::string::npos) << what;

  std::tie(code, what) = failure_of([] { parse_poset("posets\nelements: a\ncovers:\n"); });
  EXPECT_NE(what.find("line 1, column 1"), std::string::npos) << what;

  std::tie(code, what) = failure_of([] { parse_poset("poset\nelements: a b-c\ncovers:\n"); });
  EXPECT_NE(what.find("line 2, column 14"), std::string::npos) << what;

  std::tie(code, what) = failure_of([] { parse_poset("poset\ncovers: a<b\nelements: a b\n"); });
  EXPECT_NE(what.find("line 2, column 1"), std::string::npos) << what;

  std::tie(code, what) = failure_of([] { parse_poset("poset\nelements: a\ncovers:\nextra\n"); });
  EXPECT_NE(what.find("line 4"), std::string::npos) << what;

  EXPECT_EQ(error_of([] { parse_poset(""); }), Errc::SyntaxError);
  EXPECT_EQ(error_of([] { parse_poset("poset\nelements: a\n"); }), Errc::SyntaxError);
  EXPECT_EQ(error_of([] { parse_poset("poset\nelements: a b\ncovers: ab\n"); }), Errc::SyntaxError);
}

TEST(ParsePoset, SemanticErrors) {
  EXPECT_EQ(error_of([] { parse_poset("poset\nelements: a a\ncovers:\n"); }), Errc::DuplicateLabel);
  EXPECT_EQ(error_of([] { parse_poset("poset\nelements: a\ncovers: a<b\n"); }), Errc::UnknownLabel);
  EXPECT_EQ(error_of([] { parse_poset("poset\nelements: a b\ncovers: a<b b<a\n"); }),
            Errc::CycleDetected);
  EXPECT_EQ(error_of([] { parse_poset("poset\nelements: a\ncovers: a<a\n"); }), Errc::SelfCover);
}

TEST(EmitPoset, Examples) {
  EXPECT_EQ(emit_poset(efglat::testing::v_poset()), "poset\nelements: a b c\ncovers: a<c b<c\n");
  EXPECT_EQ(emit_poset(build_poset({"a"}, std::vector<CoverPair>{})), "poset\nelements: a\ncovers:\n");
  EXPECT_EQ(emit_poset(build_poset({}, std::vector<CoverPair>{})), "poset\nelements:\ncovers:\n");
  EXPECT_EQ(error_of([] { emit_poset(build_poset({"a<b"}, std::vector<CoverPair>{})); }),
            Errc::InvalidLabel);
}

TEST(ParseEfg, Fixtures) {
  EXPECT_EQ(parse_efg(fixture("star.efg")), efglat::testing::star_efg());
  EXPECT_EQ(parse_efg(fixture("path.efg")), efglat::testing::path_efg());
  EXPECT_EQ(parse_efg(fixture("triangle.efg")), efglat::testing::triangle_efg());
  EXPECT_EQ(parse_efg(fixture("kite.efg")), efglat::testing::kite_efg());
  EXPECT_EQ(parse_efg(fixture("single.efg")), efglat::testing::single_vertex_efg());
}

TEST(ParseEfg, OrientationIsRelativeToEdgeListing) {
  EfgInstance e = parse_efg("efg\nvertices: a s\nsink: s\nedges: a-s\norientation: s->a\n");
  EXPECT_EQ(e.graph.edges, (std::vector<Edge>{{0, 1}}));
  EXPECT_TRUE(e.initial.reversed.test(0));
  // Orientation tokens may come in any order.
  EfgInstance f = parse_efg(
      "efg\nvertices: a b s\nsink: s\nedges: s-a s-b\norientation: s->b s->a\n");
  EXPECT_EQ(f, efglat::testing::star_efg());
}

TEST(ParseEfg, Errors) {
  const std::string head = "efg\nvertices: a b s\nsink: s\n";
  EXPECT_EQ(error_of([&] { parse_efg(head + "edges: a-x\norientation: a->x\n"); }), Errc::UnknownLabel);
  EXPECT_EQ(error_of([&] { parse_efg("efg\nvertices: a s\nsink: q\nedges: a-s\norientation: a->s\n"); }),
            Errc::BadSink);
  EXPECT_EQ(error_of([&] { parse_efg(head + "edges: a-a\norientation: a->a\n"); }), Errc::SelfLoop);
  EXPECT_EQ(error_of([&] { parse_efg(head + "edges: a-s s-a b-s\norientation: a->s s->a b->s\n"); }),
            Errc::DuplicateEdge);
  EXPECT_EQ(error_of([&] { parse_efg(head + "edges: a-s b-s\norientation: a->s\n"); }),
            Errc::OrientationMismatch);
  EXPECT_EQ(error_of([&] { parse_efg(head + "edges: a-s b-s\norientation: a->s b->s a->b\n"); }),
            Errc::OrientationMismatch);
  EXPECT_EQ(error_of([&] { parse_efg(head + "edges: a-s b-s\norientation: a->s s->a b->s\n"); }),
            Errc::OrientationMismatch);
  EXPECT_EQ(error_of([&] { parse_efg(head + "edges: a-s\norientation: a->s\n"); }), Errc::Disconnected);
  EXPECT_EQ(error_of([&] { parse_efg("efg\nvertices: a a\nsink: a\nedges:\norientation:\n"); }),
            Errc::DuplicateLabel);
  EXPECT_EQ(error_of([&] { parse_efg(head + "edges: a-s b-s\norientation: a-s b->s\n"); }),
            Errc::SyntaxError);
  EXPECT_EQ(error_of([&] { parse_efg("efg\nvertices: a s\nsink: a s\nedges: a-s\norientation: a->s\n"); }),
            Errc::SyntaxError);
  EXPECT_EQ(error_of([&] { parse_efg("efg\nvertices: a s\nsink:\nedges: a-s\norientation: a->s\n"); }),
            Errc::SyntaxError);
}

TEST(EmitEfg, Examples) {
  EXPECT_EQ(emit_efg(efglat::testing::single_vertex_efg()), "efg\nvertices: s\nsink: s\nedges:\norientation:\n");
  EXPECT_EQ(emit_efg(efglat::testing::kite_efg()), fixture("kite.efg"));
  EXPECT_EQ(emit_efg(efglat::testing::star_efg()),
            "efg\nvertices: a b s\nsink: s\nedges: s-a s-b\norientation: s->a s->b\n");
  auto bad = efglat::testing::star_efg();
  bad.graph.sink = 9;
  EXPECT_EQ(error_of([&] { emit_efg(bad); }), Errc::BadSink);
}

TEST(RoundTrip, PosetDocuments) {
  Rng rng(61);
  for (int round = 0; round < 200; ++round) {
    Poset p = efglat::testing::random_poset(rng, efglat::testing::uniform(rng, 0, 12), 0.3);
    std::string text = emit_poset(p);
    Poset back = parse_poset(text);
    EXPECT_EQ(back, p);
    EXPECT_EQ(emit_poset(back), text);
  }
}

TEST(RoundTrip, EfgDocuments) {
  Rng rng(62);
  for (int round = 0; round < 200; ++round) {
    EfgInstance e = efglat::testing::random_efg(rng, 1, 8, 14);
    std::string text = emit_efg(e);
    EfgInstance back = parse_efg(text);
    EXPECT_EQ(back, e);
    EXPECT_EQ(emit_efg(back), text);
  }
}

TEST(RoundTrip, BridgeOutputUsesUnicodeSink) {
  EfgInstance e = lattice_to_efg(check_lattice(chain_poset(3)));
  std::string text = emit_efg(e);
  EXPECT_NE(text.find("sink: \xE2\x8A\xA5\n"), std::string::npos);
  EXPECT_EQ(parse_efg(text), e);
}

TEST(Fuzz, MutatedDocumentsOnlyRaiseLibraryErrors) {
  Rng rng(63);
  const std::vector<std::string> seeds = {fixture("v.poset"), fixture("grid2x3.poset"), fixture("kite.efg"),
                                          fixture("star.efg"), fixture("single.efg")};
  const std::string alphabet = "ab s<->:\n#\t\x01\xE2";
  int accepted = 0;
  for (int round = 0; round < 5000; ++round) {
    std::string doc = seeds[efglat::testing::uniform(rng, 0, seeds.size() - 1)];
    std::size_t edits = efglat::testing::uniform(rng, 1, 4);
    for (std::size_t k = 0; k < edits; ++k) {
      std::size_t at = efglat::testing::uniform(rng, 0, doc.size());
      switch (efglat::testing::uniform(rng, 0, 2)) {
        case 0:
          doc.insert(doc.begin() + static_cast<std::ptrdiff_t>(at),
                     alphabet[efglat::testing::uniform(rng, 0, alphabet.size() - 1)]);
          break;
        case 1:
          if (at < doc.size()) doc.erase(at, 1);
          break;
        default:
          if (at < doc.size()) doc[at] = alphabet[efglat::testing::uniform(rng, 0, alphabet.size() - 1)];
      }
    }
    try {
      if (doc.find("efg") != std::string::npos) {
        EfgInstance e = parse_efg(doc);
        EXPECT_EQ(parse_efg(emit_efg(e)), e);
      } else {
        Poset p = parse_poset(doc);
        EXPECT_EQ(parse_poset(emit_poset(p)), p);
      }
      ++accepted;
    } catch (const Error&) {
    }
  }
  EXPECT_GT(accepted, 0);
}

TEST(Dot, PosetDiagram) {
  std::string dot = poset_to_dot(efglat::testing::v_poset());
  EXPECT_EQ(dot.rfind("digraph poset {", 0), 0u);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n2"), std::string::npos);
  EXPECT_NE(dot.find("n1 -> n2"), std::string::npos);
  EXPECT_EQ(dot, poset_to_dot(efglat::testing::v_poset()));
}

TEST(Dot, SpaceAndOrientation) {
  ConfigSpace s = explore(efglat::testing::star_efg());
  std::string dot = space_to_dot(s);
  EXPECT_EQ(dot.rfind("digraph configurations {", 0), 0u);
  EXPECT_NE(dot.find("c0\\n{}"), std::string::npos);
  EXPECT_NE(dot.find("c3\\n{a,b}"), std::string::npos);

  auto e = efglat::testing::star_efg();
  std::string o = orientation_to_dot(e.graph, e.initial);
  EXPECT_EQ(o.rfind("digraph orientation {", 0), 0u);
  EXPECT_NE(o.find("shape=square"), std::string::npos);
}

TEST(Dot, QuotesAwkwardLabels) {
  std::string dot = poset_to_dot(build_poset({"a\"b", "c\\d"}, std::vector<CoverPair>{{0, 1}}));
  EXPECT_NE(dot.find("a\\\"b"), std::string::npos) << dot;
  EXPECT_NE(dot.find("c\\\\d"), std::string::npos) << dot;
}

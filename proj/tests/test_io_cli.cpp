#include <gtest/gtest.h>

#include <filesystem>

#include "cli.hpp"
#include "matroid/io.hpp"
#include "matroid/named.hpp"

using namespace matroid;

namespace {

const std::string kFixtures = FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("matroid_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_input("matroid\nn 3\nc 0 1\nc 0 2\nc 1 2").to_matroid(), uniform(1, 3));
  const Matroid two = parse_input("graph\nvertices 2\nedge 0 1\nedge 0 1").to_matroid();
  EXPECT_EQ(two.circuits().members(), std::vector{Subset::of({0, 1})});
  try {
    parse_input("matroid\nn 3\nc 0 1\nc 0 1 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("antichain"), std::string::npos);
  }
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_input(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("matroids\nn 2"), 1);
  EXPECT_EQ(line_of("# c\nmatroid\nn 3\n\nc 0 3"), 5);
  EXPECT_EQ(line_of("gf2\nrows 2\ncols 3\nrow 1 0\nrow 0 1 1"), 4);
  EXPECT_EQ(line_of("gf2\nrows 1\ncols 2\nrow 1 2"), 4);
  EXPECT_EQ(line_of("graph\nvertices 2\nedge 0 2"), 3);
  EXPECT_EQ(line_of("matroid\nn 2\nc 0 1\ntag e 5"), 4);
  EXPECT_EQ(line_of("matroid\nn x"), 2);
  EXPECT_GT(line_of("matroid\nn 3\nc 0 1\nc 0 2"), 0);  // elimination fails
  EXPECT_THROW(parse_input(""), ParseError);
}

TEST(Parse, CommentsAndTags) {
  const auto doc = parse_input("# head\nmatroid # kind\nn 2 # size\nc 0 1\ntag e 1\n");
  EXPECT_EQ(doc.tags.at("e"), 1);
  EXPECT_EQ(doc.to_matroid(), uniform(1, 2));
}

TEST(Parse, ClutterWithoutMatroidRequirement) {
  const auto doc = parse_input("matroid\nn 4\nc 1 2\nc 1 3", false);
  EXPECT_FALSE(doc.matroid.has_value());
  EXPECT_EQ(doc.family->size(), 2u);
  EXPECT_THROW(doc.to_matroid(), InvalidMatroid);
}

TEST(RoundTrip, RegistryMatroids) {
  for (const auto& id : registry_ids()) {
    const auto nm = named(id);
    std::map<std::string, int> tags;
    if (nm.tag_e) tags["e"] = *nm.tag_e;
    const std::string text = emit_matroid(nm.matroid, tags);
    const auto doc = parse_input(text);
    EXPECT_EQ(doc.to_matroid(), nm.matroid) << id;
    EXPECT_EQ(doc.tags, tags) << id;
    EXPECT_EQ(emit_matroid(doc.to_matroid(), doc.tags), text) << id;
    EXPECT_EQ(decode_instance(encode_instance(nm.matroid)), nm.matroid) << id;
  }
}

TEST(RoundTrip, Graph) {
  const Multigraph g(3, {{0, 1}, {1, 2}, {2, 2}});
  const auto doc = parse_input(emit_graph(g));
  EXPECT_EQ(doc.graph->edges, g.edges);
  EXPECT_EQ(doc.to_matroid(), cycle_matroid(g));
}

TEST(Cli, CheckSsceOnN5FailsWithNamedWitness) {
  const auto r = run_cli({"check", "--property", "ssce", fixture("n5.matroid")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("verdict fail"), std::string::npos);
  // C1 = {e1,f2,e} = {0,2,4}, C2 = {e2,f1,e} = {1,2,3}
  EXPECT_NE(r.out.find("C1={1,2,3} C2={0,2,4}"), std::string::npos) << r.out;
}

TEST(Cli, CheckPropertiesExitCodes) {
  EXPECT_EQ(run_cli({"check", "--property", "ssce", fixture("k4.graph")}).code, 0);
  EXPECT_EQ(run_cli({"check", "--property", "skew", fixture("n5.matroid")}).code, 0);
  EXPECT_EQ(run_cli({"check", "--property", "skew", fixture("k4.graph")}).code, 1);
  EXPECT_EQ(run_cli({"check", "--property", "k-skew:3", fixture("n5.matroid")}).code, 1);
  EXPECT_EQ(run_cli({"check", "--property", "unbreakable", fixture("k4.graph")}).code, 0);
  EXPECT_EQ(run_cli({"check", "--property", "circuit-difference", fixture("n5.matroid")}).code, 1);
  EXPECT_EQ(run_cli({"check", "--property", "binary", fixture("u24.matroid")}).code, 1);
  EXPECT_EQ(run_cli({"check", "--property", "binary", fixture("parallel.gf2")}).code, 0);
  EXPECT_EQ(run_cli({"check", "--property", "k-skew:x", fixture("n5.matroid")}).code, 2);
  EXPECT_EQ(run_cli({"check", "--property", "planar", fixture("n5.matroid")}).code, 2);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli({"info", fixture("not_antichain.matroid")}).code, 2);
  EXPECT_EQ(run_cli({"info", fixture("out_of_range.matroid")}).code, 2);
  EXPECT_EQ(run_cli({"info", fixture("malformed.gf2")}).code, 2);
  EXPECT_EQ(run_cli({"info", fixture("missing.matroid")}).code, 2);
  EXPECT_EQ(run_cli({"info", fixture("two_pairs.clutter")}).code, 2);
  const auto r = run_cli({"info", fixture("not_antichain.matroid")});
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"check", fixture("n5.matroid")}).code, 2);
  EXPECT_EQ(run_cli({"verify", "theorem9"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "axiom", "--clutter-n", "6"}).code, 2);
  EXPECT_EQ(run_cli({"named", "Q:1"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, Info) {
  const auto r = run_cli({"info", fixture("n5.matroid")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n 5\nrank 2\nconnected true\ncircuits 6\nseries_classes {0}{1}{2}{3}{4}\nbinary true\n");
}

TEST(Cli, Axiom) {
  EXPECT_EQ(run_cli({"axiom", "--system", "c3pp", fixture("two_pairs.clutter")}).code, 1);
  EXPECT_EQ(run_cli({"axiom", "--system", "c3", fixture("two_pairs.clutter")}).code, 1);
  EXPECT_EQ(run_cli({"axiom", "--system", "c3pp-unique", fixture("n5.matroid")}).code, 0);
  EXPECT_EQ(run_cli({"axiom", "--system", "c3s", fixture("k4.graph")}).code, 0);
  EXPECT_EQ(run_cli({"axiom", "--system", "c9", fixture("k4.graph")}).code, 2);
  const auto dir = temp_dir("axiom");
  ASSERT_EQ(run_cli({"named", "K23", "--out", (dir / "k23.matroid").string()}).code, 0);
  EXPECT_EQ(run_cli({"axiom", "--system", "c3pp-weak", (dir / "k23.matroid").string()}).code, 1);
}

TEST(Cli, VerifyAxiomPrintsTwoEqualCounts) {
  const auto r = run_cli({"verify", "axiom", "--clutter-n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("c3pp_count 68\naugmentation_count 68\n"), std::string::npos) << r.out;
}

TEST(Cli, MinorSeriesL1N5) {
  const auto dir = temp_dir("minor");
  const auto l1 = (dir / "L1.matroid").string(), n5 = (dir / "N5.matroid").string();
  ASSERT_EQ(run_cli({"named", "L:1", "--out", l1}).code, 0);
  ASSERT_EQ(run_cli({"named", "N5", "--out", n5}).code, 0);
  const auto r = run_cli({"minor", "--series", l1, n5});
  EXPECT_EQ(r.code, 0);
  static const std::regex moves(R"(moves delete \d+; contract \d+\n)");
  EXPECT_TRUE(std::regex_search(r.out, moves)) << r.out;
  EXPECT_EQ(run_cli({"minor", "--series", n5, l1}).code, 1);
  EXPECT_EQ(run_cli({"minor", "--series", "--pin", l1, n5}).code, 0);
  EXPECT_EQ(run_cli({"minor", "--series", "--pin", l1, fixture("k4.graph")}).code, 2);
}

TEST(Cli, NamedToStdoutMatchesEmit) {
  const auto r = run_cli({"named", "G:4"});
  EXPECT_EQ(r.code, 0);
  const auto g = g_family(4);
  EXPECT_EQ(r.out, emit_matroid(g.matroid, {{"e", g.basepoint}}));
}

TEST(Cli, JsonRecordsHaveStableSchema) {
  auto has_schema = [](const cli::Json& rec) {
    for (const char* key : {"check", "instance", "verdict", "witnesses", "params"})
      if (!rec.contains(key)) return false;
    return true;
  };
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "check", "--property", "ssce", fixture("n5.matroid")},
           {"check", "--json", "--property", "binary", fixture("k4.graph")},
           {"--json", "info", fixture("n5.matroid")},
           {"--json", "axiom", "--system", "c3", fixture("two_pairs.clutter")}}) {
    const auto r = run_cli(args);
    const auto doc = cli::Json::parse(r.out);
    ASSERT_TRUE(doc.contains("records"));
    for (const auto& rec : doc["records"]) EXPECT_TRUE(has_schema(rec)) << rec.dump();
  }
  const auto v = run_cli({"--json", "verify", "axiom", "--clutter-n", "3"});
  EXPECT_EQ(v.code, 0);
  const auto doc = cli::Json::parse(v.out);
  EXPECT_EQ(doc["verdict"], "pass");
  EXPECT_EQ(doc["reports"].size(), 3u);
  const auto lem = run_cli({"--json", "verify", "lemmas", "--graphic-max-edges", "5", "--binary-max-cols", "4"});
  EXPECT_EQ(lem.code, 0);
  for (const auto& rep : cli::Json::parse(lem.out)["reports"])
    for (const auto& rec : rep["records"]) ASSERT_TRUE(has_schema(rec)) << rec.dump();
}

TEST(Cli, MaxWitnessesCapsOutput) {
  const auto r = run_cli({"--max-witnesses", "1", "check", "--property", "ssce", fixture("n5.matroid")});
  EXPECT_EQ(r.code, 1);
  std::size_t count = 0;
  for (std::size_t pos = 0; (pos = r.out.find("witness ", pos)) != std::string::npos; ++pos) ++count;
  EXPECT_EQ(count, 1u);
  EXPECT_NE(r.out.find("violations 4"), std::string::npos) << r.out;
}

TEST(Cli, CatalogWritesParseableFiles) {
  const auto dir = temp_dir("catalog");
  const auto r = run_cli({"catalog", "--family", "uniform", "--uniform-max", "3", "--out", dir.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("written 9"), std::string::npos) << r.out;
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_NO_THROW(parse_input(buf.str()));
    ++files;
  }
  EXPECT_EQ(files, 9u);
  EXPECT_EQ(run_cli({"catalog", "--family", "graphic", "--graphic-max-edges", "13", "--out", dir.string()}).code, 2);
}

TEST(Cli, VerifyTheoremsSmallBounds) {
  EXPECT_EQ(run_cli({"verify", "theorem1", "--graphic-max-edges", "5", "--binary-max-cols", "4", "--uniform-max", "5"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "theorem3", "--graphic-max-edges", "7", "--binary-max-cols", "5"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "theorem3", "--graphic-max-edges", "10"}).code, 2);
}

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args)
{
  args.insert(args.begin(), "affold");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = affold::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CountWorkedExample)
{
  const auto r = run({"count", "--type", "A2", "--word", "2,1,0,2,0,1,0,2,0", "--end", "2,1,0,2,1,2,0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "q^3-2q^2+q\n");
  const auto q = run({"count", "--type", "A2", "--word", "2,1,0,2,0,1,0,2,0", "--end", "2,1,0,2,1,2,0", "--q", "3"});
  EXPECT_EQ(q.out, "q^3-2q^2+q\t12\n");
}

TEST(Cli, CountTable)
{
  const auto r = run({"count", "--type", "A1", "--word", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\t1\ne\tq-1\n");
  const auto none = run({"count", "--type", "A1", "--word", "1", "--end", "0"});
  EXPECT_EQ(none.out, "0\n");
}

TEST(Cli, PathsJson)
{
  const auto r = run({"paths", "--type", "A1", "--word", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("paths").size(), 2u);
  EXPECT_EQ(j.at("type"), "A1");
  EXPECT_TRUE(j.at("reduced").get<bool>());
  EXPECT_EQ(j.dump(2) + "\n", r.out);
  EXPECT_EQ(nlohmann::json::parse(j.dump()).dump(2) + "\n", r.out);

  const auto f = run({"paths", "--type", "A2", "--word", "2,1,0,2,0,1,0,2,0", "--end", "2,1,0,2,1,2,0"});
  const auto k = nlohmann::json::parse(f.out);
  ASSERT_EQ(k.at("paths").size(), 1u);
  EXPECT_EQ(k["paths"][0]["kinds"], nlohmann::json({"Z", "Z", "Z", "Z", "F", "Z", "F", "P", "Z"}));
  EXPECT_EQ(k["paths"][0]["dim"], 3);
  EXPECT_EQ(k["by_endpoint"][0]["polynomial"], "q^3-2q^2+q");
  // endpoint given as JSON selects the same path
  const auto end = k["paths"][0]["end"].dump();
  const auto g = run({"paths", "--type", "A2", "--word", "2,1,0,2,0,1,0,2,0", "--end", end});
  EXPECT_EQ(g.out, f.out);
}

TEST(Cli, NonReducedWords)
{
  const auto bad = run({"paths", "--type", "A1", "--word", "1,1"});
  EXPECT_EQ(bad.code, 2);
  const auto ok = run({"paths", "--type", "A1", "--word", "1,1", "--allow-nonreduced"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.err.find("not reduced"), std::string::npos);
  EXPECT_FALSE(nlohmann::json::parse(ok.out).at("reduced").get<bool>());
}

TEST(Cli, TypeAsMatrix)
{
  const auto a = run({"count", "--type", "[[2,-1],[-1,2]]", "--word", "0,1,2"});
  const auto b = run({"count", "--type", "A2", "--word", "0,1,2"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"count", "--type", "[[2,-1],[-2,1]]", "--word", "1"}).code, 2);
}

TEST(Cli, VerifyExample8)
{
  const auto r = run({"verify", "example8"});
  // the published b9 has entry (2,1) = -t^2 and determinant != 1; the executor gives +t^2
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("5/6 assertions passed"), std::string::npos);
  EXPECT_NE(r.out.find("FAIL  b9 equals the closed form: (2,1)"), std::string::npos);
  EXPECT_EQ(run({"verify", "example9"}).code, 2);
}

TEST(Cli, Oracle)
{
  const auto r = run({"oracle", "--type", "A1", "--word", "1,0,1", "--p", "3"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_EQ(run({"oracle", "--type", "A1", "--word", "1", "--p", "4"}).code, 2);
}

TEST(Cli, Render)
{
  const auto r = run({"render", "--type", "A2", "--radius", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, affold::render_arrangement(affold::SceneSpec{affold::AffineWeylGroup(affold::cartan_from_label("A2")), 2, {}, {}, {}}));
  const auto p = run({"render", "--type", "A2", "--word", "2,1,0,2,0,1,0,2,0", "--end", "2,1,0,2,1,2,0"});
  EXPECT_NE(p.out.find("fold-hook"), std::string::npos);
  EXPECT_EQ(run({"render", "--type", "A3"}).code, 2);
  EXPECT_EQ(run({"render", "--type", "A2", "--end", "1"}).code, 2);
}

TEST(Cli, Execute)
{
  const auto r = run({"execute", "--type", "A2", "--word", "2,1,0,2,0,1,0,2,0", "--labels", "0,0,0,0,2,0,3,5,5/3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("kinds"), nlohmann::json({"Z", "Z", "Z", "Z", "F", "Z", "F", "P", "Z"}));
  const auto u = affold::json_io::matrix_from_json(j.at("u"));
  EXPECT_EQ(u, affold::example8::expected_u9());
  EXPECT_EQ(affold::json_io::matrix_to_json(u), j.at("u"));
  const auto fp = run({"execute", "--type", "A2", "--word", "0,1", "--labels", "1,4", "--field", "fp", "--p", "5"});
  EXPECT_EQ(fp.code, 0) << fp.err;
  EXPECT_EQ(nlohmann::json::parse(fp.out).at("field"), "fp");
  EXPECT_EQ(run({"execute", "--type", "A2", "--word", "0,1", "--labels", "1"}).code, 2);
  EXPECT_EQ(run({"execute", "--type", "A2", "--word", "0,1", "--labels", "1,2", "--field", "fp", "--p", "6"}).code, 2);
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"count", "--type", "A2", "--word", "1", "--bogus"}).code, 2);
  EXPECT_EQ(run({"count", "--type", "A2", "--word", "1,5"}).code, 2);
  EXPECT_EQ(run({"count", "--type", "A2", "--word", "1,x"}).code, 2);
  EXPECT_EQ(run({"count", "--type", "Q7", "--word", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--type", "A2"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(JsonIo, RoundTrips)
{
  using namespace affold;
  const AffineWeylGroup W(cartan_from_label("G2"));
  for (const Word& w : std::vector<Word>{{}, {0}, {1, 2, 0, 1}, {0, 2, 1, 2, 0}}) {
    const auto g = W.from_word(w);
    EXPECT_EQ(json_io::endpoint_from_json(W, json_io::endpoint_to_json(W, g)), g);
  }
  const auto m = example8::expected_b9();
  EXPECT_EQ(json_io::matrix_from_json(json_io::matrix_to_json(m)), m);
  const auto s = json_io::matrix_to_json(m).dump();
  EXPECT_EQ(json_io::matrix_to_json(json_io::matrix_from_json(nlohmann::json::parse(s))).dump(), s);
  EXPECT_THROW(json_io::rational_function_from_json(nlohmann::json::parse(R"([["1"],[]])")), std::invalid_argument);
}

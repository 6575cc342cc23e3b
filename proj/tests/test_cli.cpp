#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "catalg/cli.hpp"
#include "catalg/states.hpp"

using namespace catalg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "catalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CATALG_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Errc error_code(std::string_view text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "document accepted: " << text;
  return Errc::bad_arrow;
}

std::string error_text(std::string_view text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Document, ParseErrorsCarryPositions) {
  const auto msg = error_text("{\n  \"rig\": \"rational\",\n  \"category\": }");
  EXPECT_NE(msg.find("ParseError"), std::string::npos);
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(Document, SchemaErrorsCarryPaths) {
  EXPECT_EQ(error_code(R"({"rig": "rational"})"), Errc::schema_error);
  EXPECT_EQ(error_code(R"({"rig": "octonion", "category": {"builder": "chain", "n": 2}})"), Errc::unknown_rig);
  EXPECT_EQ(error_code(R"({"rig": "rational", "category": {"builder": "chain", "n": 2}, "extra": 1})"),
            Errc::schema_error);
  EXPECT_EQ(error_code(R"({"rig": "rational", "category": {"builder": "nope"}})"), Errc::schema_error);
  EXPECT_EQ(error_code(R"({"rig": "rational", "category": {"builder": "chain", "n": 2},
                          "elements": {"a": ["1", "2"]}})"),
            Errc::schema_error);
  EXPECT_EQ(error_code(R"({"rig": "rational", "category": {"builder": "chain", "n": 2},
                          "elements": {"a": {"nope": "1"}}})"),
            Errc::schema_error);
  EXPECT_EQ(error_code(R"({"rig": "rational", "category": {"builder": "chain", "n": 2},
                          "elements": {"a": ["1", "x", "3"]}})"),
            Errc::bad_literal);
  EXPECT_EQ(error_code(R"({"rig": "natural", "category": {"builder": "chain", "n": 2},
                          "elements": {"a": ["1", "-2", "3"]}})"),
            Errc::bad_literal);
  const auto msg = error_text(R"({"rig": "rational", "category": {"builder": "chain", "n": 2},
                                 "elements": {"a": {"nope": "1"}}})");
  EXPECT_NE(msg.find("/elements/a"), std::string::npos) << msg;
}

TEST(Document, ExplicitCategoryMatchesBuilder) {
  const auto doc = parse_document(slurp(data("s3_explicit.json")));
  EXPECT_EQ(doc.category->arrow_count(), 6U);
  EXPECT_TRUE(validate_category(*doc.category).valid());
  ASSERT_TRUE(doc.dagger);
  EXPECT_TRUE(validate_dagger(*doc.category, *doc.dagger).valid());
  // isomorphic to the built-in S3: same multiplication table up to relabeling
  const auto s3 = symmetric_group(3);
  std::size_t idempotents = 0;
  for (ArrowId c = 0; c < 6; ++c) idempotents += doc.category->compose(c, c) == c;
  EXPECT_EQ(idempotents, 1U);
  std::size_t involutions = 0;
  for (ArrowId c = 0; c < 6; ++c) involutions += s3->is_identity(s3->compose(c, c)) && !s3->is_identity(c);
  std::size_t doc_involutions = 0;
  for (ArrowId c = 0; c < 6; ++c)
    doc_involutions += doc.category->is_identity(doc.category->compose(c, c)) && !doc.category->is_identity(c);
  EXPECT_EQ(doc_involutions, involutions);
}

TEST(Document, DuplicateAndNonComposableEntries) {
  EXPECT_EQ(error_code(R"({"rig": "rational", "category": {"objects": ["x"],
      "arrows": [{"label": "e", "dom": "x", "cod": "x"}, {"label": "e", "dom": "x", "cod": "x"}],
      "compose": []}})"),
            Errc::schema_error);
  EXPECT_EQ(error_code(R"({"rig": "rational", "category": {"objects": ["x", "y"],
      "arrows": [{"label": "1x", "dom": "x", "cod": "x"}, {"label": "1y", "dom": "y", "cod": "y"}],
      "compose": [{"left": "1x", "right": "1y", "result": "1x"}]}})"),
            Errc::schema_error);
}

TEST(Document, LiteralsRoundTrip) {
  for (const auto* text : {"0", "-3/4", "123456789012345678901234567890/7", "5"}) {
    const auto r = parse_literal<Rational>(Json(text));
    EXPECT_EQ(parse_literal<Rational>(to_json(r)), r);
  }
  EXPECT_EQ(to_json(Rational(6, -4)), Json("-3/2"));
  EXPECT_EQ(to_json(Tropical(0)), Json("inf"));
  EXPECT_EQ(parse_literal<Tropical>(Json("inf")), Tropical(0));
  EXPECT_EQ(parse_literal<Tropical>(Json(2.5)).value(), 2.5);
  EXPECT_EQ(parse_literal<Boolean>(Json(true)), Boolean::of(true));
  const Complex z(0.1, -1e-300);
  EXPECT_EQ(parse_literal<Complex>(to_json(z)), z);
  EXPECT_EQ(parse_literal<Integer>(to_json(Integer::parse("-98765432109876543210"))),
            Integer::parse("-98765432109876543210"));
  EXPECT_THROW(parse_literal<Complex>(Json("1+i")), Error);
  EXPECT_THROW(parse_literal<Boolean>(Json(1)), Error);
}

TEST(Cli, ValidateGoodAndBroken) {
  const auto ok = run({"validate", data("s3_explicit.json")});
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto bad = run({"--json", "validate", data("broken_assoc.json")});
  EXPECT_EQ(bad.code, 1);
  const auto j = Json::parse(bad.out);
  EXPECT_FALSE(j["valid"].get<bool>());
  bool saw_assoc = false;
  for (const auto& v : j["violations"]) saw_assoc |= v["kind"] == "associativity";
  EXPECT_TRUE(saw_assoc);
}

TEST(Cli, MulMatchesLibrary) {
  const auto r = run({"--json", "mul", data("indiscrete2.json"), "a", "b"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse_document(slurp(data("indiscrete2.json")));
  const auto expected = element<Rational>(doc, "a") * element<Rational>(doc, "b");
  const auto j = Json::parse(r.out);
  for (ArrowId c = 0; c < expected.size(); ++c)
    EXPECT_EQ(parse_literal<Rational>(j["product"][doc.category->arrow_label(c)]), expected(c));
  EXPECT_EQ(run({"mul", data("indiscrete2.json"), "a", "zz"}).code, 2);
}

TEST(Cli, MobiusAndStates) {
  const auto m = run({"--json", "mobius", data("divisors60.json")});
  ASSERT_EQ(m.code, 0) << m.err;
  const auto j = Json::parse(m.out);
  EXPECT_EQ(j["mu"].size(), divisor_poset(60)->arrow_count());

  EXPECT_EQ(run({"state-check", data("z2_half.json")}).code, 0);
  const auto bad = run({"--json", "state-check", data("z2_bad.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(Json::parse(bad.out)["reason"], "not_psd");
  EXPECT_EQ(run({"state-check", data("indiscrete2.json")}).code, 0);
  EXPECT_EQ(run({"state-check", data("s3_explicit.json")}).code, 0);
}

TEST(Cli, GnsReport) {
  const auto r = run({"--json", "--verify", "100", "gns", data("z2_half.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["quotient_dim"], 2);
  for (const auto& c : j["verification"]) {
    EXPECT_EQ(c["failures"], 0) << c["name"];
    EXPECT_LE(c["max_residual"].get<double>(), 1e-9) << c["name"];
  }
  const auto exact = run({"--json", "gns", data("s3_explicit.json")});
  ASSERT_EQ(exact.code, 0) << exact.err;
  EXPECT_EQ(Json::parse(exact.out)["quotient_dim"], 6);
  EXPECT_EQ(run({"gns", data("z2_bad.json")}).code, 2);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"validate"}).code, 2);
  EXPECT_EQ(run({"validate", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"--tol", "-1", "demo"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SeedsMakeReportsReproducible) {
  const auto a = run({"--json", "--seed", "7", "gns", data("z2_half.json")});
  const auto b = run({"--json", "--seed", "7", "gns", data("z2_half.json")});
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"--json", "--seed", "8", "gns", data("z2_half.json")});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, DemoPasses) {
  const auto r = run({"demo"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("demo passed"), std::string::npos);
  const auto j = run({"--json", "--seed", "3", "demo"});
  EXPECT_TRUE(Json::parse(j.out)["passed"].get<bool>());
}

#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "commands.hpp"
#include "json_io.hpp"
#include "symcalc/expr.hpp"
#include "symcalc/laplace.hpp"
#include "symcalc/random.hpp"

using namespace symcalc;
using namespace symcalc::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  std::string first_line() const { return out.substr(0, out.find('\n')); }
};

Result symcalc_run(std::vector<std::string> args) {
  args.insert(args.begin(), "symcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, StarExamples) {
  EXPECT_EQ(symcalc_run({"star", "--target", "w", "u1", "x1"}).first_line(), "x1*u1 + h");
  EXPECT_EQ(symcalc_run({"star", "--target", "w", "x1", "u1"}).first_line(), "x1*u1");
  EXPECT_EQ(symcalc_run({"star", "--target", "sw", "u1*sinv", "x1*sinv"}).first_line(), "x1*u1*sinv + h*sinv");
  const Result tw = symcalc_run({"star", "--target", "tw", "--D", "3", "t*h^-1*x1", "u1"});
  EXPECT_EQ(tw.code, 0);
  EXPECT_EQ(tw.first_line(), "x1*u1*t*h^-1");
  EXPECT_NE(tw.out.find("window:"), std::string::npos);
}

TEST(Cli, StarexpExamples) {
  const Result all = symcalc_run({"--param", "theta", "starexp", "theta*x1*u1", "--D", "2", "--routes", "all"});
  EXPECT_EQ(all.code, 0);
  EXPECT_NE(all.out.find("agree: true"), std::string::npos);
  EXPECT_NE(all.out.find("series: 1/2*theta^2*x1^2*u1^2*t^2*h^-2 + theta*x1*u1*t*h^-1 + 1/2*theta^2*x1*u1*t^2*h^-1 + 1"),
            std::string::npos);
  const Result zero = symcalc_run({"starexp", "0", "--D", "5"});
  EXPECT_EQ(zero.code, 0);
  EXPECT_EQ(zero.out, "1\n");
  const Result bad = symcalc_run({"starexp", "h^-1*x1"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.err.find("order"), std::string::npos);
}

TEST(Cli, OscillatorExamples) {
  const Result r = symcalc_run({"oscillator", "--D", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("false"), std::string::npos);
  const Result d0 = symcalc_run({"oscillator", "--D", "0"});
  EXPECT_EQ(d0.code, 0);
  EXPECT_NE(d0.out.find("starexp = 1\n"), std::string::npos);
  const Result t0 = symcalc_run({"oscillator", "--theta", "0", "--D", "4"});
  EXPECT_EQ(t0.code, 0);
  EXPECT_NE(t0.out.find("starexp = 1\n"), std::string::npos);
  EXPECT_EQ(symcalc_run({"oscillator", "--theta", "2/3", "--D", "3"}).code, 0);
  EXPECT_EQ(symcalc_run({"oscillator", "--theta", "x1"}).code, 2);
}

TEST(Cli, CheckExamples) {
  EXPECT_EQ(symcalc_run({"check", "laws", "--seed", "7", "--sizes", "5"}).code, 0);
  EXPECT_EQ(symcalc_run({"check", "laplace", "--seed", "7", "--sizes", "5"}).code, 0);
  const Result demo = symcalc_run({"check", "gevrey", "--demo", "formal-counterexample"});
  EXPECT_EQ(demo.code, 0);
  EXPECT_NE(demo.out.find("verdict: divergent"), std::string::npos);
  const Result conv = symcalc_run({"check", "gevrey", "--demo", "formal-counterexample", "--sequence", "one"});
  EXPECT_NE(conv.out.find("verdict: convergent"), std::string::npos);
  EXPECT_EQ(symcalc_run({"check", "laws", "--demo", "formal-counterexample"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(symcalc_run({"star", "--target", "w", "x1/u1", "x1"}).code, 2);
  EXPECT_EQ(symcalc_run({"star", "--target", "w", "(x1", "x1"}).code, 2);
  EXPECT_EQ(symcalc_run({"star", "--target", "w", "t", "x1"}).code, 2);
  EXPECT_EQ(symcalc_run({"star", "--target", "sw", "x1", "x1*sinv"}).code, 2);
  EXPECT_EQ(symcalc_run({"star", "--target", "q", "x1", "x1"}).code, 2);
  EXPECT_EQ(symcalc_run({"star", "x1"}).code, 2);
  EXPECT_EQ(symcalc_run({"starexp", "h^-2"}).code, 3);
  EXPECT_EQ(symcalc_run({"--help"}).code, 0);
}

TEST(Cli, HbarMinTruncatesInputs) {
  const Result r = symcalc_run({"--hbar-min", "-1", "star", "--target", "w", "u1^2 + h^2", "x1^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("exact for levels j >= -1"), std::string::npos);
  EXPECT_EQ(r.first_line(), "x1^2*u1^2 + 4*x1*u1*h");
}

TEST(Cli, JsonIsDeterministic) {
  const std::vector<std::string> args = {"--format", "json", "--param", "theta", "starexp", "theta*x1*u1 + h*u1",
                                         "--D", "3", "--routes", "all"};
  const Result a = symcalc_run(args);
  const Result b = symcalc_run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("agree"), true);
  EXPECT_EQ(tw_from_json(j.at("routes").at("series")), tw_from_json(j.at("routes").at("ode")));
  const Result c = symcalc_run({"--format", "json", "check", "laws", "--seed", "3", "--sizes", "3"});
  EXPECT_EQ(c.out, symcalc_run({"--format", "json", "check", "laws", "--seed", "3", "--sizes", "3"}).out);
  EXPECT_EQ(Json::parse(c.out).at("pass"), true);
}

TEST(Json, RoundTripsEveryType) {
  RandomSymbols rng(17);
  const ParamScalar theta = ParamScalar::parameter("theta") * ParamScalar::parameter("kappa") + Rational(-5, 7);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + i % 3;
    WSymbol p = rng.w_symbol(n, -3, 2, 3);
    if (i % 2) p *= theta;
    if (i % 3 == 0) p = p.truncated(-1);
    EXPECT_EQ(w_from_json(to_json(p)), p);
    EXPECT_EQ(w_from_json(Json::parse(to_json(p).dump())), p);
    SWSymbol s = rng.sw_symbol(n, 5, -2, 2, 2);
    if (i % 3 == 0) s = s.truncated(0);
    EXPECT_EQ(sw_from_json(to_json(s)), s);
    const TWSymbol f = rng.tw_symbol(n, 4, rng.uniform(-2, 2), 2, 2);
    EXPECT_EQ(tw_from_json(to_json(f)), f);
    const TWSymbol g = laplace(s, 4);
    EXPECT_EQ(tw_from_json(to_json(g)), g);
  }
}

TEST(Json, BigIntegersAreStrings) {
  WSymbol p(1);
  Rational big(Integer("123456789012345678901234567891"), Integer(7));
  big.canonicalize();
  p.add_coeff(0, XUPoly(1, ParamScalar(big)));
  const Json j = to_json(p);
  EXPECT_EQ(j.at("terms")[0].at("coeff").at("num"), "123456789012345678901234567891");
  EXPECT_EQ(w_from_json(j), p);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(w_from_json(Json::parse(R"({"schema":2,"type":"w","n":1,"terms":[]})")), SchemaError);
  EXPECT_THROW(w_from_json(Json::parse(R"({"schema":1,"type":"sw","n":1,"terms":[]})")), SchemaError);
  EXPECT_THROW(w_from_json(Json::parse(
                   R"({"schema":1,"type":"w","n":1,"terms":[{"hbar":0,"monomial":{"x2":1},"coeff":{"num":"1","den":"1"}}]})")),
               SchemaError);
  EXPECT_THROW(w_from_json(Json::parse(
                   R"({"schema":1,"type":"w","n":1,"terms":[{"hbar":0,"monomial":{},"coeff":{"num":"1","den":"0"}}]})")),
               SchemaError);
  EXPECT_THROW(w_from_json(Json::parse(R"({"schema":1,"type":"w"})")), SchemaError);
}

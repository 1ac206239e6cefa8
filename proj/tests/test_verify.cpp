#include <doctest.h>

#include <set>
#include <sstream>

#include "utt/verify.hpp"

using namespace utt;

namespace {

std::string report(const std::vector<std::string>& suites, const verify::SuiteConfig& cfg,
                   bool* ok = nullptr) {
  std::ostringstream out;
  const bool passed =
      verify::run_suites(suites, cfg, [&](const verify::CheckResult& r) {
        out << r.to_json_line() << "\n";
      });
  if (ok) *ok = passed;
  return out.str();
}

}  // namespace

TEST_CASE("suite registry") {
  CHECK(verify::suite_names().size() == 9);
  CHECK(verify::expected_anchors().size() == 12);
  CHECK_THROWS_AS(verify::run_suite("nope", {}), Error);
}

TEST_CASE("every suite passes at the defaults and reports its anchors") {
  const verify::SuiteConfig cfg;
  std::set<std::string> anchors;
  for (const auto& name : verify::suite_names()) {
    const auto results = verify::run_suite(name, cfg);
    CHECK(!results.empty());
    for (const auto& r : results) {
      CHECK_MESSAGE(r.passed, r.to_json_line());
      CHECK(r.suite == name);
      anchors.insert(r.anchor);
    }
  }
  CHECK(anchors == std::set<std::string>(verify::expected_anchors().begin(),
                                         verify::expected_anchors().end()));
}

TEST_CASE("other primes") {
  for (auto [p, q] : {std::pair{5, 2}, {7, 3}}) {
    verify::SuiteConfig cfg;
    cfg.p = p;
    cfg.q = q;
    cfg.trials = 10;
    bool ok = false;
    report({"all"}, cfg, &ok);
    CHECK(ok);
  }
}

TEST_CASE("reports are deterministic and depend on the seed") {
  verify::SuiteConfig cfg;
  cfg.trials = 5;
  const auto a = report({"conjugation", "alpha"}, cfg);
  const auto b = report({"conjugation", "alpha"}, cfg);
  CHECK(a == b);
  cfg.seed = 7;
  CHECK(report({"conjugation"}, cfg) != report({"conjugation"}, verify::SuiteConfig{}));
  CHECK(verify::trial_seed(0, 1) != verify::trial_seed(0, 2));
  CHECK(verify::trial_seed(3, 1) == verify::trial_seed(3, 1));
}

TEST_CASE("configuration validation") {
  auto code = [](const verify::SuiteConfig& cfg) {
    try {
      verify::validate(cfg);
      (void)report({"all"}, cfg);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Overflow;
  };
  verify::SuiteConfig cfg;
  cfg.q = 7;
  cfg.p = 5;
  CHECK(code(cfg) == Errc::NotPrimitive);
  cfg = {};
  cfg.p = 9;
  CHECK(code(cfg) == Errc::NotPrime);
  cfg = {};
  cfg.window = 5;
  CHECK(code(cfg) == Errc::BadPrecision);
  cfg = {};
  cfg.precision = 10;
  CHECK(code(cfg) == Errc::BadPrecision);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "knotsig/certify.hpp"
#include "knotsig/error.hpp"

using namespace knotsig;
using namespace knotsig::testing;

namespace {

RawMatrix raw(const SeifertMatrix& v) {
  RawMatrix r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<Integer> row;
    for (std::size_t j = 0; j < v.size(); ++j) row.push_back(v.entries()(i, j));
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace

TEST_CASE("certify the trefoil") {
  const auto c = certify(trefoil(), KnotMetadata{});
  CHECK(c.verdict == Verdict::Certified);
  CHECK(c.name == "trefoil");
  CHECK(c.genus == 1);
  REQUIRE(c.simple_root_witnesses.size() == 1);
  REQUIRE(c.jump_witnesses.size() == 1);
  CHECK(c.jump_witnesses[0].jump == -2);
  CHECK(c.odd_multiplicity_witnesses.size() == 1);
  CHECK(c.consistency_checks.all());
  CHECK(c.conclusion_text.find("(-a, 0) U (0, a)") != std::string::npos);
  CHECK(c.conclusion_text.find("(-a, a)") == std::string::npos);
}

TEST_CASE("certify mentions the (-a, a) strengthening only when M(0) is asserted prime") {
  KnotMetadata meta;
  meta.assume_m0_prime = true;
  const auto c = certify(trefoil(), meta);
  CHECK(c.conclusion_text.find("(-a, a)") != std::string::npos);
  CHECK(c.assumptions_echoed == meta);
}

TEST_CASE("certify the figure-8") {
  const auto c = certify(figure_eight(), KnotMetadata{});
  CHECK(c.verdict == Verdict::NotApplicable);
  CHECK(c.simple_root_witnesses.empty());
  CHECK(c.jump_witnesses.empty());
  CHECK(c.profile.plateaus == std::vector<int>{0});
}

TEST_CASE("certify the granny and square knots") {
  const auto g = certify(granny(), KnotMetadata{});
  CHECK(g.verdict == Verdict::NotApplicable);
  REQUIRE(g.jump_witnesses.size() == 1);
  CHECK(g.jump_witnesses[0].jump == -4);
  CHECK(g.jump_witnesses[0].root.multiplicity == 2);
  CHECK(g.odd_multiplicity_witnesses.empty());

  const auto s = certify(square_knot(), KnotMetadata{});
  CHECK(s.verdict == Verdict::NotApplicable);
  CHECK(s.jump_witnesses.empty());
  REQUIRE(s.jump_reports.size() == 1);
  CHECK(s.jump_reports[0].jump == 0);
}

TEST_CASE("irreducibility must be asserted") {
  KnotMetadata meta;
  meta.assume_irreducible = false;
  const auto c = certify(trefoil(), meta);
  CHECK(c.verdict == Verdict::NotApplicable);
  CHECK_FALSE(c.simple_root_witnesses.empty());
}

TEST_CASE("invalid input becomes INVALID_INPUT") {
  RawMatrix odd{{{Integer(1)}}};
  const auto c = certify(odd, "odd", KnotMetadata{});
  CHECK(c.verdict == Verdict::InvalidInput);
  CHECK(c.error.find("OddSize") != std::string::npos);
  RawMatrix zero{{{Integer(0), Integer(0)}, {Integer(0), Integer(0)}}};
  CHECK(certify(zero, "zero", KnotMetadata{}).verdict == Verdict::InvalidInput);
}

TEST_CASE("alpha reporting halves angles") {
  CertifyOptions opts;
  opts.paper_angles = true;
  const auto a = certify(trefoil(), KnotMetadata{}, opts);
  const auto b = certify(trefoil(), KnotMetadata{});
  CHECK(a.profile.half_angles);
  CHECK(a.simple_root_witnesses[0].angle_lo * 2 == b.simple_root_witnesses[0].angle_lo);
  CHECK(a.jump_reports[0].root.angle_hi * 2 == b.jump_reports[0].root.angle_hi);
  CHECK(a.jump_witnesses[0].root.angle_hi * 2 == b.jump_witnesses[0].root.angle_hi);
  CHECK(a.verdict == b.verdict);
}

TEST_CASE("certify_batch") {
  CHECK(certify_batch({}).empty());
  std::vector<BatchInput> in{{"trefoil", raw(trefoil()), {}},
                             {"figure-8", raw(figure_eight()), {}},
                             {"bad", RawMatrix{{{Integer(0), Integer(0)}, {Integer(0), Integer(0)}}}, {}}};
  const auto out = certify_batch(in);
  REQUIRE(out.size() == 3);
  CHECK(out[0].certificate->verdict == Verdict::Certified);
  CHECK(out[1].certificate->verdict == Verdict::NotApplicable);
  CHECK(out[2].certificate->verdict == Verdict::InvalidInput);
  CHECK(out[2].name == "bad");

  const auto par = certify_batch(in, {}, 3);
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(par[i].certificate == out[i].certificate);
}

TEST_CASE("property: verdict invariants") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const auto seed = random_seed(rng);
    const auto v = congruence(seed, random_unimodular(seed.size(), rng));
    const auto c = certify(v, KnotMetadata{});
    CHECK(c.verdict == certify(seed, KnotMetadata{}).verdict);
    if (c.verdict == Verdict::Certified) {
      REQUIRE_FALSE(c.simple_root_witnesses.empty());
      for (const auto& r : c.jump_reports) {
        if (r.root.simple()) CHECK(std::abs(r.jump) == 2);
      }
    }
    KnotMetadata no;
    no.assume_irreducible = false;
    CHECK(certify(v, no).verdict != Verdict::Certified);
  }
}

#include <doctest.h>

#include "multconj/error.hpp"
#include "multconj/report.hpp"
#include "multconj/sweep.hpp"
#include "oracles.hpp"

using namespace multconj;

TEST_CASE("enumeration counts") {
  auto cm2 = enumerate_cm2(1, 2);
  REQUIRE(cm2.size() == 3);
  CHECK(cm2[0] == DegreeMatrixCM2::validate({1}, {1}));
  CHECK(cm2[1] == DegreeMatrixCM2::validate({1}, {2}));
  CHECK(cm2[2] == DegreeMatrixCM2::validate({2}, {2}));
  CHECK(enumerate_cm2(1, 1).size() == 1);

  auto gor3 = enumerate_gor3(1, 2);
  REQUIRE(gor3.size() == 5);
  CHECK(Instance::of(gor3[0]).label() == "gor3 a=(1) b=(1) d=1");
  CHECK(Instance::of(gor3[4]).label() == "gor3 a=(2) b=(2) d=2");
  CHECK(enumerate_gor3(1, 1).size() == 1);

  auto big = enumerate_gor3(1, 5);
  CHECK(std::find(big.begin(), big.end(), DegreeMatrixGor3::validate({2}, {2}, 5)) != big.end());

  CHECK(enumerate_cm2(3, 0).empty());
  CHECK(enumerate_gor3(0, 3).empty());
}

TEST_CASE("enumeration matches generate-and-filter") {
  for (int t = 1; t <= 3; ++t)
    for (Degree E = 1; E <= 4; ++E) {
      auto got = enumerate_cm2(t, E);
      auto want = oracles::brute_cm2(t, E);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].a() == want[i].first);
        CHECK(got[i].b() == want[i].second);
      }

      auto got3 = enumerate_gor3(t, E);
      auto want3 = oracles::brute_gor3(t, E);
      REQUIRE(got3.size() == want3.size());
      for (std::size_t i = 0; i < got3.size(); ++i) {
        CHECK(got3[i].base().a() == want3[i].a);
        CHECK(got3[i].base().b() == want3[i].b);
        CHECK(got3[i].d() == want3[i].d);
      }
    }
}

TEST_CASE("evaluate") {
  auto row = evaluate(DegreeMatrixCM2::validate({2, 2, 1}, {2, 2, 1}));
  CHECK(row.e == 17);
  CHECK(row.instance.label() == "cm2 a=(2,2,1) b=(2,2,1)");
  REQUIRE(row.entry);
  CHECK_FALSE(row.entry->bound.holds);
  CHECK_FALSE(row.srinivasan);

  row = evaluate(DegreeMatrixGor3::validate({2}, {2}, 5));
  CHECK(row.e == 20);
  REQUIRE(row.srinivasan);
  CHECK_FALSE(row.srinivasan->lower.holds);
  CHECK(row.refined.lower.holds);
  CHECK(row.refined.upper.holds);
}

TEST_CASE("verify_all on small ranges") {
  SweepConfig c;
  c.family = Family::cm2;
  c.t_max = 2;
  c.entry_max = 3;
  auto r = verify_all(c);
  CHECK(r.anomalies.empty());
  CHECK(r.instances_checked == enumerate_cm2(2, 3).size());
  CHECK(r.extensions_checked > 0);

  c.t_max = 3;
  c.entry_max = 2;
  r = verify_all(c);
  CHECK(r.anomalies.empty());
  bool found = false;
  for (const auto& f : r.entry_bound_findings)
    if (f.instance.label() == "cm2 a=(2,2,1) b=(2,2,1)") {
      found = true;
      CHECK_FALSE(f.result.hypothesis());
      CHECK_FALSE(f.result.bound.holds);
    }
  CHECK(found);

  c.family = Family::gor3;
  c.t_max = 2;
  c.entry_max = 3;
  r = verify_all(c);
  CHECK(r.anomalies.empty());
  CHECK(r.instances_checked == enumerate_gor3(2, 3).size());

  c.entry_max = 0;
  r = verify_all(c);
  CHECK(r.instances_checked == 0);
  CHECK(r.anomalies.empty());

  c.checks = {"no_such_check"};
  c.entry_max = 2;
  CHECK_THROWS_AS(verify_all(c), InputError);
}

TEST_CASE("reports do not depend on the number of jobs") {
  for (Family f : {Family::cm2, Family::gor3}) {
    SweepConfig c;
    c.family = f;
    c.t_max = 3;
    c.entry_max = 3;
    std::string rows1, rows8;
    c.jobs = 1;
    auto r1 = verify_all(c, [&](const InstanceRow& row) { rows1 += csv_row(row) + "\n"; });
    c.jobs = 8;
    auto r8 = verify_all(c, [&](const InstanceRow& row) { rows8 += csv_row(row) + "\n"; });
    CHECK(to_json(r1).dump() == to_json(r8).dump());
    CHECK(rows1 == rows8);
  }
}

TEST_CASE("hunt") {
  CHECK(parse_target("prop24_bound") == HuntTarget::prop24_bound);
  CHECK_THROWS_AS(parse_target("riemann"), UnknownTarget);

  SweepConfig c;
  c.t_max = 2;
  c.entry_max = 4;
  auto h = hunt(HuntTarget::srinivasan_upper_gor3, c);
  CHECK(h.candidates.empty());
  CHECK(h.instances_checked == enumerate_gor3(2, 4).size());

  c.t_max = 3;
  c.entry_max = 2;
  h = hunt(HuntTarget::prop24_bound, c);
  bool found = false;
  for (const auto& row : h.candidates)
    if (row.instance.label() == "cm2 a=(2,2,1) b=(2,2,1)") found = true;
  CHECK(found);
}

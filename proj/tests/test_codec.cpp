#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "sabmis/codec.hpp"

using sabmis::EmbedConstants;
using Vec = Eigen::VectorXd;

namespace {
constexpr Eigen::Index kDefaultLen = 32 + 1600;  // p1 + p3
}

TEST_CASE("default constants pass validation") {
  CHECK(sabmis::validate_constants(EmbedConstants{}, 1600).empty());
}

TEST_CASE("write and read index sets have the documented defaults") {
  const EmbedConstants k{};
  const auto w = sabmis::write_index_set(k);
  const auto r = sabmis::read_index_set(k);
  REQUIRE(w.size() == 32);
  REQUIRE(r.size() == 32);

  CHECK(w[0] == 31);           // y'(p1) <- alpha channel
  CHECK(w[1] == 26);           // start of the beta run
  CHECK(w[5] == 30);           // end of the beta run
  CHECK(w[6] == 64);           // start of the gamma run
  CHECK(w[31] == 89);          // end of the gamma run

  CHECK(r[0] == 19);           // y(p1 - 2c)
  CHECK(r[1] == 20);
  CHECK(r[5] == 24);
  CHECK(r[6] == 38);           // gamma run reads k - p4 + c
  CHECK(r[31] == 63);

  std::set<Eigen::Index> ws(w.begin(), w.end()), rs(r.begin(), r.end());
  CHECK(ws.size() == w.size());
  CHECK(rs.size() == r.size());
  std::vector<Eigen::Index> both;
  std::set_intersection(ws.begin(), ws.end(), rs.begin(), rs.end(),
                        std::back_inserter(both));
  CHECK(both.empty());
}

TEST_CASE("embed_block touches exactly the write set") {
  std::mt19937 rng(17);
  std::normal_distribution<double> dist(0.0, 50.0);
  Vec y(kDefaultLen), t(32);
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = dist(rng);
  for (Eigen::Index i = 0; i < t.size(); ++i) t(i) = dist(rng);

  const EmbedConstants k{};
  const Vec out = sabmis::embed_block(y, t, k);
  const auto w = sabmis::write_index_set(k);
  const std::set<Eigen::Index> ws(w.begin(), w.end());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (ws.count(i))
      CHECK(out(i) != y(i));
    else
      CHECK(out(i) == y(i));
  }
}

TEST_CASE("embedding writes the advertised affine combinations") {
  Vec y = Vec::Zero(kDefaultLen);
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = static_cast<double>(i);
  Vec t = Vec::Constant(32, 1000.0);
  const EmbedConstants k{};
  const Vec out = sabmis::embed_block(y, t, k);
  CHECK(out(31) == doctest::Approx(19.0 + 0.01 * 1000.0));   // alpha slot
  CHECK(out(26) == doctest::Approx(20.0 + 0.1 * 1000.0));    // first beta slot
  CHECK(out(64) == doctest::Approx(38.0 + 1.0 * 1000.0));    // first gamma slot
  CHECK(out(89) == doctest::Approx(63.0 + 1.0 * 1000.0));    // last gamma slot
}

TEST_CASE("round trip over 10000 random pairs is numerically exact") {
  std::mt19937 rng(2024);
  std::normal_distribution<double> ydist(0.0, 300.0);
  std::normal_distribution<double> tdist(0.0, 40.0);
  const EmbedConstants k{};

  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    Vec y(kDefaultLen), t(32);
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = ydist(rng);
    for (Eigen::Index i = 0; i < t.size(); ++i) t(i) = tdist(rng);
    const Vec back = sabmis::extract_block(sabmis::embed_block(y, t, k), k);
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      const double denom = std::max(1.0, std::abs(t(i)));
      worst = std::max(worst, std::abs(back(i) - t(i)) / denom);
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("round trip holds for non-default valid constants") {
  EmbedConstants k{};
  k.alpha = 0.5;
  k.beta = 0.02;
  k.gamma = -3.0;
  k.c = 3;
  k.p1 = 20;
  k.p4 = 16;

  REQUIRE(sabmis::validate_constants(k, 200).empty());
  std::mt19937 rng(5);
  std::normal_distribution<double> dist(0.0, 10.0);
  Vec y(20 + 200), t(16);
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = dist(rng);
  for (Eigen::Index i = 0; i < t.size(); ++i) t(i) = dist(rng);
  const Vec back = sabmis::extract_block(sabmis::embed_block(y, t, k), k);
  CHECK((back - t).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("validate_constants reports each violated constraint") {
  EmbedConstants k{};

  SUBCASE("zero gain") {
    k.alpha = 0.0;
    const auto bad = sabmis::validate_constants(k, 1600);
    REQUIRE(!bad.empty());
    CHECK(bad.front().find("alpha") != std::string::npos);
  }
  SUBCASE("c too small") {
    k.c = 0;
    CHECK(!sabmis::validate_constants(k, 1600).empty());
  }
  SUBCASE("c not below p4") {
    k.c = 32;
    CHECK(!sabmis::validate_constants(k, 1600).empty());
  }
  SUBCASE("alpha reference index would go negative") {
    k.c = 16;  // p1 - 2c = 0 < 1
    CHECK(!sabmis::validate_constants(k, 1600).empty());
  }
  SUBCASE("gamma run would overrun the vector") {
    const auto bad = sabmis::validate_constants(k, 40);  // p1+2p4-c = 90 > 72
    REQUIRE(!bad.empty());
    CHECK(bad.front().find("p1 + 2*p4 - c") != std::string::npos);
  }
}

TEST_CASE("embed_block rejects invalid constants and payload sizes") {
  Vec y = Vec::Zero(kDefaultLen);
  Vec t = Vec::Zero(32);
  EmbedConstants bad{};
  bad.c = 0;
  CHECK_THROWS_AS(sabmis::embed_block(y, t, bad), std::invalid_argument);
  CHECK_THROWS_AS(sabmis::embed_block(y, Vec::Zero(31), EmbedConstants{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sabmis::extract_block(Vec::Zero(40), EmbedConstants{}),
                  std::invalid_argument);
}

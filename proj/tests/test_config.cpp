#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "helpers.hpp"
#include "sabmis/config.hpp"

using sabmis::SecretKey;
using testutil::TempDir;

TEST_CASE("the default key is valid and carries the reference constants") {
  const SecretKey key = sabmis::default_key(42);
  CHECK(sabmis::validate_key(key).empty());
  CHECK(key.seed == 42);
  CHECK(key.r == 1024);
  CHECK(key.b == 8);
  CHECK(key.m == 512);
  CHECK(key.l == 8);
  CHECK(key.p1 == 32);
  CHECK(key.p2 == 32);
  CHECK(key.p3 == 1600);
  CHECK(key.p4 == 32);
  CHECK(key.alpha == 0.01);
  CHECK(key.beta == 0.1);
  CHECK(key.gamma == 1.0);
  CHECK(key.c == 6);
}

TEST_CASE("to_config copies every field through") {
  const auto cfg = sabmis::to_config(sabmis::default_key(7));
  CHECK(cfg.r == 1024);
  CHECK(cfg.b == 8);
  CHECK(cfg.m == 512);
  CHECK(cfg.l == 8);
  CHECK(cfg.p2 == 32);
  CHECK(cfg.p3 == 1600);
  CHECK(cfg.seed == 7);
  CHECK(cfg.embed.alpha == 0.01);
  CHECK(cfg.embed.p1 == 32);
  CHECK(cfg.embed.p4 == 32);
  CHECK(cfg.solver.max_iters == 500);
  CHECK(cfg.solver.abs_tol == 1e-4);
  CHECK(cfg.solver.rel_tol == 1e-2);
}

TEST_CASE("validate_key flags geometry violations") {
  SecretKey key = sabmis::default_key(1);

  SUBCASE("odd cover side") {
    key.r = 1023;
    CHECK(!sabmis::validate_key(key).empty());
  }
  SUBCASE("block does not divide the sub-image") {
    key.r = 1032;  // divisible by 8, but 516 is not
    const auto bad = sabmis::validate_key(key);
    REQUIRE(!bad.empty());
    CHECK(bad.front().find("r/2") != std::string::npos);
  }
  SUBCASE("secret blocks exceed cover capacity") {
    key.m = 1024;
    CHECK(!sabmis::validate_key(key).empty());
  }
  SUBCASE("head/tail split must cover the block") {
    key.p1 = 31;
    const auto bad = sabmis::validate_key(key);
    REQUIRE(!bad.empty());
    CHECK(bad.front().find("b^2") != std::string::npos);
  }
  SUBCASE("head must not exceed the tail") {
    key.p1 = 40;
    key.p2 = 24;
    CHECK(!sabmis::validate_key(key).empty());
  }
  SUBCASE("no oversampling") {
    key.p3 = 32;
    CHECK(!sabmis::validate_key(key).empty());
  }
  SUBCASE("payload larger than a secret block") {
    key.p4 = 65;
    CHECK(!sabmis::validate_key(key).empty());
  }
  SUBCASE("p1 = 0 is rejected even when the arithmetic would be consistent") {
    key.p1 = 0;
    key.p2 = 64;
    CHECK(!sabmis::validate_key(key).empty());
  }
  SUBCASE("multiple violations are all reported") {
    key.r = 1023;
    key.alpha = 0.0;
    key.c = 0;
    try {
      sabmis::to_config(key);
      FAIL("expected config_error");
    } catch (const sabmis::config_error& e) {
      const std::string msg = e.what();
      CHECK(msg.find("r must be even") != std::string::npos);
      CHECK(msg.find("alpha") != std::string::npos);
      CHECK(msg.find("c must be >= 1") != std::string::npos);
    }
  }
}

TEST_CASE("key json round trip is exact") {
  SecretKey key = sabmis::default_key(18446744073709551615ULL);  // max u64
  key.alpha = 0.017;
  key.beta = 1.0 / 3.0;
  key.gamma = -2.25;
  const SecretKey back = sabmis::parse_key(sabmis::format_key(key));
  CHECK(back == key);
}

TEST_CASE("key file round trip is exact") {
  TempDir dir;
  SecretKey key = sabmis::default_key(31337);
  key.c = 5;
  const auto path = dir.file("key.json");
  sabmis::save_key(key, path);
  CHECK(sabmis::load_key(path) == key);
}

TEST_CASE("parser enforces the strict schema") {
  const SecretKey key = sabmis::default_key(1);
  const std::string good = sabmis::format_key(key);

  SUBCASE("unknown field") {
    std::string text = good;
    text.insert(text.find("\"p1\""), "\"extra\": 1,\n  ");
    CHECK_THROWS_WITH_AS(sabmis::parse_key(text), doctest::Contains("unknown field"),
                         sabmis::config_error);
  }
  SUBCASE("missing field") {
    std::string text = good;
    const auto pos = text.find("  \"gamma\"");
    text.erase(pos, text.find('\n', pos) - pos + 1);
    CHECK_THROWS_WITH_AS(sabmis::parse_key(text), doctest::Contains("missing field"),
                         sabmis::config_error);
  }
  SUBCASE("wrong type") {
    std::string text = good;
    const auto pos = text.find("\"p3\": 1600");
    text.replace(pos, 10, "\"p3\": \"oops\"");
    CHECK_THROWS_WITH_AS(sabmis::parse_key(text), doctest::Contains("'p3'"),
                         sabmis::config_error);
  }
  SUBCASE("negative seed") {
    std::string text = good;
    const auto pos = text.find("\"seed\": 1");
    text.replace(pos, 9, "\"seed\": -1");
    CHECK_THROWS_WITH_AS(sabmis::parse_key(text), doctest::Contains("seed"),
                         sabmis::config_error);
  }
  SUBCASE("not even json") {
    CHECK_THROWS_AS(sabmis::parse_key("{nope"), sabmis::config_error);
  }
  SUBCASE("top level must be an object") {
    CHECK_THROWS_AS(sabmis::parse_key("[1,2,3]"), sabmis::config_error);
  }
}

TEST_CASE("load_key reports unreadable paths") {
  CHECK_THROWS_WITH_AS(sabmis::load_key("/definitely/not/here.json"),
                       doctest::Contains("cannot open"), sabmis::config_error);
}

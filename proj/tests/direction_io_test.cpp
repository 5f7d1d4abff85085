#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "steer/direction_io.hpp"
#include "steer/error.hpp"

using namespace steer;

TEST(DirectionJson, ParsesAndRenormalizes) {
  const auto b = parse_direction_set(
      R"({"n": 2, "directions": [[1, 0, 0], [0, 0, 1.0000001]], "label": "x"})");
  ASSERT_EQ(b.size(), 2u);
  EXPECT_DOUBLE_EQ(b[1].vec().norm(), 1.0);
  EXPECT_EQ(parse_direction_set(R"({"directions": [[1,0,0],[0,1,0]]})").size(), 2u);
}

TEST(DirectionJson, Rejections) {
  EXPECT_THROW(parse_direction_set("not json"), ValidationError);
  EXPECT_THROW(parse_direction_set(R"({"n": 2})"), ValidationError);
  EXPECT_THROW(parse_direction_set(R"({"n": 3, "directions": [[1,0,0],[0,1,0]]})"),
               ValidationError);
  EXPECT_THROW(parse_direction_set(R"({"n": 2, "directions": [[1,0],[0,1,0]]})"),
               ValidationError);
  EXPECT_THROW(parse_direction_set(R"({"n": 2, "directions": [[1,0,0],[0,2,0]]})"),
               ValidationError);
  EXPECT_THROW(parse_direction_set(R"({"n": 1, "directions": [[1,0,0]]})"), ValidationError);
}

TEST(DirectionJson, MissingFile) {
  EXPECT_THROW(load_direction_set("/nonexistent/dirs.json"), ValidationError);
}

TEST(DirectionJson, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "steer_dirs_test.json";
  const DirectionSet b({UnitVector3(0, 1, 0), UnitVector3(0.6, 0, 0.8)});
  {
    std::ofstream os(path);
    os << direction_set_to_json(b);
  }
  const auto back = load_direction_set(path);
  std::filesystem::remove(path);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(back[i].vec(), b[i].vec());
}

TEST(DirectionJson, RandomRoundTripIsExact) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const auto b = oracle::random_directions(rng, n);
    const auto back = parse_direction_set(direction_set_to_json(b, trial % 2 ? -1 : 2));
    ASSERT_EQ(back.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(back[i].vec()[k], b[i].vec()[k], 1e-15);
  }
}

TEST(InlineDirections, Parses) {
  const auto b = parse_inline_directions("1,0,0; 0,1,0 ;0,0,1");
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[2].z(), 1.0);
  EXPECT_THROW(parse_inline_directions("1,0,0"), ValidationError);
  EXPECT_THROW(parse_inline_directions("1,0;0,1,0"), ValidationError);
  EXPECT_THROW(parse_inline_directions("a,b,c;0,1,0"), ValidationError);
}

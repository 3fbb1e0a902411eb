#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dropgraph/error.hpp"
#include "dropgraph/synthgen.hpp"
#include "oracles.hpp"

using namespace dropgraph;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kIo;
}

BranchSpec five_arm() {
  BranchSpec spec;
  spec.seed = 4;
  std::vector<double> angles;
  for (int i = 0; i < 5; ++i) angles.push_back(2.0 * std::numbers::pi * i / 5.0);
  spec.components.push_back(star_component({128, 128}, angles, std::vector<double>(5, 50.0), std::vector<double>(5, 6.0)));
  return spec;
}

}  // namespace

TEST_CASE("five-arm star ground truth") {
  const auto [mask, stats] = generate_mask(five_arm());
  CHECK(stats.d == 1);
  CHECK(stats.leaves == 5);
  CHECK(stats.internal == 1);
  CHECK(stats.n == 6);
  CHECK(stats.bn_ratio == 5.0);
  CHECK(oracle::count_components(mask, true) == 1);
  CHECK(oracle::count_holes(mask) == 0);
  CHECK(expected_stats(five_arm()) == stats);
}

TEST_CASE("three single-arm components") {
  BranchSpec spec;
  for (int i = 0; i < 3; ++i)
    spec.components.push_back(star_component({40.0 + 80.0 * i, 128}, {std::numbers::pi / 2}, {50.0}, {5.0}));
  const auto [mask, stats] = generate_mask(spec);
  CHECK(stats.d == 3);
  CHECK(stats.leaves == 6);
  CHECK(stats.internal == 0);
  CHECK_FALSE(stats.bn_ratio);
  CHECK(oracle::count_components(mask, true) == 3);
}

TEST_CASE("spec errors") {
  auto thin = five_arm();
  thin.components[0].arms[0].width = 2.0;
  CHECK(kind_of([&] { generate_mask(thin); }) == ErrorKind::kSpec);

  auto outside = five_arm();
  outside.components[0].nodes[1] = {2.0, 128.0};
  CHECK(kind_of([&] { generate_mask(outside); }) == ErrorKind::kSpec);

  auto overlap = five_arm();
  overlap.components.push_back(star_component({140, 128}, {0.0}, {30.0}, {5.0}));
  CHECK(kind_of([&] { generate_mask(overlap); }) == ErrorKind::kSpec);

  auto cycle = five_arm();
  cycle.components[0].arms[4] = {1, 2, 5.0};
  CHECK(kind_of([&] { generate_mask(cycle); }) == ErrorKind::kSpec);

  BranchSpec empty;
  CHECK(kind_of([&] { generate_mask(empty); }) == ErrorKind::kSpec);
}

TEST_CASE("perturb_mask") {
  const auto mask = generate_mask(five_arm()).first;
  CHECK(perturb_mask(mask, 0.0, 3) == mask);
  const auto a = perturb_mask(mask, 0.01, 3);
  CHECK(a == perturb_mask(mask, 0.01, 3));
  CHECK_FALSE(a == perturb_mask(mask, 0.01, 4));
  std::size_t flips = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) flips += a.pixels()[i] != mask.pixels()[i];
  const double rate = double(flips) / double(mask.size());
  CHECK(rate > 0.007);
  CHECK(rate < 0.013);
  CHECK(kind_of([&] { perturb_mask(mask, 0.06, 1); }) == ErrorKind::kParameter);
  CHECK(kind_of([&] { perturb_mask(mask, -0.01, 1); }) == ErrorKind::kParameter);
}

TEST_CASE("random corpus is deterministic and within its ranges") {
  const auto a = standard_corpus(25, 8);
  const auto b = standard_corpus(25, 8);
  CHECK(a == b);
  CHECK_FALSE(a == standard_corpus(25, 9));
  const CorpusOptions opt;
  for (const auto& spec : a) {
    CHECK(spec.components.size() >= 1);
    CHECK(spec.components.size() <= 4);
    for (const auto& c : spec.components) {
      CHECK(c.arms.size() >= 2);
      CHECK(c.arms.size() <= 8);
      for (const auto& arm : c.arms) {
        CHECK(arm.width >= opt.min_width);
        CHECK(arm.width <= opt.max_width);
        const Point2 p = c.nodes[arm.from], q = c.nodes[arm.to];
        const double len = std::hypot(p.x - q.x, p.y - q.y);
        CHECK(len >= opt.min_length - 1e-9);
        CHECK(len <= opt.max_length + 1e-9);
      }
    }
    const auto [mask, stats] = generate_mask(spec);
    CHECK(stats.d == static_cast<int>(spec.components.size()));
    CHECK(oracle::count_components(mask, true) == stats.d);
  }
}

TEST_CASE("separated tips keep every tip pair apart") {
  CorpusOptions opt;
  opt.max_components = 1;
  opt.separated_tips = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto spec = random_spec(seed, opt);
    REQUIRE(spec.components.size() == 1);
    const auto& c = spec.components[0];
    double longest = 0.0;
    for (const auto& arm : c.arms)
      longest = std::max(longest, std::hypot(c.nodes[arm.from].x - c.nodes[arm.to].x, c.nodes[arm.from].y - c.nodes[arm.to].y));
    for (std::size_t i = 1; i < c.nodes.size(); ++i)
      for (std::size_t j = i + 1; j < c.nodes.size(); ++j)
        CHECK(std::hypot(c.nodes[i].x - c.nodes[j].x, c.nodes[i].y - c.nodes[j].y) > longest);
  }
}

TEST_CASE("spec text round-trips") {
  for (const auto& spec : standard_corpus(10, 21)) CHECK(parse_spec(format_spec(spec)) == spec);
  CHECK(kind_of([] { parse_spec("seed = 1\nwidth = 20\n"); }) == ErrorKind::kSpec);
  CHECK(kind_of([] { parse_spec(format_spec(standard_corpus(1, 1)[0]) + "bogus = 1\n"); }) == ErrorKind::kSpec);
}

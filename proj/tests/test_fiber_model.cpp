#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stabiliscope/fiber_model.hpp"
#include "support/generators.hpp"

using namespace stabiliscope;

namespace {

FiberModel model_012() { return FiberModel({Rat(0), Rat(1, 2), Rat(1)}); }

const PLMap& tent_map() {
  static const PLMap map = build_tf({2, {{4, -3}, {0, 3}}});
  return map;
}

PLMap halving_map() { return PLMap::from_values({Rat(0), Rat(1)}, {Rat(0), Rat(1, 2)}); }

}  // namespace

TEST_CASE("models validate their marks") {
  CHECK_NOTHROW(FiberModel({Rat(0), Rat(1)}));
  CHECK_NOTHROW(model_012());
  CHECK_THROWS_AS(FiberModel({Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(FiberModel({Rat(1, 2), Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(FiberModel({Rat(0), Rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(FiberModel({Rat(0), Rat(1, 2), Rat(1, 3), Rat(1)}),
                  std::invalid_argument);
  // 1/3 and 2/3 are not Farey neighbors, so no blowup chain produces this.
  CHECK_THROWS_AS(FiberModel({Rat(0), Rat(1, 3), Rat(2, 3), Rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("locating points against the marks") {
  CHECK(locate(model_012(), Rat(1, 2)) == Placement::marked_curve(1));
  CHECK(locate(model_012(), Rat(1, 3)) == Placement::gap_point(0));
  CHECK(locate(FiberModel::initial(), Rat(1)) == Placement::marked_curve(1));
  CHECK(locate(model_012(), Rat(0)) == Placement::marked_curve(0));
  CHECK(locate(model_012(), Rat(7, 8)) == Placement::gap_point(1));
  CHECK_THROWS_AS(locate(model_012(), Rat(-1, 2)), std::domain_error);
  CHECK_THROWS_AS(locate(model_012(), Rat(3, 2)), std::domain_error);
}

TEST_CASE("satellite blowups insert the gap's mediant") {
  CHECK(blowup_gap(FiberModel::initial(), 0) == model_012());
  CHECK(blowup_gap(model_012(), 1) ==
        FiberModel({Rat(0), Rat(1, 2), Rat(2, 3), Rat(1)}));
  CHECK(blowup_gap(model_012(), 0) ==
        FiberModel({Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)}));
  CHECK_THROWS_AS(blowup_gap(model_012(), 2), std::out_of_range);
}

TEST_CASE("curve transfer: marked images stay curves, gap images contract") {
  CHECK(curve_image(FiberModel::initial(), tent_map(), 0) == Placement::marked_curve(0));
  CHECK(curve_image(FiberModel::initial(), tent_map(), 1) == Placement::gap_point(0));
  CHECK(curve_image(model_012(), tent_map(), 1) == Placement::gap_point(1));
  CHECK_THROWS_AS(curve_image(model_012(), tent_map(), 3), std::out_of_range);
}

TEST_CASE("point transfer: indeterminate gaps sweep marked ranges") {
  CHECK(point_image(FiberModel::initial(), tent_map(), 0) == PointImage::curves(1, 1));
  CHECK(point_image(model_012(), tent_map(), 1) == PointImage::curves(2, 2));
  CHECK(point_image(FiberModel::initial(), halving_map(), 0) == PointImage::point(0));
  CHECK_THROWS_AS(point_image(model_012(), tent_map(), 2), std::out_of_range);
}

TEST_CASE("a gap image grazing a mark from below stays a point") {
  // Image of (1/2,1) is (1/4,1/2): it touches the mark 1/2 only as an open
  // end, so the transfer target is the single gap point of (0,1/2).
  const PLMap map = halving_map();
  CHECK(point_image(model_012(), map, 1) == PointImage::point(0));
}

TEST_CASE("dot export of the dual path graph") {
  CHECK(to_dot(model_012()) ==
        "graph fiber {\n"
        "  rankdir=LR;\n"
        "  \"0\" -- \"1/2\";\n"
        "  \"1/2\" -- \"1\";\n"
        "}\n");
}

TEST_CASE("random blowup sequences preserve the neighbor invariant") {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 200; ++trial) {
    FiberModel model = FiberModel::initial();
    std::uniform_int_distribution<int> len(0, 30);
    const int steps = len(rng);
    for (int i = 0; i < steps; ++i) {
      std::uniform_int_distribution<std::size_t> gap(0, model.gap_count() - 1);
      const std::size_t g = gap(rng);
      const Rat lo = model.mark(g), hi = model.mark(g + 1);
      model = blowup_gap(model, g);
      CHECK(model.mark(g + 1) == mediant(lo, hi));
    }
    const auto& marks = model.marked();
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
      CHECK(marks[i] < marks[i + 1]);
      CHECK(is_farey_neighbor(marks[i], marks[i + 1]));
    }
  }
}

TEST_CASE("blowing up a gap refines placements without moving them") {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 300; ++trial) {
    const FiberModel before = testsupport::random_model(rng, 12);
    std::uniform_int_distribution<std::size_t> gap_dist(0, before.gap_count() - 1);
    const std::size_t g = gap_dist(rng);
    const FiberModel after = blowup_gap(before, g);

    const Rat q = testsupport::sb_walk(rng, 10);
    const Placement was = locate(before, q);
    const Placement now = locate(after, q);
    if (was.is_curve()) {
      REQUIRE(now.is_curve());
      CHECK(after.mark(now.index) == before.mark(was.index));
    } else if (was.index != g) {
      REQUIRE(now.is_gap());
      CHECK(after.mark(now.index) == before.mark(was.index));
      CHECK(after.mark(now.index + 1) == before.mark(was.index + 1));
    } else {
      // Inside the refined gap: either q is the new mark or it fell into
      // one of the two halves.
      const Rat m = mediant(before.mark(g), before.mark(g + 1));
      if (q == m) {
        CHECK(now == Placement::marked_curve(g + 1));
      } else {
        REQUIRE(now.is_gap());
        CHECK((now.index == g || now.index == g + 1));
        CHECK(before.mark(g) <= after.mark(now.index));
        CHECK(after.mark(now.index + 1) <= before.mark(g + 1));
      }
    }
  }
}

TEST_CASE("point transfer matches a brute-force membership scan") {
  std::mt19937_64 rng(313);
  for (int trial = 0; trial < 150; ++trial) {
    const FiberModel model = testsupport::random_model(rng, 8);
    const PLMap map = testsupport::random_plmap(rng);
    for (std::size_t g = 0; g < model.gap_count(); ++g) {
      const ImageSet image = image_interval(map, model.mark(g), model.mark(g + 1));
      std::vector<std::size_t> inside;
      for (std::size_t k = 0; k < model.curve_count(); ++k)
        if (image.contains(model.mark(k))) inside.push_back(k);

      const PointImage pi = point_image(model, map, g);
      if (inside.empty()) {
        REQUIRE(pi.is_point());
        // The whole image sits inside the reported gap.
        CHECK(model.mark(pi.gap) <= image.lo);
        CHECK(image.hi <= model.mark(pi.gap + 1));
      } else {
        REQUIRE(pi.is_curves());
        CHECK(pi.first == inside.front());
        CHECK(pi.last == inside.back());
        // Membership over an interval image is contiguous in the index.
        CHECK(inside.size() == pi.last - pi.first + 1);
      }
    }
  }
}

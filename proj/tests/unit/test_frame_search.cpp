#include <doctest.h>

#include "qbath/analysis/criteria.hpp"
#include "qbath/analysis/frame_search.hpp"
#include "qbath/scenario/example_bath.hpp"
#include "support/random.hpp"

using namespace qbath;

TEST_CASE("finds frames in every disk portion outside the square") {
  for (auto [a, b] : {std::pair{0.9, -0.3}, {-0.9, 0.3}, {-0.9, -0.3}, {0.9, 0.3}, {0.3, -0.9}, {-0.3, -0.9}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto bl = example_bath_blocks({a, b});
    const auto res = search_entangling_frame(bl.a, bl.b, bl.c);
    REQUIRE(res.found());
    CHECK_FALSE(res.d_tilde_psd);
    CHECK(creation_condition(bl.a, bl.b, bl.c, *res.frame));
    CHECK(res.best_margin < 0.0);
    CHECK(res.evaluations <= 1000);
    const auto again = InitialStateFrame::from_angles(*res.angles);
    CHECK(max_abs_diff(again.u(), res.frame->u()) < 1e-15);
  }
}

TEST_CASE("certifies no creation when D~ is PSD") {
  const auto inside = example_bath_blocks({0.5, 0.4});
  const auto res = search_entangling_frame(inside.a, inside.b, inside.c);
  CHECK_FALSE(res.found());
  CHECK(res.d_tilde_psd);

  testing::Rng rng(80);
  const auto d = testing::random_kossakowski(rng);
  const auto none = search_entangling_frame(d.a(), ComplexMatrix(3), d.c());
  CHECK_FALSE(none.found());
  CHECK(none.d_tilde_psd);
}

TEST_CASE("budget is respected and results are deterministic") {
  const auto bl = example_bath_blocks({-0.3, -0.9});
  for (int budget : {1, 5, 50, 300, 1000, 4000}) {
    FrameSearchOptions opts;
    opts.budget = budget;
    const auto r1 = search_entangling_frame(bl.a, bl.b, bl.c, opts);
    const auto r2 = search_entangling_frame(bl.a, bl.b, bl.c, opts);
    CHECK(r1.evaluations <= budget);
    CHECK(r1.evaluations == r2.evaluations);
    CHECK(r1.best_margin == r2.best_margin);
  }
  FrameSearchOptions zero;
  zero.budget = 0;
  CHECK_THROWS_AS(search_entangling_frame(bl.a, bl.b, bl.c, zero), UsageError);
}

TEST_CASE("grid side shrinks with the budget") {
  CHECK(frame_grid_side(1000, false) == 3);
  CHECK(frame_grid_side(1000, true) == 6);
  CHECK(frame_grid_side(100000, false) == 6);
  CHECK(frame_grid_side(1, false) >= 1);
}

TEST_CASE("same-state search keeps U = V") {
  const ComplexMatrix a{{1.0, cplx(0, -0.5), 0.0}, {cplx(0, 0.5), 1.0, 0.0}, {0.0, 0.0, 0.0}};
  FrameSearchOptions opts;
  opts.same_state = true;
  const auto res = search_entangling_frame(a, a, a, opts);
  REQUIRE(res.found());
  CHECK(max_abs_diff(res.frame->u(), res.frame->v()) == 0.0);
  CHECK(creation_condition(a, a, a, *res.frame));
}

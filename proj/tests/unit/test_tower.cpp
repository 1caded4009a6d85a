#include "doctest.h"
#include "support.hpp"

#include "mfw/error.hpp"

using namespace mfw;
using namespace mfw::testing;

namespace {

TowerPtr cusp_y_first() {
  auto ring = ring_of({"x", "y"});
  return build_tower(ring, MonomialOrder(MonomialOrder::Kind::Lex, {1, 0}),
                     polys(ring, {"x^2", "y^2 - x^3"}), {Rational(1), Rational(0)});
}

}  // namespace

TEST_CASE("complete intersection check") {
  auto ring = ring_of({"x", "y"});
  const auto g = MonomialOrder::grevlex(2);

  const auto ok = validate_ci_presentation(ring, polys(ring, {"x^2", "y^2"}), g);
  CHECK(ok.all_in_n_squared);
  CHECK(ok.quotient_dimension == 0);
  CHECK(ok.regular == true);
  CHECK(ok.passed());

  const auto linear = validate_ci_presentation(ring, polys(ring, {"x"}), g);
  CHECK_FALSE(linear.generators[0].in_n_squared);
  CHECK_FALSE(linear.passed());

  const auto dependent = validate_ci_presentation(ring, polys(ring, {"x^2", "x^2*y"}), g);
  CHECK(dependent.all_in_n_squared);
  CHECK(dependent.quotient_dimension == 1);
  CHECK(dependent.regular == false);
  CHECK_FALSE(dependent.passed());

  const auto cusp = validate_ci_presentation(ring, polys(ring, {"x^2", "y^2 - x^3"}), g);
  CHECK_FALSE(cusp.all_homogeneous);
  CHECK(cusp.regularity_unchecked);
  CHECK_FALSE(cusp.regular.has_value());
}

TEST_CASE("tower construction") {
  SUBCASE("hypersurface") {
    const auto t = uv_tower();
    CHECK(t->codimension() == 1);
    CHECK(t->s_gens().empty());
    CHECK(t->s_basis().basis.empty());
    CHECK(t->x_elem() == poly(t->ring(), "u*v"));
    CHECK(t->x_degree() == 2);
    CHECK(t->is_graded());
  }
  SUBCASE("codimension two") {
    const auto t = y2_tower();
    CHECK(t->x_elem() == poly(t->ring(), "x^2"));
    REQUIRE(t->s_gens().size() == 1);
    CHECK(t->s_gens()[0] == poly(t->ring(), "y^2"));
    CHECK(t->normal_form(poly(t->ring(), "x^2 + y^2 + x*y"), Level::R) == poly(t->ring(), "x*y"));
    CHECK(t->normal_form(poly(t->ring(), "x^2 + y^2"), Level::S) == poly(t->ring(), "x^2"));
  }
  SUBCASE("second coordinate") {
    auto ring = ring_of({"x", "y"});
    const auto t = build_tower(ring, MonomialOrder::grevlex(2), polys(ring, {"x^2", "y^2"}),
                               {Rational(0), Rational(1)});
    CHECK(t->x_elem() == poly(ring, "y^2"));
    CHECK(t->s_gens()[0] == poly(ring, "x^2"));
  }
  SUBCASE("mixed coordinates") {
    auto ring = ring_of({"x", "y"});
    const auto t = build_tower(ring, MonomialOrder::grevlex(2), polys(ring, {"x^2", "y^2"}),
                               {Rational(1), Rational(1)});
    CHECK(t->x_elem() == poly(ring, "x^2 + y^2"));
    CHECK(t->completed_basis()[1] == std::vector<Rational>{1, 0});
    CHECK(t->s_gens()[0] == poly(ring, "x^2"));
  }
  SUBCASE("cusp") {
    const auto t = cusp_y_first();
    CHECK(t->normal_form(poly(t->ring(), "y^2"), Level::S) == poly(t->ring(), "x^3"));
    CHECK(t->normal_form(poly(t->ring(), "y^2"), Level::R).is_zero());
    CHECK_FALSE(t->is_graded());
    CHECK(t->report().regularity_unchecked);
  }
  SUBCASE("errors") {
    auto ring = ring_of({"x", "y"});
    const auto g = MonomialOrder::grevlex(2);
    CHECK_THROWS_AS(build_tower(ring, g, polys(ring, {"x^2", "y^2"}), {0, 0}), ZeroVector);
    CHECK_THROWS_AS(build_tower(ring, g, polys(ring, {"x^2", "y^2"}), {1}), DimensionMismatch);
    CHECK_THROWS_AS(build_tower(ring, g, polys(ring, {"x"}), {1}), PreconditionViolation);
    CHECK_THROWS_AS(build_tower(ring, g, polys(ring, {"x^2", "x^2*y"}), {1, 0}), PreconditionViolation);
    CHECK_NOTHROW(build_tower(ring, g, polys(ring, {"x"}), {1}, true));
    auto f3 = ring_of({"x", "y"}, Field::prime(3));
    CHECK_THROWS_AS(build_tower(ring, g, polys(f3, {"x^2"}), {1}), FieldMismatch);
  }
}

TEST_CASE("tower invariants") {
  for (const auto& t : corpus_towers()) {
    const auto& ring = t->ring();
    Polynomial x(ring);
    for (std::size_t i = 0; i < t->codimension(); ++i) x += t->t_gens()[i].scaled(t->x_coords()[i]);
    CHECK(x == t->x_elem());
    CHECK(t->completed_basis()[0] == t->x_coords());
    for (std::size_t r = 1; r < t->codimension(); ++r) {
      Polynomial xr(ring);
      for (std::size_t i = 0; i < t->codimension(); ++i) {
        xr += t->t_gens()[i].scaled(t->completed_basis()[r][i]);
      }
      CHECK(xr == t->s_gens()[r - 1]);
    }
    CHECK(t->normal_form(t->x_elem(), Level::R).is_zero());
    for (const auto& s : t->s_gens()) {
      CHECK(t->normal_form(s, Level::R).is_zero());
      CHECK(t->normal_form(s, Level::S).is_zero());
    }
    for (const auto& tg : t->t_gens()) CHECK(t->normal_form(tg, Level::R).is_zero());
    if (t->is_graded()) {
      CHECK(quotient_dimension(Ideal{ring, t->t_gens(), t->order()}) ==
            static_cast<int>(ring->vars.size() - t->codimension()));
    }
  }
}

TEST_CASE("ring elements") {
  const auto t = uv_tower();
  const RingElt u(t, Level::R, poly(t->ring(), "u"));
  const RingElt v(t, Level::R, poly(t->ring(), "v"));
  CHECK((u * v).value().is_zero());
  CHECK(u + v == RingElt(t, Level::R, poly(t->ring(), "v + u + u*v")));
  CHECK_THROWS_AS(u * RingElt(t, Level::S, poly(t->ring(), "v")), LevelMismatch);
}

TEST_CASE("matrix algebra") {
  const auto t = sos_tower();
  const auto a = mat(t, "[[u, v], [-v, u]]");
  const auto b = mat(t, "[[u, -v], [v, u]]");
  CHECK(a * b == RingMatrix::x_identity(t, Level::S, 2));
  CHECK(RingMatrix::identity(t, Level::S, 2) * a == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(matrix_algebra(MatrixOp::Transpose, a, a) == mat(t, "[[u, -v], [v, u]]"));
  CHECK(matrix_algebra(MatrixOp::Neg, a, a) + a == RingMatrix::zero(t, Level::S, 2, 2));
  CHECK(a.first_difference(b) == std::make_pair(std::size_t{0}, std::size_t{1}));
  CHECK_THROWS_AS(a * mat(t, "[[u, v, 1]]"), DimensionMismatch);
  CHECK_THROWS_AS(a * reduce_level(b, Level::R), LevelMismatch);
  CHECK(a.format() == "[[u, v], [-v, u]]");

  const auto blk = RingMatrix::block(a, RingMatrix::zero(t, Level::S, 2, 1),
                                     RingMatrix::zero(t, Level::S, 1, 2), mat(t, "[[1]]"));
  CHECK(blk.rows() == 3);
  CHECK(blk.submatrix(0, 0, 2, 2) == a);
  CHECK(RingMatrix::block_diagonal(a, RingMatrix::zero(t, Level::S, 0, 0)) == a);

  const auto empty = RingMatrix::zero(t, Level::S, 0, 3);
  CHECK((RingMatrix::zero(t, Level::S, 2, 0) * empty).rows() == 2);
  CHECK((RingMatrix::zero(t, Level::S, 2, 0) * empty).is_zero());
}

TEST_CASE("level reduction") {
  const auto uv = uv_tower();
  CHECK(reduce_level(mat(uv, "[[u*v]]"), Level::R).is_zero());
  CHECK(reduce_level(RingMatrix::zero(uv, Level::S, 2, 3), Level::R).is_zero());
  CHECK_THROWS_AS(reduce_level(mat(uv, "[[u]]", Level::R), Level::S), LevelMismatch);
  const auto cusp = cusp_y_first();
  CHECK(reduce_level(mat(cusp, "[[y^2]]", Level::Q), Level::S) == mat(cusp, "[[x^3]]"));
  CHECK(mat(uv, "[[u^2*v, 0]]").divided_by_x() == mat(uv, "[[u, 0]]"));
  CHECK_THROWS_AS(mat(uv, "[[u*v + 1]]").divided_by_x(), NotDivisible);
}

TEST_CASE("reduction is a ring map on matrices") {
  Random rng(31);
  for (const auto& t : corpus_towers()) {
    for (int k = 0; k < 25; ++k) {
      const auto a = rng.matrix(t, 2, 3, 3, 3, Level::Q);
      const auto b = rng.matrix(t, 3, 2, 3, 3, Level::Q);
      const auto c = rng.matrix(t, 2, 3, 3, 3, Level::Q);
      for (Level to : {Level::S, Level::R}) {
        CHECK(reduce_level(a * b, to) == reduce_level(a, to) * reduce_level(b, to));
        CHECK(reduce_level(a + c, to) == reduce_level(a, to) + reduce_level(c, to));
        CHECK(reduce_level(a.transpose(), to) == reduce_level(a, to).transpose());
      }
    }
  }
}

TEST_CASE("determinant") {
  const auto t = sos_tower();
  CHECK(determinant(mat(t, "[[u, v], [-v, u]]")) == poly(t->ring(), "u^2 + v^2"));
  CHECK(determinant(RingMatrix::zero(t, Level::S, 0, 0)) == poly(t->ring(), "1"));
  const auto uv = uv_tower();
  CHECK(determinant(mat(uv, "[[u, 1], [0, v]]", Level::R)).is_zero());
  CHECK_THROWS_AS(determinant(mat(t, "[[u, v]]")), DimensionMismatch);
}

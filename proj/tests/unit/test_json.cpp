#include <gtest/gtest.h>

#include "schurext/errors.hpp"
#include "schurext/json_io.hpp"

using namespace schurext;
using comb::Partition;
using lin::Ring;

namespace {

template <class T>
T round_trip(const T& x) {
  const json j = x;
  return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST(Json, Integers) {
  EXPECT_EQ(integer_to_json(Integer(-42)), json(-42));
  Integer big = 1;
  for (int i = 0; i < 80; ++i) big *= 3;
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_EQ(integer_from_json(integer_to_json(-big)), -big);
  EXPECT_EQ(integer_from_json(json("17")), 17);
  EXPECT_THROW(integer_from_json(json("x1")), ParseError);
  const std::map<int, std::size_t> dims{{0, 1}, {3, 2}};
  EXPECT_EQ(dims_from_json(dims_to_json(dims)), dims);
}

TEST(Json, LinearAlgebraTypes) {
  for (auto r : {Ring::integers(), Ring::prime_field(2), Ring::prime_field(7)}) EXPECT_EQ(round_trip(r), r);
  const lin::HomologyGroup g{Ring::integers(), 2, {2, 6}};
  EXPECT_EQ(round_trip(g), g);
  const auto m = lin::IntegerMatrix::from_rows({{1, -2, 0}, {0, 0, 5}});
  EXPECT_EQ(round_trip(m), m);
  EXPECT_EQ(round_trip(lin::IntegerMatrix(0, 3)).cols(), 3u);
  const lin::ChainComplex c(Ring::integers(), 2, 4, {{2, 1}, {3, 2}, {4, 2}},
                            {{3, lin::IntegerMatrix::from_rows({{-2, 2}})},
                             {4, lin::IntegerMatrix::from_rows({{3, 0}, {3, 0}})}});
  const auto back = round_trip(c);
  EXPECT_EQ(back, c);
  EXPECT_EQ(lin::homology(back, 3), lin::homology(c, 3));
}

TEST(Json, DomainTypes) {
  EXPECT_EQ(round_trip(Partition::parse("5,1^3")), Partition::parse("5,1,1,1"));
  EXPECT_EQ(json(Partition::parse("2,2,2")), json("2,2,2"));
  const auto t = spec::ext_schur_query(Partition::parse("2,2"), Partition::parse("1^4"), Ring::prime_field(2));
  EXPECT_EQ(round_trip(t), t);
  const auto ti = spec::ext_from_hook(Partition::parse("1,1"), poly::divided(2));
  EXPECT_EQ(round_trip(ti), ti);
  const auto s = series::e_series(3, 2, 4, 12);
  EXPECT_EQ(round_trip(s), s);
  const json sj = s;
  EXPECT_EQ(sj.at("tmax"), 4);
  EXPECT_EQ(sj.at("umax"), 12);
  EXPECT_EQ(sj.at("coeffs").size(), s.coeffs().size());
  const auto r = res::weyl_resolution_shape(Partition::parse("2,2,2"));
  EXPECT_EQ(round_trip(r), r);
  const json rj = r;
  EXPECT_EQ(rj.at("mu"), "2,2,2");
  EXPECT_EQ(rj.at("flavor"), "divided");
  EXPECT_EQ(rj.at("count"), 20);
  EXPECT_EQ(rj.at("length"), 4);
  EXPECT_EQ(rj.at("terms").at("1"), json({"4,2", "4,2", "3,2,1", "3,2,1"}));
  CheckReport rep{"demo", 3, {"bad case"}, {"a note"}};
  const auto rb = round_trip(rep);
  EXPECT_EQ(rb.name, rep.name);
  EXPECT_EQ(rb.cases, rep.cases);
  EXPECT_EQ(rb.failures, rep.failures);
  EXPECT_EQ(rb.notes, rep.notes);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(json::parse(R"({"ring":"Q"})").get<Ring>(), std::exception);
  EXPECT_THROW(json::parse(R"("2,x")").get<Partition>(), std::exception);
  EXPECT_THROW(json::parse(R"({"rows":2,"cols":2,"entries":[[1]]})").get<lin::IntegerMatrix>(), std::exception);
}

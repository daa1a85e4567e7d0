#include <functional>
#include <random>

#include "doctest.h"
#include "scd/io.hpp"
#include "scd/render.hpp"
#include "scd/verify.hpp"

using namespace scd;

namespace {

template <class T, class Parse>
void round_trip(const T& value, Parse parse) {
  const Json j = to_json(value);
  const Json again = parse_json(j.dump());
  CHECK(parse(again) == value);
  CHECK(to_json(parse(again)).dump() == j.dump());
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::malformed_input;
}

}  // namespace

TEST_CASE("partitions round-trip in every family") {
  const auto f9 = Field::of_order(9, {1, 0, 1});
  for (Family fam : {Family::D, Family::C, Family::B})
    for (int n = 0; n <= 2; ++n)
      for (const auto& l : enumerate_partitions(fam, n, f9)) round_trip(l, [](const Json& j) { return partition_from_json(j); });
}

TEST_CASE("matrices round-trip") {
  std::mt19937_64 rng(5);
  const auto f = Field::prime(7);
  for (int k = 0; k < 20; ++k) {
    UTMatrix m(f, 1 + k % 6);
    for (int r = 0; r < m.size(); ++r)
      for (int c = r + 1; c < m.size(); ++c) m.set(r, c, static_cast<Code>(rng() % 7));
    round_trip(m, [](const Json& j) { return matrix_from_json(j); });
  }
}

TEST_CASE("cyclotomic values round-trip") {
  const CycValue v(5, {mpq_class(1, 3), 0, mpq_class(-2, 9), 7});
  CHECK(cyc_from_json(parse_json(to_json(v).dump()), 5) == v);
  CHECK(cyc_from_json(to_json(CycValue(3)), 3).is_zero());
  CHECK(to_csv_cell(CycValue::rational(3, mpq_class(1, 9))) == "1/9|1 0");
}

TEST_CASE("elements, tensors and tables round-trip") {
  const auto f = Field::prime(3);
  HopfAlgebra H(Family::D, f);
  const auto lambda = LabelledPartition::from_plus(Family::D, 3, f, {{1, 2, 1}, {2, -3, 2}});
  const SCElement x = H.antipode(SCElement::symbol(Basis::kappa, lambda));
  round_trip(x, [](const Json& j) { return element_from_json(j); });
  round_trip(H.coproduct(x), [](const Json& j) { return tensor_from_json(j); });

  CharTable t = char_table(Family::D, 2, f);
  GroupTable g = enumerate_group(2, f);
  superclass_partition(g);
  attach_class_sizes(t, g);
  const CharTable back = table_from_json(parse_json(to_json(t).dump()));
  CHECK(back.labels == t.labels);
  CHECK(back.values == t.values);
  CHECK(back.class_sizes == t.class_sizes);
}

TEST_CASE("census documents parse back label by label") {
  const auto f = Field::prime(3);
  GroupTable g = enumerate_group(2, f);
  superclass_partition(g);
  const Json j = parse_json(census_to_json(g).dump());
  CHECK(j["order"] == 9);
  std::size_t k = 0;
  for (const auto& c : j["classes"]) {
    const LabelledPartition l = partition_from_json(c["label"]);
    CHECK(l == g.labels[k]);
    CHECK(classify(matrix_from_json(c["representative"]), 2) == l);
    CHECK(c["size"] == g.class_sizes[k]);
    ++k;
  }
}

TEST_CASE("reports round-trip without timings") {
  Report r;
  CheckResult a("alpha");
  a.expect(true, "ok");
  a.seconds = 1.5;
  CheckResult b("beta");
  b.informational = true;
  b.note = "reading";
  b.expect(false, "counterexample");
  r.checks = {a, b};
  const Json j = to_json(r);
  CHECK(j.dump().find("seconds") == std::string::npos);
  const Report back = report_from_json(parse_json(j.dump()));
  CHECK(to_json(back).dump() == j.dump());
  CHECK(back.passed());
}

TEST_CASE("malformed documents") {
  CHECK(kind_of([] { parse_json("{\"q\": 3,"); }) == ErrorKind::malformed_input);
  CHECK(kind_of([] { partition_from_json(parse_json(R"({"family":"D","n":2,"q":3})")); }) ==
        ErrorKind::malformed_input);
  CHECK(kind_of([] { partition_from_json(parse_json(R"({"family":"D","n":2,"q":3,"plus":[[1,2,5]]})")); }) ==
        ErrorKind::invalid_partition);
  CHECK(kind_of([] { partition_from_json(parse_json(R"({"family":"D","n":2,"q":4,"plus":[]})")); }) ==
        ErrorKind::invalid_field);
  CHECK(kind_of([] { matrix_from_json(parse_json(R"({"size":2,"q":3,"entries":[0,1,0]})")); }) ==
        ErrorKind::malformed_input);
  CHECK(kind_of([] {
          element_from_json(parse_json(R"({"basis":"kappa","family":"D","q":3,"terms":[{"coef":"x","label":{}}]})"));
        }) == ErrorKind::malformed_input);
  CHECK(kind_of([] { partition_from_json(parse_json(R"({"family":"D","n":1,"q":5,"plus":[]})"), Field::prime(3)); }) ==
        ErrorKind::field_mismatch);
  CHECK(error_json(ErrorKind::budget_exceeded, "too big").dump() ==
        R"({"error":{"kind":"budget_exceeded","message":"too big"}})");
}

TEST_CASE("svg arc diagram") {
  const auto f = Field::prime(3);
  const auto l = LabelledPartition::from_plus(Family::D, 2, f, {{1, -2, 2}});
  const std::string svg = render_svg(l);
  CHECK(svg.starts_with("<svg"));
  CHECK(svg.find("<title>D2{(1,-2,2)}</title>") != std::string::npos);
  // Two arcs (the pair and its mirror), four nodes with signed labels.
  std::size_t paths = 0, circles = 0;
  for (std::size_t at = 0; (at = svg.find("<path", at)) != std::string::npos; ++at) ++paths;
  for (std::size_t at = 0; (at = svg.find("<circle", at)) != std::string::npos; ++at) ++circles;
  CHECK(paths == 2);
  CHECK(circles == 4);
  CHECK(svg.find(">-2</text>") != std::string::npos);
  CHECK(svg == render_svg(l));
}

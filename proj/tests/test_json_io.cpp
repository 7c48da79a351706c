// Copyright 2026 hardybox contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <string>

#include "hardybox/box.hpp"
#include "hardybox/errors.hpp"
#include "hardybox/hardy.hpp"
#include "hardybox/json_io.hpp"
#include "hardybox/quantum.hpp"

namespace {

using hardybox::BipartiteBox;
using hardybox::box_from_json;
using hardybox::box_to_json;
using hardybox::coefficients_from_json;
using hardybox::coefficients_to_json;
using hardybox::ConvexWeights;
using hardybox::hardy_box;
using hardybox::HardyCoefficients;
using hardybox::InvalidWeights;
using hardybox::ParseError;
using hardybox::SetupDocument;
using hardybox::setup_from_json;
using hardybox::setup_to_json;
using hardybox::VertexId;
using hardybox::weights_from_json;
using hardybox::weights_to_json;
namespace quantum = hardybox::quantum;

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("boxes survive serialization exactly") {
  const BipartiteBox original = hardy_box(
      HardyCoefficients(0.1, 0.15, 0.2, 0.25, 0.2, 0.1));
  const BipartiteBox parsed = box_from_json(box_to_json(original));
  CHECK(parsed.grid() == original.grid());

  // Compact and indented renderings decode to the same box.
  const std::string compact = box_to_json(original, 0);
  const std::string pretty = box_to_json(original, 2);
  CHECK(compact.find('\n') == std::string::npos);
  CHECK(pretty.find('\n') != std::string::npos);
  CHECK(box_from_json(compact).grid() == box_from_json(pretty).grid());

  // Labels ride along.
  const BipartiteBox named(original.grid(), "witness #7");
  CHECK(box_from_json(box_to_json(named)).label() == "witness #7");
  CHECK(parsed.label().empty());

  // Every extreme point round-trips bit for bit.
  for (const VertexId& id : hardybox::all_vertices()) {
    const BipartiteBox vertex = hardybox::vertex_box(id);
    const BipartiteBox back = box_from_json(box_to_json(vertex));
    CHECK(back.grid() == vertex.grid());
    CHECK(back.label() == vertex.label());
  }
}

TEST_CASE("malformed box documents are rejected") {
  CHECK_THROWS_AS(box_from_json("not json at all"), ParseError);
  CHECK_THROWS_AS(box_from_json("[]"), ParseError);
  CHECK_THROWS_AS(box_from_json("{}"), ParseError);
  CHECK_THROWS_AS(box_from_json(R"({"p": 3})"), ParseError);
  // Wrong row count.
  CHECK_THROWS_AS(box_from_json(
      R"({"p": [[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]]})"),
      ParseError);
  // Wrong column count.
  CHECK_THROWS_AS(box_from_json(
      R"({"p": [[0.5,0.5],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]]})"),
      ParseError);
  // Non-numeric entry.
  CHECK_THROWS_AS(box_from_json(
      R"({"p": [[0.25,"x",0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]]})"),
      ParseError);
  // Row sum off by a milli.
  CHECK_THROWS_AS(box_from_json(
      R"({"p": [[0.251,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]]})"),
      ParseError);
  // Entry clearly negative.
  CHECK_THROWS_AS(box_from_json(
      R"({"p": [[-0.001,0.501,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]]})"),
      ParseError);
  // Label of the wrong type.
  CHECK_THROWS_AS(box_from_json(
      R"({"p": [[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]], "label": 7})"),
      ParseError);
}

TEST_CASE("parsing forgives serialization noise") {
  // A tiny negative entry is clamped to zero.
  const BipartiteBox clamped = box_from_json(
      R"({"p": [[-1e-10,0.5,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]]})");
  CHECK(clamped.entry(0, 0) == 0.0);
  // Row sums within the serialization tolerance pass.
  const BipartiteBox loose = box_from_json(
      R"({"p": [[0.2500001,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25],[0.25,0.25,0.25,0.25]]})");
  CHECK(loose.entry(0, 0) == 0.2500001);
}

TEST_CASE("coefficient documents round-trip and validate") {
  const HardyCoefficients c(0.1, 0.15, 0.2, 0.25, 0.2, 0.1);
  const HardyCoefficients back = coefficients_from_json(coefficients_to_json(c));
  CHECK(back.as_array() == c.as_array());

  CHECK_THROWS_AS(coefficients_from_json("{}"), ParseError);
  CHECK_THROWS_AS(coefficients_from_json(R"({"c": [0.5, 0.5]})"), ParseError);
  CHECK_THROWS_AS(coefficients_from_json(R"({"c": "zero"})"), ParseError);
  CHECK_THROWS_AS(
      coefficients_from_json(R"({"c": [0.1, 0.1, 0.1, 0.1, 0.1, 0.4, 0.1]})"),
      ParseError);
  // Well-formed but off the simplex: domain error, not parse error.
  CHECK_THROWS_AS(
      coefficients_from_json(R"({"c": [0.1, 0.1, 0.1, 0.1, 0.1, 0.4]})"),
      InvalidWeights);
  CHECK_THROWS_AS(
      coefficients_from_json(R"({"c": [-0.1, 0.3, 0.1, 0.2, 0.1, 0.4]})"),
      InvalidWeights);
}

TEST_CASE("measurement documents round-trip with and without the state") {
  const quantum::ReferenceExample ref = quantum::reference_example();

  const SetupDocument with_state =
      setup_from_json(setup_to_json(ref.state, ref.setup));
  REQUIRE(with_state.state.has_value());
  CHECK(with_state.state->beta == ref.state.beta);
  CHECK(with_state.state->gamma == ref.state.gamma);
  CHECK(with_state.setup.a0.theta == ref.setup.a0.theta);
  CHECK(with_state.setup.a0.phi == ref.setup.a0.phi);
  CHECK(with_state.setup.a1.theta == ref.setup.a1.theta);
  CHECK(with_state.setup.b0.theta == ref.setup.b0.theta);
  CHECK(with_state.setup.b1.theta == ref.setup.b1.theta);
  CHECK(with_state.setup.b1.phi == ref.setup.b1.phi);

  const SetupDocument bare = setup_from_json(setup_to_json(ref.setup));
  CHECK_FALSE(bare.state.has_value());
  CHECK(bare.setup.b0.theta == ref.setup.b0.theta);

  // Angles outside the polar range are schema violations ...
  CHECK_THROWS_AS(setup_from_json(
      R"({"A": [4.2, 0.0], "Ap": [1.0, 0.0], "B": [1.0, 0.0], "Bp": [1.0, 0.0]})"),
      ParseError);
  // ... but a hair below zero is treated as zero.
  const SetupDocument grazing = setup_from_json(
      R"({"A": [-1e-12, 0.0], "Ap": [1.0, 0.0], "B": [1.0, 0.0], "Bp": [1.0, 0.0]})");
  CHECK(grazing.setup.a0.theta == 0.0);
  // Azimuths wrap on the way in.
  const SetupDocument wrapped = setup_from_json(
      R"({"A": [1.0, 7.0], "Ap": [1.0, 0.0], "B": [1.0, 0.0], "Bp": [1.0, 0.0]})");
  CHECK(wrapped.setup.a0.phi ==
        doctest::Approx(7.0 - 2.0 * kPi).epsilon(1e-15));

  CHECK_THROWS_AS(setup_from_json(R"({"A": [1.0, 0.0]})"), ParseError);
  CHECK_THROWS_AS(setup_from_json(
      R"({"A": [1.0], "Ap": [1.0, 0.0], "B": [1.0, 0.0], "Bp": [1.0, 0.0]})"),
      ParseError);
  CHECK_THROWS_AS(setup_from_json(
      R"({"A": [1.0, 0.0], "Ap": [1.0, 0.0], "B": [1.0, 0.0], "Bp": [1.0, 0.0], "state": [0.5]})"),
      ParseError);
}

TEST_CASE("mixture documents round-trip and validate") {
  const ConvexWeights weights({{VertexId::parse("L0001"), 0.25},
                               {VertexId::parse("NL001"), 0.75}});
  const ConvexWeights back = weights_from_json(weights_to_json(weights));
  REQUIRE(back.entries().size() == 2);
  CHECK(back.entries()[0].vertex == weights.entries()[0].vertex);
  CHECK(back.entries()[0].weight == 0.25);
  CHECK(back.entries()[1].vertex == weights.entries()[1].vertex);
  CHECK(back.entries()[1].weight == 0.75);

  CHECK_THROWS_AS(weights_from_json("{}"), ParseError);
  CHECK_THROWS_AS(weights_from_json(R"({"weights": 5})"), ParseError);
  CHECK_THROWS_AS(weights_from_json(R"({"weights": [{"vertex": "L0001"}]})"),
                  ParseError);
  CHECK_THROWS_AS(
      weights_from_json(R"({"weights": [{"vertex": "X0001", "w": 1.0}]})"),
      ParseError);
  // Well-formed documents with bad combinations are domain errors.
  CHECK_THROWS_AS(
      weights_from_json(
          R"({"weights": [{"vertex": "L0001", "w": 0.5}, {"vertex": "L0001", "w": 0.5}]})"),
      InvalidWeights);
  CHECK_THROWS_AS(
      weights_from_json(R"({"weights": [{"vertex": "L0001", "w": 0.7}]})"),
      InvalidWeights);
}

}  // TEST_SUITE

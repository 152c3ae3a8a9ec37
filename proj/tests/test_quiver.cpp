#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "qsi/quiver.hpp"

using namespace qsi;

TEST_CASE("parse_quiver accepts the smallest acyclic quiver with an arrow") {
  Quiver Q = parse_quiver(R"({"vertices":["1","2"],"arrows":[{"tail":"2","head":"1"}]})");
  CHECK(Q.n() == 2);
  CHECK(Q.arrow_count() == 1);
  CHECK(Q.is_acyclic());
  CHECK(Q.topo_order() == std::vector<int>{1, 0});  // source 2 first
}

TEST_CASE("parse_quiver accepts T_{3,3,2}") {
  Quiver Q = parse_quiver(R"({"vertices":["x1","x2","y1","y2","z1","c"],
    "arrows":[{"tail":"x1","head":"x2"},{"tail":"x2","head":"c"},
              {"tail":"y1","head":"y2"},{"tail":"y2","head":"c"},
              {"tail":"z1","head":"c"}]})");
  CHECK(Q.n() == 6);
  CHECK(Q.arrow_count() == 5);
  CHECK(Q.is_acyclic());
}

TEST_CASE("parse_quiver rejects oriented cycles unless allowed") {
  std::string text = R"({"vertices":["1","2"],
    "arrows":[{"tail":"1","head":"2"},{"tail":"2","head":"1"}]})";
  CHECK_THROWS_AS(parse_quiver(text), DomainError);
  std::string ok = R"({"vertices":["1","2"],"allows_cycles":true,
    "arrows":[{"tail":"1","head":"2"},{"tail":"2","head":"1"}]})";
  CHECK(!parse_quiver(ok).is_acyclic());
}

TEST_CASE("parse_quiver rejects dangling endpoints and duplicate ids") {
  CHECK_THROWS_AS(parse_quiver(R"({"vertices":["1"],"arrows":[{"tail":"1","head":"2"}]})"),
                  DomainError);
  CHECK_THROWS_AS(parse_quiver(R"({"vertices":["1","1"],"arrows":[]})"), DomainError);
  CHECK_THROWS_AS(parse_quiver("not json"), DomainError);
}

TEST_CASE("euler form on the Kronecker quiver") {
  Quiver Q = fx::kronecker(2);
  CHECK(euler_form(Q, IVec{1, 0}, IVec{0, 1}) == -2);
  CHECK(euler_form(Q, IVec{1, 0}, IVec{1, 0}) == 1);  // simple root
  CHECK(euler_form(Q, IVec{0, 1}, IVec{0, 1}) == 1);
}

TEST_CASE("euler form on T_{3,3,2}: the perpendicular paper pair") {
  Quiver Q = fx::t332();
  IVec alpha{1, 3, 1, 2, 2, 4};  // x:1,3  y:1,2  z:2  c:4
  IVec beta{1, 2, 0, 2, 1, 3};
  CHECK(euler_form(Q, alpha, beta) == 0);
}

TEST_CASE("euler form is bilinear") {
  Quiver Q = fx::t332();
  std::vector<IVec> vecs = {{1, 3, 1, 2, 2, 4}, {1, 2, 0, 2, 1, 3}, {0, 1, 1, 1, 0, 2},
                            {2, 0, 0, 1, 1, 1}};
  for (auto& a : vecs)
    for (auto& a2 : vecs)
      for (auto& b : vecs) {
        CHECK(euler_form(Q, ivec_add(a, a2), b) == euler_form(Q, a, b) + euler_form(Q, a2, b));
        CHECK(euler_form(Q, b, ivec_add(a, a2)) == euler_form(Q, b, a) + euler_form(Q, b, a2));
      }
}

TEST_CASE("left and right weights evaluate to the Euler pairings") {
  Quiver Q = fx::kronecker(2);
  CHECK(left_weight(Q, DimVector{{1, 0}}).v == IVec{1, -2});
  CHECK(left_weight(Q, DimVector{{0, 0}}).v == IVec{0, 0});

  Quiver A = fx::a2();
  CHECK(right_weight(A, DimVector{{0, 1}}).v == IVec{1, -1});

  for (auto& a : {IVec{1, 2}, IVec{0, 3}, IVec{2, 2}})
    for (auto& g : {IVec{1, 0}, IVec{0, 1}, IVec{2, 1}}) {
      CHECK(weight_eval(left_weight(Q, DimVector{a}), g) == euler_form(Q, a, g));
      CHECK(weight_eval(right_weight(Q, DimVector{a}), g) == -euler_form(Q, g, a));
    }
}

TEST_CASE("doubling a one-loop vertex gives the Kronecker shape") {
  Quiver Q = Quiver::make({"1"}, {{0, 0}}, true);
  DoubledQuiver D = double_quiver(Q);
  CHECK(D.doubled.n() == 2);
  CHECK(D.doubled.arrow_count() == 2);
  CHECK(D.doubled.is_acyclic());
  for (auto& [t, h] : D.doubled.arrows()) {
    CHECK(t == 0);
    CHECK(h == 1);
  }
}

TEST_CASE("doubling the paper's three-vertex example: 6 vertices, 7 arrows") {
  DoubledQuiver D = double_quiver(fx::doubling_example());
  CHECK(D.doubled.n() == 6);
  CHECK(D.doubled.arrow_count() == 7);
  CHECK(D.doubled.is_acyclic());
}

TEST_CASE("doubling an acyclic quiver stays acyclic and bipartite") {
  DoubledQuiver D = double_quiver(fx::t332());
  CHECK(D.doubled.is_acyclic());
  for (auto& [t, h] : D.doubled.arrows()) {
    CHECK(t % 2 == 0);  // level 0
    CHECK(h % 2 == 1);  // level 1
  }
}

TEST_CASE("doubling: sigma-hat of alpha-hat doubles, tau of alpha-hat vanishes") {
  Quiver Q = fx::doubling_example();
  DoubledQuiver D = double_quiver(Q);
  for (auto& a : {IVec{1, 2, 1}, IVec{2, 0, 3}, IVec{1, 1, 1}})
    for (auto& s : {IVec{1, -1, 0}, IVec{2, 3, -4}}) {
      DimVector ahat = D.lift_dim(DimVector{a});
      Weight shat = D.lift_weight(Weight{s});
      CHECK(weight_eval(shat, ahat.v) == 2 * weight_eval(Weight{s}, a));
      CHECK(weight_eval(D.tau, ahat.v) == 0);
    }
}

TEST_CASE("dimension vector and weight JSON round trips") {
  Quiver Q = fx::t332();
  DimVector d = parse_dim_vector(Q, R"({"x1":1,"x2":3,"y1":1,"y2":2,"z1":2,"c":4})");
  CHECK(d.v == IVec{1, 3, 1, 2, 2, 4});
  CHECK_THROWS_AS(parse_dim_vector(Q, R"({"x1":1})"), DomainError);
  CHECK_THROWS_AS(parse_dim_vector(Q, R"({"x1":-1,"x2":3,"y1":1,"y2":2,"z1":2,"c":4})"),
                  DomainError);
  Weight w = parse_weight(Q, R"({"x1":1,"x2":2,"y1":1,"y2":1,"z1":2,"c":-3})");
  CHECK(w.v == IVec{1, 2, 1, 1, 2, -3});
  Quiver back = parse_quiver(quiver_to_json(Q));
  CHECK(back.digest() == Q.digest());
}

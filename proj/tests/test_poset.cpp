#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "kjdt/catalog.hpp"
#include "kjdt/poset.hpp"
#include "oracles.hpp"

using namespace kjdt;

namespace {

Bits bits_of(const Poset& p, const std::vector<std::string>& names) {
  Bits b(p.size());
  for (const auto& n : names) b.set(p.index_of(n));
  return b;
}

}  // namespace

TEST_CASE("leq on the running 6-element example") {
  PosetPtr q = oracle::poset_q();
  CHECK(q->leq("(1,1)", "(2,2)"));
  for (const auto& x : q->elements()) CHECK(q->leq(x, x));
  CHECK_FALSE(q->leq("(1,2)", "(2,1)"));
  // full agreement with the componentwise oracle
  for (const auto& a : q->elements())
    for (const auto& b : q->elements())
      CHECK(q->leq(a, b) == oracle::componentwise_leq(a, b));
  CHECK_THROWS_AS(q->leq("(9,9)", "(1,1)"), UnknownElement);
}

TEST_CASE("leq is a partial order") {
  for (PosetPtr p : {oracle::poset_q(), dtd(4).poset, rectangle(2, 3).poset}) {
    for (int x = 0; x < p->size(); ++x)
      for (int y = 0; y < p->size(); ++y) {
        if (x != y && p->leq(x, y)) CHECK_FALSE(p->leq(y, x));
        for (int z = 0; z < p->size(); ++z)
          if (p->leq(x, y) && p->leq(y, z)) CHECK(p->leq(x, z));
      }
  }
}

TEST_CASE("constructor normalizes redundant relations to the Hasse diagram") {
  // the full order relation of a 3-chain reduces to two covers
  PosetPtr p = Poset::make("c3", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto covers = p->cover_pairs();
  REQUIRE(covers.size() == 2);
  CHECK(p->covers(p->index_of("a"), p->index_of("b")));
  CHECK(p->covers(p->index_of("b"), p->index_of("c")));
  CHECK_FALSE(p->covers(p->index_of("a"), p->index_of("c")));
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(Poset::make("", {}, {}), InvalidPoset);
  CHECK_THROWS_AS(Poset::make("", {"a", "a"}, {}), InvalidPoset);
  CHECK_THROWS_AS(Poset::make("", {"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidPoset);
  CHECK_THROWS_AS(Poset::make("", {"a", "b"}, {}), InvalidPoset);  // disconnected
}

TEST_CASE("order ideals of the running example") {
  PosetPtr q = oracle::poset_q();
  std::vector<Bits> ideals = order_ideals(*q);
  CHECK(ideals.size() == 14);  // 13 nonempty straight shapes plus the empty ideal
  CHECK(ideals.front().empty());
  for (const Bits& ideal : ideals) CHECK(is_order_ideal(*q, ideal));
  // canonical order: size, then lexicographic membership
  for (size_t i = 1; i < ideals.size(); ++i) CHECK(ideals[i - 1] < ideals[i]);
}

TEST_CASE("order ideal counts: chains and the diamond") {
  for (int n = 1; n <= 6; ++n)
    CHECK(order_ideals(*chain(n).poset).size() == (size_t)n + 1);
  PosetPtr diamond = dtd(3).poset;
  std::vector<Bits> ideals = order_ideals(*diamond);
  CHECK(ideals.size() == 6);
  CHECK(ideals == oracle::brute_force_ideals(*diamond));
}

TEST_CASE("order ideals agree with power-set filtering on small posets") {
  for (int n = 1; n <= 5; ++n)
    for (PosetPtr p : gen::connected_posets(n))
      CHECK(order_ideals(*p) == oracle::brute_force_ideals(*p));
}

TEST_CASE("ideal collection is a distributive lattice") {
  for (PosetPtr p : {oracle::poset_q(), dtd(4).poset}) {
    std::vector<Bits> ideals = order_ideals(*p);
    std::set<Bits> all(ideals.begin(), ideals.end());
    for (const Bits& a : ideals)
      for (const Bits& b : ideals) {
        CHECK(all.count(a | b));
        CHECK(all.count(a & b));
      }
  }
}

TEST_CASE("inner corners") {
  PosetPtr q = oracle::poset_q();
  Bits lambda = bits_of(*q, {"(1,1)", "(1,2)", "(2,1)"});
  CHECK(inner_corners(*q, lambda) == bits_of(*q, {"(1,2)", "(2,1)"}));
  CHECK(inner_corners(*q, Bits(q->size())).empty());
}

TEST_CASE("inner corners form an antichain") {
  for (int n = 1; n <= 5; ++n)
    for (PosetPtr p : gen::connected_posets(n))
      for (const Bits& lambda : order_ideals(*p)) {
        Bits corners = inner_corners(*p, lambda);
        corners.for_each([&](int x) {
          corners.for_each([&](int y) {
            if (x != y) CHECK_FALSE(p->leq(x, y));
          });
        });
      }
}

TEST_CASE("slant sum size and minimum-prepending") {
  PosetPtr q = oracle::poset_q();
  PosetPtr sum = slant_sum(*chain(1).poset, "c1", *q);
  CHECK(sum->size() == 1 + q->size());
  // the new element is a global minimum below 0̂ of the attached poset
  CHECK(sum->minimum() == sum->index_of("c1"));
  for (const auto& name : q->elements()) CHECK(sum->leq("c1", name));
}

TEST_CASE("slant sum error paths") {
  PosetPtr vee = Poset::make("v", {"a", "b", "top"}, {{"a", "top"}, {"b", "top"}});
  PosetPtr lambda_shape =
      Poset::make("l", {"bot", "x", "y"}, {{"bot", "x"}, {"bot", "y"}});
  // attached poset must have a minimum
  CHECK_THROWS_AS(slant_sum(*lambda_shape, "x", *vee), InvalidPoset);
  // name collision
  CHECK_THROWS_AS(slant_sum(*vee, "a", *vee), InvalidPoset);
  // unknown attachment point
  CHECK_THROWS_AS(slant_sum(*vee, "zzz", *lambda_shape), UnknownElement);
}

TEST_CASE("chained double-tailed diamond is a slant sum of chains onto the middles") {
  CatalogPoset d3 = dtd(3);
  // renaming is the caller's job: two raw chains would both contain "c1"
  PosetPtr c2 = Poset::make("left", {"L1", "L2"}, {{"L1", "L2"}});
  PosetPtr c1 = Poset::make("right", {"R1"}, {});
  PosetPtr built = iterated_slant_sum(*d3.poset, {{"l1", c2}, {"r1", c1}});
  CHECK_THROWS_AS(
      iterated_slant_sum(*d3.poset, {{"l1", chain(2).poset}, {"r1", chain(1).poset}}),
      InvalidPoset);
  CHECK(isomorphic(*built, *chained_dtd(3, 3, 2).poset));
}

TEST_CASE("iterated slant sum is independent of attachment order") {
  PosetPtr base = gen::trees(5)[2];
  std::vector<std::pair<std::string, PosetPtr>> attachments = {
      {base->element(0), Poset::make("q1", {"q1a", "q1b"}, {{"q1a", "q1b"}})},
      {base->element(2), Poset::make("q2", {"q2a"}, {})},
      {base->element(4), Poset::make("q3", {"q3a", "q3b"}, {{"q3a", "q3b"}})}};
  PosetPtr reference = iterated_slant_sum(*base, attachments);
  std::sort(attachments.begin(), attachments.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  do {
    PosetPtr permuted = iterated_slant_sum(*base, attachments);
    CHECK(permuted->elements() == reference->elements());
    CHECK(permuted->cover_pairs() == reference->cover_pairs());
  } while (std::next_permutation(
      attachments.begin(), attachments.end(),
      [](const auto& a, const auto& b) { return a.first < b.first; }));
  CHECK(iterated_slant_sum(*base, {})->elements() == base->elements());
}

TEST_CASE("slant sum at distinct points commutes") {
  PosetPtr d3 = dtd(3).poset;
  PosetPtr c2 = Poset::make("left", {"L1", "L2"}, {{"L1", "L2"}});
  PosetPtr c1 = Poset::make("right", {"R1"}, {});
  PosetPtr ab = slant_sum(*slant_sum(*d3, "l1", *c2), "r1", *c1);
  PosetPtr ba = slant_sum(*slant_sum(*d3, "r1", *c1), "l1", *c2);
  CHECK(ab->elements() == ba->elements());
  CHECK(ab->cover_pairs() == ba->cover_pairs());
}

TEST_CASE("bottom chain") {
  for (int n = 1; n <= 5; ++n)
    CHECK(bottom_chain(*chain(n).poset) == chain(n).poset->all());
  PosetPtr q = oracle::poset_q();
  CHECK(bottom_chain(*q) == bits_of(*q, {"(1,1)"}));
  // double-tailed diamonds keep exactly the lower tail
  CHECK(bottom_chain(*dtd(3).poset) == bits_of(*dtd(3).poset, {"b1"}));
  CHECK(bottom_chain(*dtd(4).poset) == bits_of(*dtd(4).poset, {"b1", "b2"}));
  CHECK(bottom_chain(*chained_dtd(1, 4, 1).poset) ==
        bits_of(*chained_dtd(1, 4, 1).poset, {"b1", "b2"}));
}

TEST_CASE("bottom chain is a chain and an order ideal") {
  for (int n = 1; n <= 5; ++n)
    for (PosetPtr p : gen::connected_posets(n)) {
      Bits c = bottom_chain(*p);
      CHECK(is_order_ideal(*p, c));
      CHECK(is_chain_subset(*p, c));
    }
}

TEST_CASE("funnels") {
  PosetPtr d3 = dtd(3).poset;
  // the embedded copy of an attached poset is a funnel
  PosetPtr q = oracle::poset_q();
  PosetPtr sum = slant_sum(*chain(2).poset, "c1", *q);
  Bits embedded(sum->size());
  for (const auto& name : q->elements()) embedded.set(sum->index_of(name));
  CHECK(is_funnel(*sum, embedded));
  // the whole poset, when it has a minimum
  CHECK(is_funnel(*d3, d3->all()));
  // {left middle, top} fails: the right middle is below the top but not
  // below the left middle
  CHECK_FALSE(is_funnel(*d3, bits_of(*d3, {"l1", "t1"})));
  CHECK_FALSE(is_funnel(*d3, Bits(d3->size())));
}

TEST_CASE("trees, chains, principal ideals") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(is_tree(*chain(n).poset));
    CHECK(is_chain(*chain(n).poset));
  }
  CHECK_FALSE(is_tree(*dtd(3).poset));  // the top has two parents
  CHECK_FALSE(is_chain(*dtd(3).poset));
  PosetPtr q = oracle::poset_q();
  Bits ideal = principal_ideal(*q, "(2,2)");
  CHECK(ideal == bits_of(*q, {"(1,1)", "(1,2)", "(2,1)", "(2,2)"}));
  CHECK(ideal.count() == 4);
  CHECK_THROWS_AS(principal_ideal(*q, "nope"), UnknownElement);
}

TEST_CASE("bottom tree is the maximal tree-shaped ideal") {
  for (int n = 1; n <= 5; ++n)
    for (PosetPtr p : gen::connected_posets(n)) {
      Bits bt = bottom_tree(*p);
      CHECK(is_order_ideal(*p, bt));
      CHECK(bt.contains(bottom_chain(*p)));
      // every element of the bottom tree has a chain as principal ideal
      bt.for_each([&](int x) { CHECK(is_chain_subset(*p, p->down_set(x))); });
    }
  // the tree may branch: both middles of a double-tailed diamond belong
  CHECK(bottom_tree(*dtd(4).poset) == bits_of(*dtd(4).poset, {"b1", "b2", "l1", "r1"}));
}

TEST_CASE("produced posets have irredundant acyclic cover relations") {
  for (PosetPtr p : {oracle::poset_q(), bat().poset, chained_dtd(2, 4, 3).poset}) {
    for (auto [lo, hi] : p->cover_pairs()) {
      CHECK(p->leq(lo, hi));
      CHECK_FALSE(p->leq(hi, lo));
      // no path of length >= 2 from lo to hi
      for (int z = 0; z < p->size(); ++z)
        if (z != lo && z != hi) CHECK_FALSE((p->leq(lo, z) && p->leq(z, hi)));
    }
  }
}

TEST_CASE("generator counts match the literature") {
  CHECK(gen::connected_posets(1).size() == 1);
  CHECK(gen::connected_posets(2).size() == 1);
  CHECK(gen::connected_posets(3).size() == 3);
  CHECK(gen::connected_posets(4).size() == 10);
  CHECK(gen::connected_posets(5).size() == 44);
  CHECK(gen::trees(1).size() == 1);
  CHECK(gen::trees(4).size() == 4);
  CHECK(gen::trees(6).size() == 20);
  CHECK(gen::trees(7).size() == 48);
}

TEST_CASE("canonical form distinguishes and identifies") {
  CHECK(isomorphic(*rectangle(2, 3).poset, *rectangle(3, 2).poset));
  CHECK_FALSE(isomorphic(*rectangle(2, 2).poset, *chain(4).poset));
  CHECK(isomorphic(*chained_dtd(1, 4, 1).poset, *dtd(4).poset));
  CHECK(isomorphic(*shifted_staircase(3).poset, *dtd(4).poset));
  CHECK(isomorphic(*shifted_staircase(2).poset, *chain(3).poset));
}

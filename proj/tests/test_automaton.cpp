#include <algorithm>

#include "doctest.h"
#include "sgs/automaton.hpp"
#include "sgs/catalog.hpp"
#include "sgs/random.hpp"
#include "sgs/ray.hpp"

using namespace sgs;

namespace {

TreeWord tw(const std::string& s) {
  TreeWord w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

GroupWord gw(const AutomatonSpec& spec, const std::vector<std::string>& names) {
  GroupWord w;
  for (const auto& n : names) {
    StateId s = spec.find_state(n);
    REQUIRE(s >= 0);
    w.push_back(s);
  }
  return w;
}

GroupWord inverse_word(const AutomatonSpec& spec, const GroupWord& g) {
  GroupWord inv;
  for (auto it = g.rbegin(); it != g.rend(); ++it) inv.push_back(spec.inverse(*it));
  return inv;
}

GroupWord random_word(const AutomatonSpec& spec, Rng& rng, int maxlen) {
  GroupWord w;
  int len = static_cast<int>(rng.below(maxlen + 1));
  for (int i = 0; i < len; ++i)
    w.push_back(spec.generators()[rng.below(spec.generators().size())]);
  return w;
}

TreeWord random_tree_word(const AutomatonSpec& spec, Rng& rng, int len) {
  TreeWord w(len);
  for (auto& x : w) x = static_cast<Letter>(rng.below(spec.alphabet_size()));
  return w;
}

const char* kIdentityOnly = R"({
  "alphabet": 2,
  "states": [{ "name": "e", "perm": [0, 1], "sections": ["e", "e"] }],
  "generators": ["e"],
  "identity": "e"
})";

}  // namespace

TEST_SUITE("automaton") {

TEST_CASE("grigorchuk file parses to its five states") {
  AutomatonSpec g = load_group("grigorchuk");
  CHECK(g.alphabet_size() == 2);
  CHECK(g.state_count() == 5);
  for (const char* n : {"e", "a", "b", "c", "d"}) CHECK(g.find_state(n) >= 0);
  StateId a = g.find_state("a");
  CHECK(g.state(a).perm == std::vector<Letter>{1, 0});
  CHECK(g.state(a).sections == std::vector<StateId>(2, g.find_state("e")));
  StateId b = g.find_state("b");
  CHECK(g.state(b).sections[0] == g.find_state("a"));
  CHECK(g.state(b).sections[1] == g.find_state("c"));
  // all four generators are involutions; no extra inverse states created
  for (StateId s : g.generators()) CHECK(g.is_involution(s));
  CHECK(g.generators().size() == 4);
}

TEST_CASE("tangled odometers file gains generated inverses") {
  AutomatonSpec t = load_group("tangled");
  CHECK(t.state_count() == 5);  // e, a, b, a^-1, b^-1
  StateId ai = t.find_state("a^-1");
  REQUIRE(ai >= 0);
  CHECK(t.state(ai).perm == std::vector<Letter>{1, 0, 2});
  CHECK(t.state(ai).sections ==
        std::vector<StateId>{ai, t.find_state("e"), t.find_state("e")});
  StateId bi = t.find_state("b^-1");
  REQUIRE(bi >= 0);
  CHECK(t.state(bi).sections ==
        std::vector<StateId>{bi, t.find_state("e"), t.find_state("e")});
  // generator list is closed under inversion, in file order then inverses
  std::vector<std::string> names;
  for (StateId s : t.generators()) names.push_back(t.state(s).name);
  CHECK(names == std::vector<std::string>{"a", "b", "a^-1", "b^-1"});
}

TEST_CASE("parse rejects malformed files") {
  CHECK_THROWS_WITH_AS(
      parse_automaton(R"({"alphabet":2,"states":[{"name":"a","perm":[1,0],
        "sections":["a","q"]}],"generators":["a"]})"),
      doctest::Contains("unknown state 'q'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_automaton(R"({"alphabet":2,"states":[{"name":"a","perm":[0,0],
        "sections":["a","a"]}],"generators":["a"]})"),
      doctest::Contains("not a bijection"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_automaton(R"({"alphabet":3,"states":[{"name":"a","perm":[1,0],
        "sections":["a","a"]}],"generators":["a"]})"),
      doctest::Contains("not a bijection"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_automaton(R"({"alphabet":2,"states":[{"name":"a","perm":[1,0],
        "sections":["a"]}],"generators":["a"]})"),
      doctest::Contains("sections length"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_automaton(R"({"alphabet":2,"states":[{"name":"a","perm":[1,0],
        "sections":["a","a"]}],"generators":["a"],"identity":"a"})"),
      doctest::Contains("not the identity"), std::invalid_argument);
}

TEST_CASE("lamplighter worked example a(10101) = 00110") {
  AutomatonSpec ll = load_group("lamplighter");
  CHECK(ll.act_word(gw(ll, {"a"}), tw("10101")) == tw("00110"));
}

TEST_CASE("identity word acts trivially") {
  AutomatonSpec g = load_group("grigorchuk");
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    TreeWord u = random_tree_word(g, rng, 6);
    CHECK(g.act_word({}, u) == u);
  }
}

TEST_CASE("grigorchuk b(101) = 100") {
  AutomatonSpec g = load_group("grigorchuk");
  CHECK(g.act_word(gw(g, {"b"}), tw("101")) == tw("100"));
}

TEST_CASE("sections") {
  AutomatonSpec g = load_group("grigorchuk");
  CHECK(g.section(gw(g, {"b"}), tw("0")) == gw(g, {"a"}));
  // (ab)_0 = a_{b(0)} b_0 = e a, equal to a as an automorphism
  GroupWord sec = g.section(gw(g, {"a", "b"}), tw("0"));
  CHECK(sec == gw(g, {"e", "a"}));
  CHECK(g.words_equal(sec, gw(g, {"a"})));
  GroupWord w = gw(g, {"a", "b", "c"});
  CHECK(g.section(w, {}) == w);
}

TEST_CASE("prefix splitting and cocycle properties") {
  Rng rng(7);
  for (const char* id : {"grigorchuk", "lamplighter", "tangled", "hanoi", "basilica"}) {
    AutomatonSpec spec = load_group(id);
    for (int trial = 0; trial < 40; ++trial) {
      GroupWord gword = random_word(spec, rng, 4);
      GroupWord h = random_word(spec, rng, 4);
      TreeWord u = random_tree_word(spec, rng, 3);
      TreeWord v = random_tree_word(spec, rng, 3);
      // act(g, uv) = act(g,u) act(section(g,u), v)
      TreeWord uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      TreeWord lhs = spec.act_word(gword, uv);
      TreeWord rhs = spec.act_word(gword, u);
      TreeWord tail = spec.act_word(spec.section(gword, u), v);
      rhs.insert(rhs.end(), tail.begin(), tail.end());
      CHECK(lhs == rhs);
      // inverse round-trip
      CHECK(spec.act_word(inverse_word(spec, gword), spec.act_word(gword, uv)) == uv);
      // section cocycle: section(gh, u) = section(g, h(u)) ++ section(h, u)
      GroupWord prod = gword;
      prod.insert(prod.end(), h.begin(), h.end());
      GroupWord left = spec.section(prod, u);
      GroupWord right = spec.section(gword, spec.act_word(h, u));
      GroupWord rh = spec.section(h, u);
      right.insert(right.end(), rh.begin(), rh.end());
      CHECK(left == right);
    }
  }
}

TEST_CASE("ray canonical form") {
  CHECK(make_ray({}, tw("0101")) == make_ray({}, tw("01")));
  // 0 (10)^inf = (01)^inf
  CHECK(make_ray(tw("0"), tw("10")) == make_ray({}, tw("01")));
  CHECK(make_ray(tw("10"), tw("0")) == make_ray(tw("1"), tw("0")));
  CHECK(make_ray(tw("1"), tw("0")).to_string() == "1(0)");
  CHECK_THROWS_AS(make_ray(tw("1"), {}), std::invalid_argument);
}

TEST_CASE("binary odometer on rays") {
  AutomatonSpec odo = load_group("odometer");
  GroupWord a = gw(odo, {"a"});
  CHECK(act_ray(odo, a, make_ray({}, tw("1"))) == make_ray({}, tw("0")));
  CHECK(act_ray(odo, a, make_ray({}, tw("0"))) == make_ray(tw("1"), tw("0")));
  Ray r = make_ray(tw("01"), tw("101"));
  CHECK(act_ray(odo, {}, r) == r);
}

TEST_CASE("act_ray agrees with act_word on prefixes") {
  Rng rng(11);
  for (const char* id : {"grigorchuk", "odometer", "dinf", "tangled", "basilica"}) {
    AutomatonSpec spec = load_group(id);
    for (int trial = 0; trial < 25; ++trial) {
      TreeWord pre = random_tree_word(spec, rng, static_cast<int>(rng.below(3)));
      TreeWord per = random_tree_word(spec, rng, 1 + static_cast<int>(rng.below(3)));
      Ray r = make_ray(pre, per);
      GroupWord g = random_word(spec, rng, 3);
      Ray img = act_ray(spec, g, r);
      int m = 3 * static_cast<int>(r.preperiod.size() + r.period.size()) *
              spec.alphabet_size();
      TreeWord prefix(m), expect(m);
      for (int i = 0; i < m; ++i) prefix[i] = r.at(i);
      TreeWord mapped = spec.act_word(g, prefix);
      for (int i = 0; i < m; ++i) expect[i] = img.at(i);
      CHECK(mapped == expect);
    }
  }
}

TEST_CASE("contracting: odometer nucleus is {e, a, a^-1}") {
  AutomatonSpec odo = load_group("odometer");
  NucleusResult res = check_contracting(odo, 1);
  REQUIRE(res.ok);
  CHECK(res.nucleus.size() == 3);
  for (const auto& want : {GroupWord{}, gw(odo, {"a"}), gw(odo, {"a^-1"})}) {
    bool found = false;
    for (const auto& c : res.nucleus)
      if (odo.words_equal(c, want)) found = true;
    CHECK(found);
  }
}

TEST_CASE("contracting: grigorchuk nucleus is {e,a,b,c,d} at radius <= 2") {
  AutomatonSpec g = load_group("grigorchuk");
  NucleusResult res = check_contracting(g, 1);
  if (!res.ok) res = check_contracting(g, 2);
  REQUIRE(res.ok);
  CHECK(res.nucleus.size() == 5);
  for (const char* n : {"e", "a", "b", "c", "d"}) {
    bool found = false;
    for (const auto& c : res.nucleus)
      if (g.words_equal(c, gw(g, {n}))) found = true;
    CHECK(found);
  }
}

TEST_CASE("contracting: identity-only automaton has nucleus {e}") {
  AutomatonSpec id = parse_automaton(kIdentityOnly);
  NucleusResult res = check_contracting(id, 1);
  REQUIRE(res.ok);
  CHECK(res.nucleus.size() == 1);
}

TEST_CASE("contracting succeeds for the contracting catalog groups") {
  for (const char* id : {"odometer", "grigorchuk", "basilica", "hanoi", "tangled"}) {
    AutomatonSpec spec = load_group(id);
    NucleusResult res;
    for (int radius = 1; radius <= 3 && !res.ok; ++radius)
      res = check_contracting(spec, radius);
    REQUIRE_MESSAGE(res.ok, id);
    bool has_id = false;
    for (const auto& w : res.nucleus)
      if (spec.words_equal(w, {})) has_id = true;
    CHECK(has_id);
    for (const auto& w : res.nucleus) {
      for (Letter x = 0; x < spec.alphabet_size(); ++x) {
        GroupWord s = spec.section(w, {x});
        bool found = false;
        for (const auto& c : res.nucleus)
          if (spec.words_equal(c, s)) found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("act_ray guard reports a non-closing orbit budget") {
  AutomatonSpec odo = load_group("odometer");
  CHECK_THROWS_WITH_AS(act_ray(odo, gw(odo, {"a"}), make_ray({}, {0}), 1),
                       doctest::Contains("did not close"), std::runtime_error);
}

TEST_CASE("catalog groups use alphabets of size at least 2") {
  for (const auto& id : catalog_groups())
    CHECK(load_group(id).alphabet_size() >= 2);
}

TEST_CASE("level transitivity") {
  CHECK(load_group("grigorchuk").is_level_transitive(3));
  CHECK(load_group("hanoi").is_level_transitive(2));
  CHECK_FALSE(parse_automaton(kIdentityOnly).is_level_transitive(1));
}

}  // TEST_SUITE

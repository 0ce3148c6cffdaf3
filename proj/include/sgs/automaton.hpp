#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sgs {

using Letter = int;
using StateId = int;
using TreeWord = std::vector<Letter>;

// A word in the generating set; entries are state ids of catalog generators
// (inverses included as their own states). The empty word is the identity.
// Words act on the left: in [g1, g2, ..., gm] the rightmost gm is applied
// first and g1 last, so the word represents the product g1 g2 ... gm.
using GroupWord = std::vector<StateId>;

struct Alphabet {
  int size = 0;
};

struct AutomatonState {
  std::string name;
  std::vector<Letter> perm;       // images of 0..k-1 under the root permutation
  std::vector<StateId> sections;  // section state at each letter
};

// A finite self-similar set of tree automorphisms (Mealy automaton) together
// with its symmetric generating set. Immutable after construction.
class AutomatonSpec {
 public:
  AutomatonSpec(Alphabet alphabet, std::vector<AutomatonState> states,
                std::vector<StateId> generators, std::vector<StateId> inverses,
                std::optional<StateId> identity);

  int alphabet_size() const { return alphabet_.size; }
  int state_count() const { return static_cast<int>(states_.size()); }
  const AutomatonState& state(StateId s) const { return states_[s]; }
  StateId find_state(const std::string& name) const;  // -1 if absent

  // symmetric generating set S (file order, synthesized inverses appended)
  const std::vector<StateId>& generators() const { return generators_; }
  StateId inverse(StateId s) const { return inverses_[s]; }
  bool is_involution(StateId s) const { return inverses_[s] == s; }
  std::optional<StateId> identity_state() const { return identity_; }

  // g(xw) = alpha_g(x) g_x(w), extended to words
  TreeWord act_state(StateId s, const TreeWord& u) const;
  TreeWord act_word(const GroupWord& g, const TreeWord& u) const;

  // section of a single state at a vertex: walk the transition graph
  StateId state_section(StateId s, const TreeWord& u) const;
  // (gh)_u = g_{h(u)} h_u, elementwise over the word
  GroupWord section(const GroupWord& g, const TreeWord& u) const;

  // decide equality of two words as tree automorphisms (greatest bisimulation
  // over the finite space of section words; always terminates)
  bool words_equal(const GroupWord& a, const GroupWord& b) const;

  bool is_level_transitive(int n) const;

 private:
  Alphabet alphabet_;
  std::vector<AutomatonState> states_;
  std::vector<StateId> generators_;
  std::vector<StateId> inverses_;  // per state
  std::optional<StateId> identity_;
};

// Parse and validate the JSON automaton format; synthesizes formal inverses
// for non-involutions that the file does not pair explicitly.
AutomatonSpec parse_automaton(const std::string& json_text);

struct NucleusResult {
  bool ok = false;
  int radius = 0;
  std::vector<GroupWord> nucleus;  // canonical representatives
  std::string message;
};

// Closure of {identity} + generators under depth-`radius` sections of
// pairwise products. Succeeds when the closure stabilizes (the group is
// contracting with nucleus inside the closure); fails when the candidate
// set exceeds `max_size`, which signals non-contraction at this radius.
NucleusResult check_contracting(const AutomatonSpec& spec, int radius,
                                int max_size = 200);

// lexicographic index of a word (first letter most significant) and back
std::int64_t word_index(const TreeWord& w, int k);
TreeWord index_word(std::int64_t idx, int n, int k);
std::string word_string(const TreeWord& w);

}  // namespace sgs

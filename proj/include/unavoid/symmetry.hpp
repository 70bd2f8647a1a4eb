#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "unavoid/graph.hpp"
#include "unavoid/vertex_set.hpp"

namespace unavoid {

// perm[v] is the image of vertex v.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer ∘ inner
Permutation inverse(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Total map vertex -> color with colors forming 0..color_count()-1.
class VertexColoring {
 public:
  VertexColoring() = default;
  // Throws std::invalid_argument unless the colors are exactly 0..c-1.
  explicit VertexColoring(std::vector<int> colors);

  static VertexColoring uniform(int n);
  // Bag members get color 0, everything else color 1.
  static VertexColoring bag_membership(int n, const VertexSet& bag);

  int operator[](int v) const { return colors_[static_cast<std::size_t>(v)]; }
  int size() const { return static_cast<int>(colors_.size()); }
  int color_count() const { return color_count_; }
  const std::vector<int>& colors() const { return colors_; }

 private:
  std::vector<int> colors_;
  int color_count_ = 0;
};

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Explicitly materialized permutation group.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  PermGroup() : PermGroup(0) {}
  // Trivial group on `degree` points.
  explicit PermGroup(int degree);

  // Closure of `generators`; throws GroupTooLarge once more than `cap`
  // elements have been produced.
  static PermGroup generate(int degree, const std::vector<Permutation>& generators,
                            std::size_t cap = kDefaultCap);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }

  VertexSet orbit(int v) const;
  // Orbits of the points in `domain`, ordered by their minimum element.
  std::vector<VertexSet> orbits(const VertexSet& domain) const;
  // Minimum-label element of every orbit meeting `bag`.
  VertexSet orbit_representatives(const VertexSet& bag) const;
  PermGroup stabilizer(int v) const;

  // Closure under composition and inverses plus identity membership; quadratic,
  // meant for tests.
  bool verify_group_axioms() const;

 private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
};

struct CanonicalForm {
  // Equal keys iff a color-preserving isomorphism exists.
  std::string key;
  // relabeling[v] = position of v in the canonical representative.
  Permutation relabeling;
};

CanonicalForm canonical_form(const LabeledGraph& g, const VertexColoring& c);
std::string canonical_key(const LabeledGraph& g, const VertexColoring& c);

// Generators of the color-preserving automorphism group.
std::vector<Permutation> automorphism_generators(const LabeledGraph& g, const VertexColoring& c);

// Automorphisms of h mapping `bag` onto itself setwise.
PermGroup aut_fixing_bag(const LabeledGraph& h, const VertexSet& bag,
                         std::size_t cap = PermGroup::kDefaultCap);

// Canonical key of the pair (bag, h): two pairs share a key iff some bijection
// carries one onto the other.
std::string pair_key(const LabeledGraph& h, const VertexSet& bag);

LabeledGraph apply_permutation(const LabeledGraph& g, const Permutation& p);
bool is_automorphism(const LabeledGraph& g, const Permutation& p);

}  // namespace unavoid

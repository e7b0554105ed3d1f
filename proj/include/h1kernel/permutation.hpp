#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace h1kernel {

// A permutation of the vertex ids 0..degree-1, stored as its image table.
class Permutation {
public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw std::invalid_argument("Permutation: image table is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  static Permutation from_cycles(int degree,
                                 std::initializer_list<std::initializer_list<int>> cycles) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    for (const auto& cycle : cycles) {
      const std::vector<int> c(cycle);
      for (std::size_t i = 0; i < c.size(); ++i)
        images[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    }
    return Permutation(std::move(images));
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int v = 0; v < degree(); ++v)
      if (images_[static_cast<std::size_t>(v)] != v) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int v = 0; v < degree(); ++v)
      inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(v)])] = v;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// Composition acting left-to-right through p after q: v -> p(q(v)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::domain_error("compose: permutations act on different vertex sets");
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int v = 0; v < p.degree(); ++v) images[static_cast<std::size_t>(v)] = p(q(v));
  return Permutation(std::move(images));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

// Cycle notation, e.g. "(1 3)(2 4)"; the identity prints as "id".
inline std::string cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  bool moved = false;
  for (int v = 0; v < p.degree(); ++v) {
    if (seen[static_cast<std::size_t>(v)] || p(v) == v) continue;
    moved = true;
    out << '(' << v;
    seen[static_cast<std::size_t>(v)] = true;
    for (int w = p(v); w != v; w = p(w)) {
      out << ' ' << w;
      seen[static_cast<std::size_t>(w)] = true;
    }
    out << ')';
  }
  return moved ? out.str() : "id";
}

// A finite permutation group held as its full, sorted element list.
// Orders here never exceed the automorphism group of an affine Dynkin
// diagram on 25 vertices.
class PermGroup {
public:
  static PermGroup trivial(int degree) {
    return PermGroup({Permutation::identity(degree)}, {});
  }

  // Breadth-first closure of the generating set.
  static PermGroup generated_by(std::vector<Permutation> gens) {
    if (gens.empty())
      throw std::invalid_argument("PermGroup: cannot infer degree from an empty generating set");
    const int degree = gens.front().degree();
    for (const auto& g : gens)
      if (g.degree() != degree)
        throw std::domain_error("PermGroup: generators act on different vertex sets");

    std::vector<Permutation> elements{Permutation::identity(degree)};
    std::vector<Permutation> frontier = elements;
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& e : frontier)
        for (const auto& g : gens) {
          Permutation candidate = compose(g, e);
          if (!std::binary_search(elements.begin(), elements.end(), candidate)) {
            elements.insert(
                std::lower_bound(elements.begin(), elements.end(), candidate),
                candidate);
            next.push_back(std::move(candidate));
          }
        }
      frontier = std::move(next);
    }
    return PermGroup(std::move(elements), std::move(gens));
  }

  // Wraps an element list that is already a subgroup; verified.
  static PermGroup from_elements(std::vector<Permutation> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty())
      throw std::invalid_argument("PermGroup: element list is empty");
    for (const auto& a : elements) {
      if (!std::binary_search(elements.begin(), elements.end(), a.inverse()))
        throw std::invalid_argument("PermGroup: element list is not closed under inversion");
      for (const auto& b : elements)
        if (!std::binary_search(elements.begin(), elements.end(), compose(a, b)))
          throw std::invalid_argument("PermGroup: element list is not closed under composition");
    }
    std::vector<Permutation> gens = elements;
    return PermGroup(std::move(elements), std::move(gens));
  }

  int degree() const { return elements_.front().degree(); }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }

  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool is_subgroup_of(const PermGroup& other) const {
    for (const auto& e : elements_)
      if (!other.contains(e)) return false;
    return true;
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.elements_ == b.elements_;
  }

private:
  PermGroup(std::vector<Permutation> elements, std::vector<Permutation> generators)
      : elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
  }

  std::vector<Permutation> elements_;  // sorted
  std::vector<Permutation> generators_;
};

inline PermGroup generate_group(std::vector<Permutation> gens) {
  return PermGroup::generated_by(std::move(gens));
}

// The subgroup of g fixed by gamma acting by conjugation:
// { w in g : s w s^-1 = w for every s in gamma }.
inline PermGroup conjugation_fixed(const PermGroup& g, const PermGroup& gamma) {
  if (g.degree() != gamma.degree())
    throw std::domain_error("conjugation_fixed: groups act on different vertex sets");
  std::vector<Permutation> fixed;
  for (const auto& w : g.elements()) {
    bool ok = true;
    for (const auto& s : gamma.elements()) {
      if (compose(s, compose(w, s.inverse())) != w) {
        ok = false;
        break;
      }
    }
    if (ok) fixed.push_back(w);
  }
  return PermGroup::from_elements(std::move(fixed));
}

} // namespace h1kernel

#include "ncg/constructions.h"

#include <algorithm>
#include <stdexcept>

#include "ncg/errors.h"

namespace ncg {

namespace {

// Collects labelled vertices and arcs; ids are handed out in insertion order.
class Builder {
public:
  Vertex add(std::string label) {
    labels.push_back(std::move(label));
    return static_cast<Vertex>(labels.size() - 1);
  }

  void arc(Vertex owner, Vertex target) { arcs.push_back({owner, target}); }

  Fixture finish(std::string name, const Rational& alpha, Objective objective) {
    Fixture f;
    f.name = std::move(name);
    f.graph = OwnershipGraph(static_cast<int>(labels.size()), std::move(arcs));
    f.alpha = alpha;
    f.objective = objective;
    f.labels = std::move(labels);
    return f;
  }

  std::vector<std::string> labels;
  std::vector<Arc> arcs;
};

void require_positive(const Rational& alpha) {
  if (alpha <= 0) {
    throw DomainError("alpha must be positive");
  }
}

std::string indexed(std::string_view stem, int i) { return std::string(stem) + std::to_string(i); }

int ceil_half(int k) { return (k + 1) / 2; }

} // namespace

Vertex Fixture::vertex(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw std::out_of_range("no vertex labelled '" + std::string(label) + "' in " + name);
  }
  return static_cast<Vertex>(it - labels.begin());
}

std::optional<bool> Fixture::expected(Concept c) const {
  for (const Expectation& e : expectations) {
    if (e.solution_concept == c) {
      return e.holds;
    }
  }
  return std::nullopt;
}

Fixture c5(const Rational& alpha, std::string_view pattern) {
  require_positive(alpha);
  std::string owners(pattern);
  if (pattern == "h2") {
    owners = "FFFFF";
  } else if (pattern == "h3") {
    owners = "FFFFB";
  } else if (pattern == "h5") {
    owners = "FBFBF";
  }
  if (owners.size() != 5 || owners.find_first_not_of("FB") != std::string::npos) {
    throw DomainError("c5 pattern must be h2, h3, h5 or five F/B characters");
  }
  Builder b;
  for (int i = 0; i < 5; ++i) {
    b.add(indexed("c", i));
  }
  int max_owned = 0;
  std::vector<int> owned(5, 0);
  for (int i = 0; i < 5; ++i) {
    const Vertex next = (i + 1) % 5;
    if (owners[i] == 'F') {
      b.arc(i, next);
      ++owned[i];
    } else {
      b.arc(next, i);
      ++owned[next];
    }
  }
  max_owned = *std::max_element(owned.begin(), owned.end());

  Fixture f = b.finish("c5-" + owners, alpha, Objective::Sum);
  // Deleting a cycle edge costs 4 in distance, buying a chord saves 1, and a
  // swap never helps on C5. An agent holding both its edges can drop them for
  // a single chord at the price of 2 extra distance.
  const bool ge = alpha >= 1 && alpha <= 4;
  f.expectations = {{Concept::GE, ge},
                    {Concept::NE, ge && (max_owned <= 1 || alpha <= 2)},
                    {Concept::SE, true},
                    {Concept::ASE, true}};
  return f;
}

Fixture cycle_with_leaves(const Rational& alpha) {
  require_positive(alpha);
  Builder b;
  for (int i = 0; i < 5; ++i) {
    b.add(indexed("c", i));
  }
  for (int i = 0; i < 5; ++i) {
    b.add(indexed("l", i));
  }
  for (int i = 0; i < 5; ++i) {
    b.arc(i, 5 + i);
    b.arc(i, (i + 1) % 5);
  }
  Fixture f = b.finish("cycle-with-leaves", alpha, Objective::Sum);
  const bool ge = alpha >= 6 && alpha <= 8;
  // A leaf always gains by re-attaching next to another leaf, so swap
  // stability fails while own-edge swaps stay useless.
  f.expectations = {{Concept::GE, ge}, {Concept::SE, false}, {Concept::ASE, true}};
  if (!ge || alpha == Rational(7)) {
    f.expectations.push_back({Concept::NE, ge});
  }
  return f;
}

Fixture sum_lower_bound(int k) {
  if (k < 1) {
    throw DomainError("sum_lower_bound needs k >= 1");
  }
  Builder b;
  const Vertex u = b.add("u");
  const Vertex w = b.add("w");
  const Vertex x = b.add("x");
  std::vector<Vertex> y;
  for (int i = 1; i <= k; ++i) {
    y.push_back(b.add(indexed("y", i)));
  }
  for (int i = 0; i < k; ++i) {
    b.arc(u, y[i]);
  }
  b.arc(w, x);
  b.arc(w, u);
  // Rotational tournament: y_i owns the arcs to the next floor((k-1)/2)
  // clique vertices, plus the antipodal one for the lower half when k is even.
  for (int i = 0; i < k; ++i) {
    for (int step = 1; step <= (k - 1) / 2; ++step) {
      b.arc(y[i], y[(i + step) % k]);
    }
    if (k % 2 == 0 && i < k / 2) {
      b.arc(y[i], y[i + k / 2]);
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      const Vertex z = b.add("z" + std::to_string(i) + "_" + std::to_string(j));
      b.arc(z, x);
      b.arc(z, y[i - 1]);
    }
  }
  Fixture f = b.finish("sum-lower-bound-" + std::to_string(k), Rational(k + 1), Objective::Sum);
  f.focus = u;
  f.expectations = {{Concept::GE, true}};
  if (k >= 2) {
    const std::int64_t kk = k;
    f.expected_ratio = Rational(3 * kk * kk + 2 * kk + 3, 2 * kk * kk + 4 * kk + 3);
  }
  if (k >= 3) {
    f.expectations.push_back({Concept::NE, false});
  }
  return f;
}

NonLocalKind parse_nonlocal_kind(std::string_view text) {
  if (text == "star" || text == "buy") {
    return NonLocalKind::Star;
  }
  if (text == "clique" || text == "delete") {
    return NonLocalKind::Clique;
  }
  if (text == "spider" || text == "swap") {
    return NonLocalKind::Spider;
  }
  throw ParseError("unknown non-local kind '" + std::string(text) + "'");
}

Fixture max_nonlocal(NonLocalKind kind, int k) {
  if (k < 2) {
    throw DomainError("max_nonlocal needs k >= 2");
  }
  Builder b;
  Fixture f;
  switch (kind) {
  case NonLocalKind::Star: {
    // A leaf gains only by buying every other leaf at once.
    const Vertex center = b.add("x");
    for (int i = 1; i <= k + 1; ++i) {
      b.arc(center, b.add(indexed("l", i)));
    }
    f = b.finish("max-nonlocal-star-" + std::to_string(k), Rational(1, 2 * k), Objective::Max);
    f.focus = f.vertex("l1");
    break;
  }
  case NonLocalKind::Clique: {
    // u gains only by dropping all k of its arcs; vertex k+1 keeps it attached.
    const Vertex u = b.add("u");
    for (int i = 1; i <= k + 1; ++i) {
      b.add(indexed("v", i));
    }
    for (int i = 1; i <= k; ++i) {
      b.arc(u, i);
    }
    b.arc(k + 1, u);
    for (int i = 1; i <= k + 1; ++i) {
      for (int j = i + 1; j <= k + 1; ++j) {
        b.arc(i, j);
      }
    }
    f = b.finish("max-nonlocal-clique-" + std::to_string(k), Rational(1, k - 1), Objective::Max);
    f.focus = u;
    break;
  }
  case NonLocalKind::Spider: {
    // The center gains only by moving every leg attachment one step outward.
    const Vertex x = b.add("x");
    for (int i = 1; i <= k; ++i) {
      const Vertex a = b.add(indexed("a", i));
      const Vertex bi = b.add(indexed("b", i));
      const Vertex c = b.add(indexed("c", i));
      b.arc(x, a);
      b.arc(a, bi);
      b.arc(bi, c);
    }
    f = b.finish("max-nonlocal-spider-" + std::to_string(k), Rational(2), Objective::Max);
    f.focus = x;
    break;
  }
  }
  f.expectations = {{Concept::NE, false}};
  // With only two legs b_1 gains by buying b_2, so the spider is greedy-stable
  // from three legs on.
  if (kind != NonLocalKind::Spider || k >= 3) {
    f.expectations.push_back({Concept::GE, true});
  }
  return f;
}

Fixture badly_connected_tree(int k) { return badly_connected_tree(k, Rational(k + 1)); }

Fixture badly_connected_tree(int k, const Rational& alpha) {
  if (k < 3 || k % 2 == 0) {
    throw DomainError("badly_connected_tree needs an odd k >= 3");
  }
  require_positive(alpha);
  const int mid = ceil_half(k);
  Builder b;
  const Vertex u = b.add("u");
  std::vector<Vertex> left, right;
  for (int i = 1; i <= k; ++i) {
    left.push_back(b.add(indexed("l", i)));
  }
  for (int i = 1; i <= k; ++i) {
    right.push_back(b.add(indexed("r", i)));
  }
  b.arc(u, left[0]);
  b.arc(u, right[0]);
  for (int i = 0; i + 1 < k; ++i) {
    b.arc(left[i], left[i + 1]);
    b.arc(right[i], right[i + 1]);
  }
  for (const auto& [path, stem] : {std::pair{&left, "lb"}, std::pair{&right, "rb"}}) {
    Vertex prev = (*path)[mid - 1];
    for (int i = 1; i <= mid - 1; ++i) {
      const Vertex next = b.add(indexed(stem, i));
      b.arc(prev, next);
      prev = next;
    }
  }
  Fixture f = b.finish("badly-connected-tree-" + std::to_string(k), alpha, Objective::Max);
  f.focus = u;
  f.expectations = {{Concept::GE, true}, {Concept::NE, false}};
  if (alpha == Rational(k + 1)) {
    f.expected_ratio = (2 * alpha + k) / (2 * alpha + mid);
  }
  return f;
}

Fixture cheap_network(const Rational& alpha) {
  require_positive(alpha);
  if (alpha > 1) {
    throw DomainError("cheap_network needs alpha <= 1");
  }
  Builder b;
  for (int i = 0; i < 8; ++i) {
    b.add(indexed("u", i));
  }
  for (int j = 0; j < 8; ++j) {
    b.add(indexed("v", j));
  }
  for (int j = 0; j < 8; ++j) {
    b.add(indexed("w", j));
  }
  for (int i = 0; i < 8; ++i) {
    b.arc(i, (i + 1) % 8);
  }
  for (int j = 0; j < 8; ++j) {
    b.arc(8 + j, j);
    b.arc(8 + j, 16 + j);
    b.arc(16 + j, (j + 4) % 8);
  }
  Fixture f = b.finish("cheap-network", alpha, Objective::Max);
  f.focus = f.vertex("v0");
  // v0 owns two arcs at eccentricity 4. Replacing both by the single arc
  // {v0, u2} keeps eccentricity 4 and saves alpha, so the network is never
  // Nash stable even though no greedy move helps.
  f.expectations = {{Concept::GE, true}, {Concept::NE, false}};
  return f;
}

Fixture max_lower_bound(int k, const Rational& alpha) {
  if (k < 1) {
    throw DomainError("max_lower_bound needs k >= 1");
  }
  require_positive(alpha);
  Builder b;
  const Vertex u = b.add("u");
  const Vertex v = b.add("v");
  const Vertex l1 = b.add("l1");
  const Vertex l2 = b.add("l2");
  const Vertex a1 = b.add("a1");
  const Vertex a2 = b.add("a2");
  const Vertex b1 = b.add("b1");
  const Vertex b2 = b.add("b2");
  std::vector<Vertex> x, y;
  for (int j = 1; j <= k; ++j) {
    x.push_back(b.add(indexed("x", j)));
    y.push_back(b.add(indexed("y", j)));
  }
  b.arc(u, a1);
  b.arc(u, a2);
  for (Vertex xj : x) {
    b.arc(u, xj);
  }
  b.arc(b1, v);
  b.arc(b1, a1);
  b.arc(b2, v);
  b.arc(b2, a2);
  b.arc(l1, b1);
  b.arc(l2, b2);
  for (int j = 0; j < k; ++j) {
    b.arc(y[j], x[j]);
    b.arc(y[j], v);
  }
  Fixture f = b.finish("max-lower-bound-" + std::to_string(k), alpha, Objective::Max);
  f.focus = u;
  if (alpha >= 1 && alpha <= 2) {
    f.expectations = {{Concept::GE, true}, {Concept::NE, false}};
    f.expected_ratio = (alpha * (2 + k) + 3) / (alpha + 3);
  }
  return f;
}

Fixture cheap_star(int n, const Rational& alpha, bool center_owned) {
  require_positive(alpha);
  if (n < 4 || alpha * (n - 2) >= 1) {
    throw DomainError("cheap_star needs n >= 4 and alpha < 1/(n-2)");
  }
  Builder b;
  const Vertex center = b.add("x");
  for (int i = 1; i < n; ++i) {
    const Vertex leaf = b.add(indexed("l", i));
    if (center_owned) {
      b.arc(center, leaf);
    } else {
      b.arc(leaf, center);
    }
  }
  Fixture f = b.finish(std::string("cheap-star-") + (center_owned ? "center" : "leaf"),
                       alpha, Objective::Max);
  f.focus = 1;
  f.expectations = {{Concept::GE, true}, {Concept::NE, false}};
  // A leaf at eccentricity 2 buys every vertex it is not yet adjacent to.
  f.expected_ratio = center_owned ? Rational(2) / (alpha * (n - 2) + 1)
                                  : (alpha + 2) / (alpha * (n - 1) + 1);
  return f;
}

Fixture h4_candidate(const Rational& alpha) {
  require_positive(alpha);
  Builder b;
  for (int i = 0; i < 5; ++i) {
    b.add(indexed("c", i));
  }
  const Vertex leaf = b.add("p");
  // Ownership found by exhaustive search over C5 plus a pendant: the only
  // pattern family with GE exactly on [3, 4] where the agent holding two edges
  // (c4) is the one that deviates.
  b.arc(0, 1);
  b.arc(1, 2);
  b.arc(2, 3);
  b.arc(4, 0);
  b.arc(4, 3);
  b.arc(leaf, 0);
  Fixture f = b.finish("h4-candidate", alpha, Objective::Sum);
  f.unverified_figure = true;
  const bool ge = alpha >= 3 && alpha <= 4;
  f.expectations = {{Concept::GE, ge}, {Concept::SE, false}};
  if (!ge || alpha == Rational(7, 2)) {
    f.expectations.push_back({Concept::NE, false});
  }
  return f;
}

} // namespace ncg

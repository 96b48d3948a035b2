#include "gq42/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gq42 {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < 45; ++i) {
      h ^= p.img[static_cast<std::size_t>(i)];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct SearchState {
  const std::vector<PointSet>* adj;  // neighbors, excluding self
  std::vector<int> order;            // breadth-first vertex order
  std::vector<std::vector<int>> mapped_neighbors;  // positions < k adjacent to order[k]
  std::vector<Permutation>* out;
};

void search(SearchState& st, int level, std::array<std::uint8_t, 45>& img,
            PointSet used) {
  if (level == 45) {
    Permutation p;
    p.img = img;
    st.out->push_back(p);
    return;
  }
  int v = st.order[static_cast<std::size_t>(level)];
  PointSet required;
  for (int pos : st.mapped_neighbors[static_cast<std::size_t>(level)]) {
    required.set(img[static_cast<std::size_t>(st.order[static_cast<std::size_t>(pos)])]);
  }
  for (int w = 0; w < 45; ++w) {
    if (used.test(w)) continue;
    if (((*st.adj)[static_cast<std::size_t>(w)] & used) != required) continue;
    img[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(w);
    search(st, level + 1, img, used | PointSet::single(w));
  }
}

std::unordered_set<Permutation, PermHash> closure(
    const std::vector<Permutation>& gens) {
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> frontier{Permutation::identity()};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& h : gens) {
        Permutation gh = compose(h, g);
        if (seen.insert(gh).second) next.push_back(gh);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

AutomorphismGroup automorphism_group(const Incidence& inc) {
  if (inc.n() != 45) {
    throw std::invalid_argument("automorphism_group: expects the 45-point structure");
  }
  std::vector<PointSet> adj(45);
  for (int v = 0; v < 45; ++v) {
    adj[static_cast<std::size_t>(v)] = inc.perp(v) - PointSet::single(v);
  }

  SearchState st;
  st.adj = &adj;
  // Breadth-first order keeps every new vertex constrained by mapped ones.
  {
    std::vector<bool> seen(45, false);
    st.order.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < st.order.size(); ++head) {
      for (int w : adj[static_cast<std::size_t>(st.order[head])]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          st.order.push_back(w);
        }
      }
    }
    if (st.order.size() != 45) {
      throw std::logic_error("collinearity graph is not connected");
    }
  }
  st.mapped_neighbors.resize(45);
  for (int k = 0; k < 45; ++k) {
    for (int p = 0; p < k; ++p) {
      if (adj[static_cast<std::size_t>(st.order[static_cast<std::size_t>(k)])]
              .test(st.order[static_cast<std::size_t>(p)])) {
        st.mapped_neighbors[static_cast<std::size_t>(k)].push_back(p);
      }
    }
  }

  AutomorphismGroup group;
  st.out = &group.elements;
  std::array<std::uint8_t, 45> img{};
  search(st, 0, img, PointSet{});
  std::sort(group.elements.begin(), group.elements.end());

  // Every element must carry the line set onto itself.
  std::unordered_set<std::uint64_t> line_masks;
  for (const auto& line : inc.lines()) line_masks.insert(line.words()[0]);
  for (const auto& g : group.elements) {
    for (const auto& line : inc.lines()) {
      if (!line_masks.count(g.apply(line).words()[0])) {
        throw std::logic_error("graph automorphism does not preserve lines");
      }
    }
  }

  // Greedy generating set: seed away from the identity (the first sorted
  // elements tend to generate small subgroups), then add elements until the
  // closure is the full group.
  group.generators.push_back(group.elements[group.elements.size() / 2]);
  std::unordered_set<Permutation, PermHash> gen_closure = closure(group.generators);
  for (const auto& g : group.elements) {
    if (gen_closure.size() == group.elements.size()) break;
    if (gen_closure.count(g)) continue;
    group.generators.push_back(g);
    gen_closure = closure(group.generators);
  }
  if (gen_closure.size() != group.elements.size()) {
    throw std::logic_error("generator extraction failed to span the group");
  }
  return group;
}

std::vector<int> orbit_partition(int n_items, int n_generators,
                                 const std::function<int(int, int)>& image) {
  std::vector<int> parent(static_cast<std::size_t>(n_items));
  for (int i = 0; i < n_items; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (int g = 0; g < n_generators; ++g) {
    for (int i = 0; i < n_items; ++i) unite(i, image(g, i));
  }
  std::vector<int> orbit(static_cast<std::size_t>(n_items));
  std::unordered_map<int, int> rename;
  for (int i = 0; i < n_items; ++i) {
    int root = find(i);
    auto it = rename.find(root);
    if (it == rename.end()) it = rename.emplace(root, static_cast<int>(rename.size())).first;
    orbit[static_cast<std::size_t>(i)] = it->second;
  }
  return orbit;
}

std::vector<int> orbits_of_sets(const std::vector<PointSet>& objects,
                                const std::vector<Permutation>& perms) {
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!index.emplace(objects[i].words()[0], static_cast<int>(i)).second) {
      throw std::invalid_argument("orbits_of_sets: duplicate objects");
    }
  }
  return orbit_partition(
      static_cast<int>(objects.size()), static_cast<int>(perms.size()),
      [&](int g, int i) {
        PointSet im = perms[static_cast<std::size_t>(g)].apply(objects[static_cast<std::size_t>(i)]);
        auto it = index.find(im.words()[0]);
        if (it == index.end()) {
          throw std::logic_error("orbits_of_sets: object list not closed under the action");
        }
        return it->second;
      });
}

std::vector<int> orbit_sizes_from_partition(const std::vector<int>& orbit_ids) {
  std::vector<int> sizes;
  for (int id : orbit_ids) {
    if (id >= static_cast<int>(sizes.size())) sizes.resize(static_cast<std::size_t>(id) + 1, 0);
    ++sizes[static_cast<std::size_t>(id)];
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Permutation> setwise_stabilizer(const AutomorphismGroup& group,
                                            const PointSet& fixed) {
  std::vector<Permutation> out;
  for (const auto& g : group.elements) {
    if (g.apply(fixed) == fixed) out.push_back(g);
  }
  return out;
}

}  // namespace gq42

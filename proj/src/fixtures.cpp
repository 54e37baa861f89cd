#include "facering/fixtures.hpp"

#include <map>

#include "facering/errors.hpp"

namespace facering {

namespace {

struct FixtureData {
  std::vector<std::vector<Vertex>> facets;
  bool sphere;
  bool collapsible;
};

const std::map<std::string, FixtureData>& table() {
  static const std::map<std::string, FixtureData> t = {
      {"OCT",
       {{{1, 3, 5}, {1, 4, 5}, {1, 3, 6}, {1, 4, 6}, {2, 3, 5}, {2, 4, 5}, {2, 3, 6}, {2, 4, 6}},
        true,
        false}},
      {"CROSS4",
       {{{1, 3, 5, 7}, {1, 3, 5, 8}, {1, 3, 6, 7}, {1, 3, 6, 8}, {1, 4, 5, 7}, {1, 4, 5, 8},
         {1, 4, 6, 7}, {1, 4, 6, 8}, {2, 3, 5, 7}, {2, 3, 5, 8}, {2, 3, 6, 7}, {2, 3, 6, 8},
         {2, 4, 5, 7}, {2, 4, 5, 8}, {2, 4, 6, 7}, {2, 4, 6, 8}},
        true,
        false}},
      {"FAN4", {{{1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {4, 5, 6}}, false, true}},
      // Dunce hat: the boundary edges 12, 23, 13 are each glued three times.
      {"DUNCE",
       {{{1, 3, 5}, {2, 3, 5}, {1, 2, 4}, {2, 4, 5}, {1, 3, 4}, {3, 4, 8}, {2, 3, 8}, {1, 2, 8},
         {1, 7, 8}, {1, 2, 7}, {2, 3, 7}, {3, 6, 7}, {1, 3, 6}, {1, 5, 6}, {4, 5, 6}, {4, 6, 8},
         {6, 7, 8}},
        false,
        false}},
      // Variables x1..x5 are vertices 1..5, y1..y5 are 6..10.
      {"BALL10",
       {{{1, 2, 3, 9, 10}, {1, 2, 8, 9, 10}, {1, 3, 7, 9, 10}, {1, 7, 8, 9, 10}, {2, 3, 6, 9, 10},
         {2, 6, 8, 9, 10}, {3, 6, 7, 9, 10}, {4, 6, 7, 8, 10}, {5, 6, 7, 8, 9}, {6, 7, 8, 9, 10}},
        false,
        true}},
      {"C3", {{{1, 2}, {2, 3}, {1, 3}}, true, false}},
      {"C4", {{{1, 2}, {2, 3}, {3, 4}, {1, 4}}, true, false}},
      {"EDGE", {{{1, 2}}, false, true}},
      {"PATH3", {{{1, 2}, {2, 3}}, false, true}},
      {"SIMPLEX2", {{{1, 2, 3}}, false, true}},
      {"TETRA", {{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, true, false}},
      {"BIPYR", {{{1, 2, 4}, {2, 3, 4}, {1, 3, 4}, {1, 2, 5}, {2, 3, 5}, {1, 3, 5}}, true, false}},
      {"RP2",
       {{{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6},
         {3, 4, 5}, {3, 4, 6}},
        false,
        false}},
  };
  return t;
}

}  // namespace

SimplicialComplex builtin_fixture(const std::string& name) {
  const auto& t = table();
  auto it = t.find(name);
  if (it == t.end()) throw InputError("unknown fixture '" + name + "'");
  auto c = SimplicialComplex::from_facets(it->second.facets);
  c.name = name;
  c.declared_sphere = it->second.sphere;
  c.declared_collapsible = it->second.collapsible;
  return c;
}

std::vector<std::string> builtin_fixture_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : table()) names.push_back(k);
  return names;
}

}  // namespace facering

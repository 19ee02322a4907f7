#pragma once

#include "intcol/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace intcol {

/// Family tag plus named parameters, e.g. `biregular:a=3,b=6,x=4` or
/// `complete_multipartite:sizes=1/2/3`. List values use '/' as separator.
struct FamilySpec {
    std::string family;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 1;

    static FamilySpec parse(std::string_view text, std::uint64_t seed = 1);
    std::string to_string() const;

    int integer(const std::string& key) const;
    int integer(const std::string& key, int fallback) const;
    double real(const std::string& key, double fallback) const;
    std::vector<int> integers(const std::string& key) const;
    std::string text(const std::string& key, const std::string& fallback) const;
};

struct Generated {
    Multigraph graph;
    std::optional<BipartitionCert> bipartition;
    std::optional<EdgeColoring> coloring;  // cubic_class1: its three matchings as colors 1..3
};

/// Families: tree(n), cactus(cycles, max_length, pendants), bipartite_random(a, b, p, max_degree, mult),
/// biregular(a, b, x, simple), eulerian_bipartite(a, b, max_degree, cycles), complete_multipartite(sizes),
/// balanced(n, r), semiregular(n, r), circular_complete(p, q), cubic_class1(n), odd_complete(n),
/// random_simple(n, p, max_degree), fixture(name).
/// Throws PreconditionError on unknown families or infeasible parameters.
Generated generate(const FamilySpec& spec);

struct Fixture {
    std::string name;
    std::string description;
    Multigraph graph;
    bool interval_colorable = false;
    std::optional<int> theta;
    std::optional<int> chromatic_index;
    std::optional<int> arboricity;
};

const std::vector<Fixture>& fixture_catalog();
const Fixture& fixture(std::string_view name);

}  // namespace intcol

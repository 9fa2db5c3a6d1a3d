#include "homtest/fixtures.hpp"

#include <array>

#include "homtest/errors.hpp"

namespace homtest {

namespace {

/// Two isolated points (0,1) plus a square-cellulated circle on vertices
/// 2..5; the involution swaps the points and acts antipodally on the
/// square (vertex rotation by two steps).
FixtureComplex two_points_and_circle() {
    FixtureComplex f;
    f.name = "two-points-and-circle";
    ChainComplexZ2& c = f.complex;
    c.sizes = {6, 4};
    c.boundaries.resize(2);
    Z2Matrix d1(6, 4);
    const std::array<std::pair<int, int>, 4> edges = {{{2, 3}, {3, 4}, {4, 5}, {5, 2}}};
    for (int e = 0; e < 4; ++e) {
        d1.set(edges[e].first, e, true);
        d1.set(edges[e].second, e, true);
    }
    c.boundaries[1] = std::move(d1);
    f.involution = {{1, 0, 4, 5, 2, 3}, {2, 3, 0, 1}};
    return f;
}

/// Octahedral 2-sphere (vertices 0..5, antipodal pairs 0-1, 2-3, 4-5)
/// with a triangle-shaped circle hung on vertex 0 (new vertices 6,7) and
/// its mirror on vertex 1 (new vertices 8,9). The involution is the
/// antipodal map on the sphere and swaps the two circles.
FixtureComplex sphere_with_ears() {
    FixtureComplex f;
    f.name = "sphere-with-ears";
    ChainComplexZ2& c = f.complex;

    // Octahedron edges: every pair of non-antipodal vertices.
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 1 || u % 2 != 0) edges.emplace_back(u, v);
    // Ear 1 on vertex 0: cycle 0-6, 6-7, 7-0. Ear 2 on vertex 1: 1-8, 8-9, 9-1.
    edges.insert(edges.end(), {{0, 6}, {6, 7}, {0, 7}, {1, 8}, {8, 9}, {1, 9}});

    // Octahedron faces: one choice from each antipodal pair.
    std::vector<std::array<int, 3>> faces;
    for (int x = 0; x < 2; ++x)
        for (int y = 2; y < 4; ++y)
            for (int z = 4; z < 6; ++z) faces.push_back({x, y, z});

    c.sizes = {10, static_cast<int>(edges.size()), static_cast<int>(faces.size())};
    c.boundaries.resize(3);

    auto edge_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e] == std::make_pair(u, v)) return static_cast<int>(e);
        throw InternalError("sphere_with_ears: unknown edge");
    };

    Z2Matrix d1(10, static_cast<int>(edges.size()));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        d1.set(edges[e].first, static_cast<int>(e), true);
        d1.set(edges[e].second, static_cast<int>(e), true);
    }
    Z2Matrix d2(static_cast<int>(edges.size()), static_cast<int>(faces.size()));
    for (std::size_t t = 0; t < faces.size(); ++t) {
        const auto [x, y, z] = faces[t];
        d2.set(edge_index(x, y), static_cast<int>(t), true);
        d2.set(edge_index(y, z), static_cast<int>(t), true);
        d2.set(edge_index(x, z), static_cast<int>(t), true);
    }
    c.boundaries[1] = std::move(d1);
    c.boundaries[2] = std::move(d2);

    const std::array<int, 10> antipode = {1, 0, 3, 2, 5, 4, 8, 9, 6, 7};
    f.involution.resize(3);
    f.involution[0].assign(antipode.begin(), antipode.end());
    f.involution[1].resize(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
        f.involution[1][e] = edge_index(antipode[edges[e].first], antipode[edges[e].second]);
    f.involution[2].resize(faces.size());
    for (std::size_t t = 0; t < faces.size(); ++t) {
        const auto [x, y, z] = faces[t];
        const std::array<int, 3> img = {antipode[x], antipode[y], antipode[z]};
        for (std::size_t s = 0; s < faces.size(); ++s) {
            const auto [a, b, cc] = faces[s];
            if (a == img[0] && b == img[1] && cc == img[2]) {
                f.involution[2][t] = static_cast<int>(s);
                break;
            }
        }
    }
    return f;
}

} // namespace

std::vector<FixtureComplex> fixture_complexes() {
    return {two_points_and_circle(), sphere_with_ears()};
}

} // namespace homtest

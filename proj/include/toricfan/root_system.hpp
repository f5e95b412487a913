#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toricfan/errors.hpp"
#include "toricfan/fan.hpp"
#include "toricfan/lattice.hpp"

namespace toricfan {

/// A crystallographic root datum, given by its Cartan matrix
/// a_ij = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).  The coweight lattice is
/// coordinatized by the fundamental coweights, so the fundamental Weyl
/// chamber is the positive orthant.
struct RootDatum {
    int rank = 0;
    IntMatrix cartan;
    std::string type_name;  // optional, e.g. "A2xB3"
};

inline void validate_cartan(const IntMatrix& a) {
    size_t n = a.size();
    if (n == 0) throw InvalidCartanMatrix("Cartan matrix is empty");
    for (const auto& row : a)
        if (row.size() != n) throw InvalidCartanMatrix("Cartan matrix is not square");
    for (size_t i = 0; i < n; ++i) {
        if (a[i][i] != 2)
            throw InvalidCartanMatrix("diagonal entry " + std::to_string(a[i][i]) +
                                      " at position " + std::to_string(i + 1));
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0)
                throw InvalidCartanMatrix("positive off-diagonal entry at (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          ")");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw InvalidCartanMatrix("asymmetric zero pattern at (" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + ")");
            if (a[i][j] * a[j][i] > 3)
                throw InvalidCartanMatrix("entry product " +
                                          std::to_string(a[i][j] * a[j][i]) +
                                          " is not crystallographic");
        }
    }
}

inline RootDatum root_datum_from_cartan(IntMatrix m, std::string name = "") {
    validate_cartan(m);
    RootDatum r;
    r.rank = static_cast<int>(m.size());
    r.cartan = std::move(m);
    r.type_name = std::move(name);
    return r;
}

namespace detail {

/// Bourbaki Cartan matrix of a single irreducible type.
inline IntMatrix irreducible_cartan(char letter, int n) {
    auto path = [](int k) {
        IntMatrix m(static_cast<size_t>(k), Vec(static_cast<size_t>(k), 0));
        for (int i = 0; i < k; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        for (int i = 0; i + 1 < k; ++i) {
            m[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
            m[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
        }
        return m;
    };
    switch (letter) {
        case 'A':
            if (n < 1) throw InvalidCartanMatrix("type A requires rank >= 1");
            return path(n);
        case 'B': {
            if (n < 1) throw InvalidCartanMatrix("type B requires rank >= 1");
            IntMatrix m = path(n);
            if (n >= 2) m[static_cast<size_t>(n - 2)][static_cast<size_t>(n - 1)] = -2;
            return m;
        }
        case 'C': {
            if (n < 1) throw InvalidCartanMatrix("type C requires rank >= 1");
            IntMatrix m = path(n);
            if (n >= 2) m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 2)] = -2;
            return m;
        }
        case 'D': {
            if (n < 4) throw InvalidCartanMatrix("type D requires rank >= 4");
            IntMatrix m = path(n - 1);
            m.resize(static_cast<size_t>(n));
            for (auto& row : m) row.resize(static_cast<size_t>(n), 0);
            m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)] = 2;
            m[static_cast<size_t>(n - 3)][static_cast<size_t>(n - 1)] = -1;
            m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 3)] = -1;
            return m;
        }
        case 'E': {
            if (n < 6 || n > 8) throw InvalidCartanMatrix("type E requires rank 6, 7 or 8");
            // chain 1-3-4-5-...-n with node 2 attached to node 4
            IntMatrix m(static_cast<size_t>(n), Vec(static_cast<size_t>(n), 0));
            for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
            auto join = [&](int i, int j) {
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = -1;
                m[static_cast<size_t>(j)][static_cast<size_t>(i)] = -1;
            };
            join(0, 2);
            join(1, 3);
            for (int i = 2; i + 1 < n; ++i) join(i, i + 1);
            return m;
        }
        case 'F':
            if (n != 4) throw InvalidCartanMatrix("type F requires rank 4");
            return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
        case 'G':
            if (n != 2) throw InvalidCartanMatrix("type G requires rank 2");
            return {{2, -1}, {-3, 2}};
        default:
            throw InvalidCartanMatrix(std::string("unknown type letter '") + letter + "'");
    }
}

}  // namespace detail

/// Root datum for a type name such as "A2", "G2" or a product "A2xB3".
inline RootDatum named_root_datum(const std::string& name) {
    IntMatrix cartan;
    size_t pos = 0;
    while (pos < name.size()) {
        char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[pos])));
        ++pos;
        size_t start = pos;
        while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
        if (start == pos) throw InvalidCartanMatrix("missing rank in type name '" + name + "'");
        int n = std::stoi(name.substr(start, pos - start));
        IntMatrix block = detail::irreducible_cartan(letter, n);
        size_t off = cartan.size();
        cartan.resize(off + block.size());
        for (auto& row : cartan) row.resize(cartan.size(), 0);
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = 0; j < block.size(); ++j) cartan[off + i][off + j] = block[i][j];
        if (pos < name.size()) {
            if (name[pos] != 'x' && name[pos] != 'X')
                throw InvalidCartanMatrix("expected 'x' between factors in '" + name + "'");
            ++pos;
            if (pos == name.size()) throw InvalidCartanMatrix("trailing 'x' in '" + name + "'");
        }
    }
    return root_datum_from_cartan(std::move(cartan), name);
}

/// An element of the Weyl group as a unimodular matrix acting on coweight
/// coordinates (columns are the images of the fundamental coweights).
struct WeylElement {
    IntMatrix matrix;
};

/// The simple reflection s_{alpha_j} (j is 1-based): it fixes omega_i for
/// i != j and sends omega_j to -omega_j - sum_{i != j} a_ij omega_i.
inline WeylElement simple_reflection(const RootDatum& r, int j) {
    if (j < 1 || j > r.rank)
        throw IndexOutOfRange("reflection index " + std::to_string(j) + " for rank " +
                              std::to_string(r.rank));
    size_t n = static_cast<size_t>(r.rank);
    size_t c = static_cast<size_t>(j - 1);
    IntMatrix m = identity_matrix(n);
    for (size_t i = 0; i < n; ++i) m[i][c] = i == c ? -1 : -r.cartan[i][c];
    return {std::move(m)};
}

/// The fan of Weyl chambers: maximal cones are the orbit of the positive
/// orthant under the simple reflections, one cone per Weyl group element.
inline Fan weyl_fan(const RootDatum& r) {
    if (r.rank > 6)
        throw OrbitTooLarge("Weyl fan construction is limited to rank 6, got rank " +
                            std::to_string(r.rank));
    constexpr size_t kOrbitGuard = 1000000;
    size_t n = static_cast<size_t>(r.rank);
    std::vector<IntMatrix> gens;
    gens.reserve(n);
    for (int j = 1; j <= r.rank; ++j) gens.push_back(simple_reflection(r, j).matrix);

    std::set<IntMatrix> seen;
    std::vector<IntMatrix> frontier = {identity_matrix(n)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const IntMatrix& w : frontier)
            for (const IntMatrix& g : gens) {
                IntMatrix m = mat_mul(g, w);
                if (seen.insert(m).second) {
                    if (seen.size() > kOrbitGuard)
                        throw OrbitTooLarge("Weyl orbit exceeds " +
                                            std::to_string(kOrbitGuard) + " chambers");
                    next.push_back(std::move(m));
                }
            }
        frontier = std::move(next);
    }

    std::set<Vec> ray_set;
    for (const IntMatrix& w : seen)
        for (size_t j = 0; j < n; ++j) {
            Vec col(n);
            for (size_t i = 0; i < n; ++i) col[i] = w[i][j];
            ray_set.insert(std::move(col));
        }
    Fan f;
    f.dim = r.rank;
    std::map<Vec, int> index_of;
    for (const Vec& v : ray_set) {
        index_of.emplace(v, static_cast<int>(f.rays.size()));
        f.rays.push_back(v);
    }
    std::set<std::vector<int>> cones;
    for (const IntMatrix& w : seen) {
        std::vector<int> cone(n);
        for (size_t j = 0; j < n; ++j) {
            Vec col(n);
            for (size_t i = 0; i < n; ++i) col[i] = w[i][j];
            cone[j] = index_of.at(col);
        }
        std::sort(cone.begin(), cone.end());
        cones.insert(std::move(cone));
    }
    f.max_cones.assign(cones.begin(), cones.end());
    return f;
}

/// Column sums of the Cartan matrix; these are exactly the anticanonical
/// degrees realized by the walls of the Weyl fan.
inline std::vector<Int> cartan_column_degrees(const RootDatum& r) {
    size_t n = static_cast<size_t>(r.rank);
    std::vector<Int> sums(n, 0);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) sums[j] = checked_add(sums[j], r.cartan[i][j]);
    return sums;
}

}  // namespace toricfan

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "weilk3/invariants.hpp"
#include "weilk3/laurent.hpp"
#include "weilk3/spanmodel.hpp"

namespace weilk3 {

/// j : {1..r} -> {0..4}; slot i carries H^{2 j(i)} of the fourfold.
struct JMap {
    std::vector<int> values;

    int weight() const {
        int w = 0;
        for (int v : values) w += v;
        return w;
    }
    unsigned twos() const {
        unsigned n = 0;
        for (int v : values) n += v == 2 ? 1U : 0U;
        return n;
    }

    friend bool operator==(const JMap&, const JMap&) = default;
};

struct JMapOrbit {
    JMap map;
    std::uint64_t orbit_size = 0;
};

inline constexpr int kMaxPower = 8;
inline constexpr int kMaxSlotDegree = 4;

inline void require_power_range(int r, int m) {
    if (r < 1 || r > kMaxPower) fail(ErrorKind::OutOfRange, "r must lie in 1..8");
    if (m < 0) fail(ErrorKind::OutOfRange, "m must be non-negative");
}

/// Non-decreasing maps of weight m with their S_r-orbit sizes r!/prod mult!.
inline std::vector<JMapOrbit> enumerate_jmaps(int r, int m) {
    require_power_range(r, m);
    std::vector<JMapOrbit> out;
    if (m > kMaxSlotDegree * r) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int lowest, int remaining) {
        const int left = r - static_cast<int>(cur.size());
        if (left == 0) {
            if (remaining != 0) return;
            std::uint64_t orbit = 1;
            for (int i = 2; i <= r; ++i) orbit *= static_cast<std::uint64_t>(i);
            std::size_t i = 0;
            while (i < cur.size()) {
                std::size_t j = i;
                while (j < cur.size() && cur[j] == cur[i]) ++j;
                for (std::size_t f = 2; f <= j - i; ++f) orbit /= f;
                i = j;
            }
            out.push_back({JMap{cur}, orbit});
            return;
        }
        for (int v = lowest; v <= kMaxSlotDegree; ++v) {
            if (v * left > remaining) break;
            if (kMaxSlotDegree * (left - 1) + v < remaining) continue;
            cur.push_back(v);
            rec(v, remaining - v);
            cur.pop_back();
        }
    };
    rec(0, m);
    return out;
}

struct TateChunk {
    JMap map;
    std::uint64_t orbit_size = 0;
    unsigned twos = 0;
    /// Tate dimension of one chunk H_j in the orbit.
    Int dim;
};

struct TateDimension {
    Int total;
    std::vector<TateChunk> chunks;
};

/// dim (H^{2m}(Y^r)(m))^G: each map j contributes inv_dim(st, #{j(i) = 2});
/// slots of degree 0, 2, 6, 8 are one-dimensional Tate lines.
inline TateDimension tate_dim_power(const EigenStructure& st, int r, int m) {
    TateDimension out;
    out.total = 0;
    for (const auto& o : enumerate_jmaps(r, m)) {
        TateChunk c{o.map, o.orbit_size, o.map.twos(), inv_dim(st, o.map.twos())};
        out.total += c.dim * Int(static_cast<unsigned long>(o.orbit_size));
        out.chunks.push_back(std::move(c));
    }
    return out;
}

inline constexpr int kMaxModelPower = 4;
inline constexpr unsigned kMaxModelPairs = 3;
inline constexpr unsigned kMaxModelUnits = 3;

struct DecompositionChunk {
    JMap map;
    std::uint64_t orbit_size = 0;
    unsigned twos = 0;
    /// 1: j(1) < 2, 2: j(r) > 2, 3: every slot is 2 (canonical j).
    int lemma_case = 3;
    std::size_t rank = 0;
    Int dim;
    bool ok = false;
    std::string rank_method;
};

struct DecompositionResult {
    bool ok = true;
    std::vector<DecompositionChunk> chunks;
};

namespace detail {

/// Set partitions of {0..n-1} into blocks of size 1 or 2.
inline std::vector<std::vector<std::vector<std::size_t>>> small_block_partitions(std::size_t n) {
    std::vector<std::vector<std::vector<std::size_t>>> out;
    std::vector<std::vector<std::size_t>> cur;
    std::vector<bool> used(n, false);
    std::function<void()> rec = [&] {
        std::size_t first = 0;
        while (first < n && used[first]) ++first;
        if (first == n) {
            out.push_back(cur);
            return;
        }
        used[first] = true;
        cur.push_back({first});
        rec();
        cur.pop_back();
        for (std::size_t j = first + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            cur.push_back({first, j});
            rec();
            cur.pop_back();
            used[j] = false;
        }
        used[first] = false;
    };
    rec();
    return out;
}

struct SparseEntry {
    std::vector<std::size_t> idx;
    LaurentScalar coef;
};

/// Products of pair invariants (unit products and graph classes G_0..G_2k)
/// and unit-block singletons over all small-block partitions of n slots, in
/// the coordinates of the invariants of V^{(x) n} (zero-weight index tuples).
struct PairingProducts {
    std::size_t coordinates = 0;
    std::vector<LaurentVec> vectors;
};

inline PairingProducts pairing_products(const EigenStructure& st, unsigned n) {
    const DiagonalModel model(st);
    const std::size_t N = model.size();

    // Coordinates: index tuples with vanishing total weight.
    std::map<std::vector<std::size_t>, std::size_t> coord;
    {
        std::vector<std::size_t> t(n, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (pos == n) {
                std::vector<int> w(st.k + 1, 0);
                for (std::size_t i : t) {
                    const int s = model.weight(i);
                    if (s > 0) ++w[static_cast<std::size_t>(s)];
                    else if (s < 0) --w[static_cast<std::size_t>(-s)];
                }
                for (std::size_t i = 1; i <= st.k; ++i)
                    if (w[i] != 0) return;
                coord.emplace(t, coord.size());
                return;
            }
            for (std::size_t i = 0; i < N; ++i) {
                t[pos] = i;
                rec(pos + 1);
            }
        };
        rec(0);
    }

    // Pair-block generators as sparse lists over V (x) V.
    const auto basis = invariant_basis_vv(model);
    std::vector<std::vector<SparseEntry>> pair_gens;
    for (const auto& g : generators_vv(model, static_cast<int>(2 * st.k))) {
        std::vector<SparseEntry> s;
        for (std::size_t c = 0; c < g.size(); ++c)
            if (!g[c].is_zero()) s.push_back({{basis[c].first, basis[c].second}, g[c]});
        pair_gens.push_back(std::move(s));
    }
    std::vector<std::vector<SparseEntry>> single_gens;
    for (std::size_t u = 0; u < st.a; ++u) single_gens.push_back({{{u}, LaurentScalar(1)}});

    std::map<std::string, LaurentVec> rows; // keyed by printed form to drop duplicates
    for (const auto& part : small_block_partitions(n)) {
        std::vector<const std::vector<std::vector<SparseEntry>>*> choices;
        for (const auto& block : part) choices.push_back(block.size() == 2 ? &pair_gens : &single_gens);
        std::vector<std::size_t> pick(part.size(), 0);
        if (std::any_of(choices.begin(), choices.end(), [](const auto* c) { return c->empty(); })) continue;
        while (true) {
            LaurentVec row(coord.size());
            std::vector<std::size_t> t(n, 0);
            std::function<void(std::size_t, const LaurentScalar&)> expand = [&](std::size_t b, const LaurentScalar& c) {
                if (b == part.size()) {
                    row[coord.at(t)] += c;
                    return;
                }
                for (const auto& e : (*choices[b])[pick[b]]) {
                    for (std::size_t s = 0; s < part[b].size(); ++s) t[part[b][s]] = e.idx[s];
                    expand(b + 1, c * e.coef);
                }
            };
            expand(0, LaurentScalar(1));
            std::ostringstream key;
            for (const auto& s : row) key << s << ';';
            rows.emplace(key.str(), std::move(row));

            std::size_t b = 0;
            while (b < part.size() && ++pick[b] == choices[b]->size()) pick[b++] = 0;
            if (b == part.size()) break;
        }
    }
    std::vector<LaurentVec> vecs;
    vecs.reserve(rows.size());
    for (auto& [k, v] : rows) vecs.push_back(std::move(v));
    return {coord.size(), std::move(vecs)};
}

struct PairingRank {
    std::size_t rank = 0;
    /// "specialization" or "bareiss"
    std::string method;
};

/// Every product lies in a space of dimension inv_dim(st, n), and the rank
/// at a rational point never exceeds the rank over Q(x). So reaching
/// inv_dim at x = (2, 3, 5) settles the rank exactly; otherwise Bareiss decides.
inline PairingRank pairing_products_rank(const EigenStructure& st, unsigned n) {
    const auto [ncoords, vecs] = pairing_products(st, n);
    if (Int(static_cast<unsigned long>(ncoords)) != inv_dim(st, n))
        fail(ErrorKind::InvalidArgument, "coordinate count differs from inv_dim");
    const std::vector<Rat> point{Rat(2), Rat(3), Rat(5)};
    const std::size_t at_point = specialized_rank(vecs, point);
    if (at_point == ncoords) return {at_point, "specialization"};
    return {span_rank(vecs), "bareiss"};
}

} // namespace detail

/// For each canonical j, the 2-slot part of H_j must be spanned by products
/// of pullbacks from Y and Y^2; the other slots are Tate lines.
inline DecompositionResult decomposable_check(const EigenStructure& st, int r, int m) {
    require_power_range(r, m);
    if (r > kMaxModelPower || st.k > kMaxModelPairs || st.a > kMaxModelUnits)
        fail(ErrorKind::ModelTooLarge, "model limited to r <= 4, k <= 3, a <= 3");
    DecompositionResult out;
    std::map<unsigned, detail::PairingRank> rank_by_twos;
    for (const auto& o : enumerate_jmaps(r, m)) {
        DecompositionChunk c;
        c.map = o.map;
        c.orbit_size = o.orbit_size;
        c.twos = o.map.twos();
        const auto& v = o.map.values;
        c.lemma_case = v.front() < 2 ? 1 : (v.back() > 2 ? 2 : 3);
        c.dim = inv_dim(st, c.twos);
        auto it = rank_by_twos.find(c.twos);
        if (it == rank_by_twos.end())
            it = rank_by_twos.emplace(c.twos, detail::pairing_products_rank(st, c.twos)).first;
        c.rank = it->second.rank;
        c.rank_method = it->second.method;
        c.ok = Int(static_cast<unsigned long>(c.rank)) == c.dim;
        out.ok = out.ok && c.ok;
        out.chunks.push_back(std::move(c));
    }
    return out;
}

} // namespace weilk3

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weilk3/invariants.hpp"
#include "weilk3/laurent.hpp"

namespace weilk3 {

/// Basis e_0..e_{N-1} of V diagonalizing Frobenius: indices below a carry
/// eigenvalue 1, index a+i carries x_i and a+k+i carries x_i^-1.
class DiagonalModel {
public:
    explicit DiagonalModel(EigenStructure st) : st_(st) {}

    const EigenStructure& structure() const { return st_; }
    std::size_t size() const { return st_.dimension(); }
    bool in_unit_block(std::size_t i) const { return i < st_.a; }

    /// lambda_i^j as a Laurent monomial.
    LaurentScalar eigenvalue_power(std::size_t i, int j) const {
        if (in_unit_block(i)) return LaurentScalar(1);
        const std::size_t rel = i - st_.a;
        if (rel < st_.k) return LaurentScalar::monomial(rel, j);
        return LaurentScalar::monomial(rel - st_.k, -j);
    }
    /// Signed variable index (+-(i+1)) of lambda_i, 0 for eigenvalue 1.
    int weight(std::size_t i) const {
        if (in_unit_block(i)) return 0;
        const std::size_t rel = i - st_.a;
        if (rel < st_.k) return static_cast<int>(rel) + 1;
        return -static_cast<int>(rel - st_.k) - 1;
    }
    /// i* with lambda_{i*} = lambda_i^-1; identity on the unit block.
    std::size_t dual(std::size_t i) const {
        if (in_unit_block(i)) return i;
        const std::size_t rel = i - st_.a;
        return rel < st_.k ? i + st_.k : i - st_.k;
    }

private:
    EigenStructure st_;
};

using TensorIndex = std::pair<std::size_t, std::size_t>;

/// e_i (x) e_j with lambda_i lambda_j = 1: the unit block row by row, then
/// (a+i, a+k+i) and (a+k+i, a+i) for each pair.
inline std::vector<TensorIndex> invariant_basis_vv(const DiagonalModel& model) {
    const auto& st = model.structure();
    std::vector<TensorIndex> out;
    for (std::size_t i = 0; i < st.a; ++i)
        for (std::size_t j = 0; j < st.a; ++j) out.emplace_back(i, j);
    for (std::size_t i = 0; i < st.k; ++i) {
        out.emplace_back(st.a + i, st.a + st.k + i);
        out.emplace_back(st.a + st.k + i, st.a + i);
    }
    return out;
}

namespace detail {

inline std::map<TensorIndex, std::size_t> basis_positions(const DiagonalModel& model) {
    std::map<TensorIndex, std::size_t> pos;
    const auto basis = invariant_basis_vv(model);
    for (std::size_t c = 0; c < basis.size(); ++c) pos.emplace(basis[c], c);
    return pos;
}

} // namespace detail

/// Class of the graph of Frob^j: sum_i lambda_i^j e_i (x) e_{i*}, in the
/// coordinates of invariant_basis_vv.
inline LaurentVec graph_tensor(const DiagonalModel& model, int j) {
    const auto pos = detail::basis_positions(model);
    LaurentVec v(pos.size());
    for (std::size_t i = 0; i < model.size(); ++i) v[pos.at({i, model.dual(i)})] = model.eigenvalue_power(i, j);
    return v;
}

/// u (x) v for unit-block basis vectors e_u, e_v.
inline LaurentVec unit_product(const DiagonalModel& model, std::size_t u, std::size_t v) {
    const auto pos = detail::basis_positions(model);
    LaurentVec out(pos.size());
    out[pos.at({u, v})] = LaurentScalar(1);
    return out;
}

/// Generators of (V (x) V)^G: all unit-block products and G_0..G_J.
inline std::vector<LaurentVec> generators_vv(const DiagonalModel& model, int J) {
    std::vector<LaurentVec> gens;
    const auto& st = model.structure();
    for (std::size_t u = 0; u < st.a; ++u)
        for (std::size_t v = 0; v < st.a; ++v) gens.push_back(unit_product(model, u, v));
    for (int j = 0; j <= J; ++j) gens.push_back(graph_tensor(model, j));
    return gens;
}

struct GenerationResult {
    std::size_t rank = 0;
    std::size_t dimension = 0;
    bool spans() const { return rank == dimension; }
};

/// Rank of the unit-block products together with G_0..G_J against
/// dim (V (x) V)^G = a^2 + 2k.
inline GenerationResult generation_rank_vv(const DiagonalModel& model, int J) {
    const auto& st = model.structure();
    if (J < 0 || static_cast<unsigned>(J) < 2 * st.k)
        fail(ErrorKind::JTooSmall, "J = " + std::to_string(J) + " below 2k = " + std::to_string(2 * st.k));
    return {span_rank(generators_vv(model, J)), invariant_basis_vv(model).size()};
}

inline bool verify_generation_vv(const DiagonalModel& model, int J) { return generation_rank_vv(model, J).spans(); }

/// Tate classes in H^8(Y x Y)(4) for the fourfold profile: the four
/// one-dimensional Kunneth pieces plus the middle (H^4 (x) H^4) invariants.
inline Int square_tate_dim(const EigenStructure& st) { return inv_dim(st, 2) + 4; }

struct ProductTateResult {
    bool ok = false;
    /// a_Y * a_Z, present when ok.
    std::optional<Int> mixed_dim;
};

/// Mixed invariants of V_Y (x) V_Z reduce to the unit blocks when the
/// irreducible transcendental factors differ in degree (no common roots,
/// so no alpha = beta^-1); equal degrees leave the question open.
inline ProductTateResult product_tate_check(const EigenStructure& stY, const EigenStructure& stZ, int degY, int degZ) {
    ProductTateResult out;
    if (degY != degZ || stY.k == 0 || stZ.k == 0) {
        out.ok = true;
        out.mixed_dim = Int(stY.a) * Int(stZ.a);
    }
    return out;
}

inline ProductTateResult product_tate_check(const EigenStructure& stY, const EigenStructure& stZ) {
    return product_tate_check(stY, stZ, static_cast<int>(2 * stY.k), static_cast<int>(2 * stZ.k));
}

} // namespace weilk3

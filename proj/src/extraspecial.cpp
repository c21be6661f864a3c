#include "grasspack/extraspecial.hpp"

#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

void check_same_i(const GroupElement& g, const GroupElement& h) {
    if (g.i != h.i) throw UsageError("group elements from different groups (i mismatch)");
}

Word unit(int i, int j) { return Word{1} << (i - 1 - j); }

}  // namespace

GroupElement GroupElement::lift(const OrthogonalSpace& space, Word v) {
    return GroupElement{space.i(), false, space.x_part(v), space.y_part(v)};
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    check_same_i(g, h);
    const bool sign = g.sign ^ h.sign ^ static_cast<bool>(parity(h.a & g.b));
    return GroupElement{g.i, sign, g.a ^ h.a, g.b ^ h.b};
}

GroupElement inverse(const GroupElement& g) {
    // g^2 = (-1)^(a.b) I
    GroupElement inv = g;
    inv.sign ^= static_cast<bool>(parity(g.a & g.b));
    return inv;
}

ExactMatrix as_matrix(const GroupElement& g) {
    const int m = 1 << g.i;
    ExactMatrix mat(m, m);
    for (Word u = 0; u < static_cast<Word>(m); ++u) {
        const bool negative = g.sign ^ static_cast<bool>(parity(g.b & u));
        mat.at(static_cast<int>(u ^ g.a), static_cast<int>(u)) = negative ? -1 : 1;
    }
    return mat;
}

std::optional<GroupElement> decode_group_element(const ExactMatrix& m, int i) {
    const int dim = 1 << i;
    if (m.rows() != dim || m.cols() != dim || m.half_scale() != 0) return std::nullopt;
    GroupElement g{i, false, 0, 0};
    int row0 = -1;
    for (int r = 0; r < dim; ++r) {
        if (m.at(r, 0) != 0) {
            row0 = r;
            break;
        }
    }
    if (row0 < 0) return std::nullopt;
    g.a = static_cast<Word>(row0);
    g.sign = m.at(row0, 0) < 0;
    for (int j = 0; j < i; ++j) {
        const Word u = unit(i, j);
        const std::int64_t entry = m.at(static_cast<int>(u ^ g.a), static_cast<int>(u));
        if (entry != 1 && entry != -1) return std::nullopt;
        if ((entry < 0) != g.sign) g.b |= u;
    }
    if (as_matrix(g) != m) return std::nullopt;
    return g;
}

int cocycle(const OrthogonalSpace& space, Word u, Word v) {
    return parity(space.x_part(v) & space.y_part(u)) ? -1 : 1;
}

CharacterAssignment::CharacterAssignment(const OrthogonalSpace& space, F2Subspace base,
                                         std::uint64_t basis_signs)
    : i_(space.i()), base_(std::move(base)), basis_signs_(basis_signs) {
    if (!space.is_totally_singular(base_)) {
        throw DomainError("subspace " + base_.str() +
                          " is not totally singular; its preimage is non-abelian");
    }
    if (base_.dim() < 64 && (basis_signs_ >> base_.dim()) != 0) {
        throw UsageError("character sign mask has bits beyond the subspace dimension");
    }
}

int CharacterAssignment::sign(Word v) const {
    const OrthogonalSpace space(i_);
    const std::uint64_t coords = base_.coordinates(v);
    Word acc = 0;
    int s = 1;
    const auto& rows = base_.basis();
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (!((coords >> j) & 1u)) continue;
        if ((basis_signs_ >> j) & 1u) s = -s;
        s *= cocycle(space, acc, rows[j]);
        acc ^= rows[j];
    }
    if (acc != v) throw UsageError("character evaluated outside its subspace");
    return s;
}

CharacterAssignment solve_character(const OrthogonalSpace& space, const F2Subspace& s) {
    return CharacterAssignment(space, s, 0);
}

ExactMatrix character_projection(const OrthogonalSpace& space, const CharacterAssignment& chi) {
    const int m = 1 << space.i();
    const int d = chi.base().dim();
    ExactMatrix p(m, m, 2 * d);
    for (Word v : chi.base().elements()) {
        const int s = chi.sign(v);
        const Word a = space.x_part(v);
        const Word b = space.y_part(v);
        for (Word u = 0; u < static_cast<Word>(m); ++u) {
            const int entry = parity(b & u) ? -s : s;
            p.at(static_cast<int>(u ^ a), static_cast<int>(u)) += entry;
        }
    }
    return p.normalize();
}

std::vector<InvariantPlane> invariant_planes(const OrthogonalSpace& space, const F2Subspace& s) {
    if (!space.is_totally_singular(s)) {
        throw DomainError("subspace " + s.str() + " is not totally singular");
    }
    std::vector<InvariantPlane> planes;
    const std::uint64_t count = std::uint64_t{1} << s.dim();
    planes.reserve(count);
    for (std::uint64_t signs = 0; signs < count; ++signs) {
        CharacterAssignment chi(space, s, signs);
        ExactMatrix proj = character_projection(space, chi);
        planes.push_back({std::move(chi), std::move(proj)});
    }
    return planes;
}

ExactMatrix permutation_matrix(int i, const std::vector<Word>& columns, Word shift) {
    if (static_cast<int>(columns.size()) != i) throw UsageError("permutation matrix needs i columns");
    const int m = 1 << i;
    ExactMatrix mat(m, m);
    std::vector<bool> hit(static_cast<std::size_t>(m), false);
    for (Word u = 0; u < static_cast<Word>(m); ++u) {
        Word image = shift;
        for (int j = 0; j < i; ++j) {
            if (u & unit(i, j)) image ^= columns[static_cast<std::size_t>(j)];
        }
        if (image >= static_cast<Word>(m) || hit[image]) throw DomainError("matrix A is not invertible over F2");
        hit[image] = true;
        mat.at(static_cast<int>(image), static_cast<int>(u)) = 1;
    }
    return mat;
}

ExactMatrix hadamard_transform(int i) {
    const int m = 1 << i;
    ExactMatrix h(m, m, i);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) h.at(u, v) = parity(static_cast<Word>(u & v)) ? -1 : 1;
    return h;
}

ExactMatrix hadamard_first_bit(int i) {
    const int m = 1 << i;
    const int half = m / 2;
    ExactMatrix h(m, m, 1);
    for (int u = 0; u < m; ++u) {
        const int rest = u % half;
        h.at(u, rest) = 1;
        h.at(u, rest + half) = u >= half ? -1 : 1;
    }
    return h;
}

std::vector<ExactMatrix> clifford_generators(int i) {
    if (i < 1) throw UsageError("clifford_generators needs i >= 1");
    OrthogonalSpace space(i);  // range check
    std::vector<ExactMatrix> gens;
    for (int j = 0; j < i; ++j) gens.push_back(as_matrix(GroupElement{i, false, unit(i, j), 0}));
    for (int j = 0; j < i; ++j) gens.push_back(as_matrix(GroupElement{i, false, 0, unit(i, j)}));
    if (i >= 2) {
        std::vector<Word> transvection, cycle;
        for (int j = 0; j < i; ++j) {
            transvection.push_back(unit(i, j));
            cycle.push_back(unit(i, (j + 1) % i));
        }
        transvection[1] ^= unit(i, 0);
        gens.push_back(permutation_matrix(i, transvection, 0));
        gens.push_back(permutation_matrix(i, cycle, 0));
    }
    gens.push_back(hadamard_transform(i));
    // H on one coordinate bit turns X(e_1) into Y(e_1) and nothing else; the
    // list above alone preserves the pair {X, Y} and cannot reach all of L.
    if (i >= 2) gens.push_back(hadamard_first_bit(i));
    return gens;
}

std::uint64_t clifford_group_order(int i) {
    if (i < 1) throw UsageError("clifford_group_order needs i >= 1");
    unsigned __int128 order = 1;
    const auto guard = [&order] {
        if (order >> 64) throw OverflowError("Clifford group order exceeds 64 bits");
    };
    for (int e = 0; e < i * i + i + 2; ++e) {
        order *= 2;
        guard();
    }
    order *= (std::uint64_t{1} << i) - 1;
    guard();
    for (int j = 1; j < i; ++j) {
        order *= (std::uint64_t{1} << (2 * j)) - 1;
        guard();
    }
    return static_cast<std::uint64_t>(order);
}

}  // namespace grasspack

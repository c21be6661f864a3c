#include "grasspack/spreads.hpp"

#include "grasspack/errors.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace grasspack {

namespace {

struct ExactCover {
    std::vector<std::vector<std::uint32_t>> member_points;   // point indices per member
    std::vector<std::vector<std::uint32_t>> point_members;   // member indices per point
    std::vector<std::uint8_t> covered;
    std::vector<std::uint32_t> chosen;
    std::size_t target = 0;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;

    bool available(std::uint32_t member) const {
        for (auto p : member_points[member])
            if (covered[p]) return false;
        return true;
    }

    bool search() {
        if (chosen.size() == target) return true;
        if (budget && ++nodes > budget) throw UnsupportedError("orthogonal spread search exceeded its budget");
        // First uncovered point; every member through it is a branch.
        const auto it = std::find(covered.begin(), covered.end(), 0);
        if (it == covered.end()) return false;
        const auto point = static_cast<std::size_t>(it - covered.begin());
        for (auto member : point_members[point]) {
            if (!available(member)) continue;
            for (auto p : member_points[member]) covered[p] = 1;
            chosen.push_back(member);
            if (search()) return true;
            chosen.pop_back();
            for (auto p : member_points[member]) covered[p] = 0;
        }
        return false;
    }
};

}  // namespace

OrthogonalSpread orthogonal_spread(int i, std::uint64_t node_budget) {
    if (i < 2 || i % 2 != 0) {
        throw DomainError("an orthogonal spread exists if and only if i is even (got i=" + std::to_string(i) + ")");
    }
    if (i > 4) {
        throw UnsupportedError("orthogonal spread search enumerates all maximal totally singular spaces; "
                               "only i <= 4 is supported");
    }
    const OrthogonalSpace space(i);
    const auto points = space.singular_points();
    std::vector<std::int32_t> point_index(std::size_t{1} << space.length(), -1);
    for (std::size_t p = 0; p < points.size(); ++p) point_index[points[p]] = static_cast<std::int32_t>(p);

    const auto maximal = enumerate_totally_singular(space, i);
    ExactCover cover;
    cover.point_members.resize(points.size());
    for (std::size_t mbr = 0; mbr < maximal.size(); ++mbr) {
        std::vector<std::uint32_t> pts;
        for (Word v : maximal[mbr].elements()) {
            if (v == 0) continue;
            const auto idx = static_cast<std::uint32_t>(point_index[v]);
            pts.push_back(idx);
            cover.point_members[idx].push_back(static_cast<std::uint32_t>(mbr));
        }
        cover.member_points.push_back(std::move(pts));
    }
    cover.covered.assign(points.size(), 0);
    cover.target = (std::size_t{1} << (i - 1)) + 1;
    cover.budget = node_budget;
    if (!cover.search()) throw DomainError("no orthogonal spread found (search exhausted)");

    OrthogonalSpread spread;
    spread.i = i;
    for (auto mbr : cover.chosen) spread.members.push_back(maximal[mbr]);
    std::sort(spread.members.begin(), spread.members.end());
    return spread;
}

Word irreducible_polynomial(int degree) {
    static constexpr std::array<Word, 9> table{0,       0b10,      0b111,      0b1011,     0b10011,
                                               0b100101, 0b1000011, 0b10000011, 0b100011011};
    if (degree < 1 || degree >= static_cast<int>(table.size())) {
        throw UnsupportedError("no tabulated irreducible polynomial of degree " + std::to_string(degree));
    }
    return table[static_cast<std::size_t>(degree)];
}

Word gf_multiply(Word x, Word y, Word poly, int degree) {
    Word acc = 0;
    while (y) {
        if (y & 1u) acc ^= x;
        y >>= 1;
        x <<= 1;
        if (x & (Word{1} << degree)) x ^= poly;
    }
    return acc;
}

FieldSpread field_spread(int i, int j) {
    if (i < 1 || j < 1 || i % j != 0) {
        throw DomainError("a field spread needs j | i (got i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
    }
    const Word poly = irreducible_polynomial(i);
    const Word size = Word{1} << i;
    // Subfield of order 2^j: fixed points of x -> x^(2^j).
    std::vector<Word> subfield;
    for (Word x = 0; x < size; ++x) {
        Word y = x;
        for (int e = 0; e < j; ++e) y = gf_multiply(y, y, poly, i);
        if (y == x) subfield.push_back(x);
    }
    if (subfield.size() != (std::size_t{1} << j)) throw DomainError("subfield has unexpected order");

    std::set<F2Subspace> classes;
    std::vector<bool> seen(size, false);
    for (Word x = 1; x < size; ++x) {
        if (seen[x]) continue;
        std::vector<Word> multiples;
        for (Word lambda : subfield) {
            const Word y = gf_multiply(lambda, x, poly, i);
            seen[y] = true;
            multiples.push_back(y);
        }
        classes.insert(F2Subspace::canonicalize(i, multiples));
    }
    FieldSpread spread;
    spread.i = i;
    spread.j = j;
    spread.members.assign(classes.begin(), classes.end());
    return spread;
}

std::vector<F2Subspace> example_b(int i, int j) {
    if (i < 2 || i % 2 != 0) throw DomainError("example_b needs even i");
    if (j < 1 || i % j != 0) throw DomainError("example_b needs j | i");
    const auto ortho = orthogonal_spread(i);
    const auto field = field_spread(i, j);
    const int length = 2 * i;
    std::vector<F2Subspace> out;
    for (const auto& member : ortho.members) {
        const auto& rows = member.basis();
        const auto transport = [&](Word x) {
            Word v = 0;
            for (int p = 0; p < i; ++p) {
                if (x & (Word{1} << (i - 1 - p))) v ^= rows[static_cast<std::size_t>(p)];
            }
            return v;
        };
        for (const auto& part : field.members) {
            std::vector<Word> image;
            for (Word x : part.basis()) image.push_back(transport(x));
            out.push_back(F2Subspace::canonicalize(length, image));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_partition(const std::vector<F2Subspace>& parts, const std::vector<Word>& points) {
    std::set<Word> target(points.begin(), points.end());
    std::set<Word> seen;
    for (const auto& part : parts) {
        for (Word v : part.elements()) {
            if (v == 0) continue;
            if (!target.count(v) || !seen.insert(v).second) return false;
        }
    }
    return seen.size() == target.size();
}

}  // namespace grasspack

#pragma once

// Brute-force ground truth: exhaustive enumeration of rhombus tilings of a
// hexagon on the triangular lattice, counts of tilings containing fixed
// rhombi on the symmetry axis, and exhaustive enumeration of the weighted
// nonintersecting path families for the two half regions.
//
// Lattice model.  Vertices are integer pairs (i,j) standing for the point
// i*u + j*v with u, v unit vectors 60 degrees apart.  The two cell
// orientations are
//
//     up(i,j)   = triangle (i,j), (i+1,j), (i,j+1)
//     down(i,j) = triangle (i+1,j), (i,j+1), (i+1,j+1)
//
// and the hexagon with sides a,b,c,a,b,c is cut out by
//     -c <= i <= a,   0 <= j <= b+c,   0 <= i+j <= a+b.
// A tiling is a perfect pairing of adjacent up/down cells; up(i,j) is
// adjacent to down(i,j), down(i-1,j) and down(i,j-1).
//
// Symmetry axis.  For a == c the hexagon is symmetric under the reflection
// (i,j) -> (i, a+b-i-j), whose fixed line is i + 2j = a + b.  The rhombi
// bisected lengthwise by the axis are the pairs
//
//     { up(i,j), down(i-1,j) }   with   i + 2j = a + b - 1,
//
// ordered left to right by increasing i.  For side b even there are a of
// them, for b odd a-1; both match the N of the corresponding instance.
// Sketch (axis ---, position l counted from the left):
//
//        \  upper half  /
//     ---<1>---<2>---<3>---     axis rhombi <l>, long diagonal on the axis
//        /  lower half  \
//
// The enumeration is a deterministic depth-first search that always pairs
// the first uncovered up cell in row-major order (by j, then i), with a
// hard budget on visited search nodes; no memoization.

#include "lozenge/closed_forms.hpp"
#include "lozenge/exact.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lozenge {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// kDefaultEnumerationBudget unless the LOZENGE_BUDGET environment variable
// overrides it.
std::uint64_t enumeration_budget();

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("enumeration budget of " + std::to_string(budget) +
                             " visited states exceeded") {}
};

struct TriangleCell {
    long i = 0;
    long j = 0;
    bool up = true;

    bool operator==(const TriangleCell&) const = default;
    std::string to_string() const;  // "U(i,j)" / "D(i,j)"
};

using TilingPairs = std::vector<std::pair<TriangleCell, TriangleCell>>;
using TilingVisitor = std::function<void(const TilingPairs&)>;

struct AxisRhombus {
    long position = 0;  // 1-based, from the left
    TriangleCell up;
    TriangleCell down;
};

// A finite set of up/down cells with the adjacency above.
class TriangleRegion {
public:
    TriangleRegion(std::vector<TriangleCell> ups, std::vector<TriangleCell> downs);

    static TriangleRegion hexagon(const HexagonShape& shape);
    // Cells strictly above the symmetry axis of a symmetric hexagon (a == c).
    static TriangleRegion upper_half(const HexagonShape& shape);

    std::size_t up_count() const { return ups_.size(); }
    std::size_t down_count() const { return downs_.size(); }
    const std::vector<TriangleCell>& ups() const { return ups_; }
    const std::vector<TriangleCell>& downs() const { return downs_; }
    std::optional<std::size_t> up_index(long i, long j) const;
    std::optional<std::size_t> down_index(long i, long j) const;

    // Counts perfect pairings. forced_pairs (up index, down index) are fixed
    // in advance; the visitor, when given, sees every completed tiling
    // (including forced pairs) exactly once, in a deterministic order.
    Integer count_matchings(const std::vector<std::pair<std::size_t, std::size_t>>& forced_pairs,
                            std::uint64_t budget, const TilingVisitor* visitor = nullptr) const;

private:
    std::vector<TriangleCell> ups_;
    std::vector<TriangleCell> downs_;
    std::vector<std::array<int, 3>> up_adj_;  // down indices, -1 when absent
    std::vector<int> down_last_up_;           // largest up index adjacent to each down
};

// The axis rhombi of a symmetric hexagon, left to right.
std::vector<AxisRhombus> axis_rhombi(const HexagonShape& shape);

// Exact number of tilings of the hexagon (must equal the MacMahon product).
Integer enumerate_tilings(const HexagonShape& shape, std::uint64_t budget = enumeration_budget(),
                          const TilingVisitor* visitor = nullptr);

// Number of tilings containing the given axis rhombi.
Integer count_with_fixed_axis(const AxisProblem& p, std::uint64_t budget = enumeration_budget());
Integer count_with_fixed_axis(const AxisSet& s, std::uint64_t budget = enumeration_budget());

// Containment test by cell-pairing membership.
bool tiling_contains(const TilingPairs& tiling, const TriangleCell& up_cell,
                     const TriangleCell& down_cell);

// Number of nonintersecting path families for the simple half region:
// P_i from (i,i) to (2i, i-m), i = 1..N, unit steps right and down.
Integer simple_half_count(long N, long m, std::uint64_t budget = enumeration_budget());

// Weighted count for the half region with fixed positions L: P_i from
// (2i-N-1, i+m) to (i,i) for i not in L (weight 1/2 when the first step is
// horizontal), P_i from (2i-N, i+m) to (i,i) for i in L.
Rational weighted_half_count(long N, long m, const std::vector<long>& L,
                             std::uint64_t budget = enumeration_budget());

// Tiling count of the region strictly above the symmetry axis; used to
// cross-check the path model for the simple half region.
Integer upper_half_region_count(const HexagonShape& shape,
                                std::uint64_t budget = enumeration_budget());

struct FactorizationCheck {
    Integer brute_force;
    long power_of_two = 0;
    Integer simple_part;
    Rational weighted_part;
    Rational factorized;  // 2^power * simple_part * weighted_part
    bool ok = false;
};

// Checks brute force = 2^{A-r} R(simple half) R~(weighted half), where A is
// the hexagon side (N for even parity, N+1 for odd) and the half regions are
// the reduced ones of the matching factorization.
FactorizationCheck factorization_check(const AxisSet& s,
                                       std::uint64_t budget = enumeration_budget());

}  // namespace lozenge

#include "lozenge/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace lozenge {

std::uint64_t enumeration_budget() {
    if (const char* env = std::getenv("LOZENGE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultEnumerationBudget;
}

std::string TriangleCell::to_string() const {
    return std::string(up ? "U(" : "D(") + std::to_string(i) + "," + std::to_string(j) + ")";
}

namespace {

bool up_in_hexagon(const HexagonShape& h, long i, long j) {
    return i >= -h.c && i + 1 <= h.a && j >= 0 && j + 1 <= h.b + h.c && i + j >= 0 &&
           i + j + 1 <= h.a + h.b;
}

bool down_in_hexagon(const HexagonShape& h, long i, long j) {
    return i >= -h.c && i + 1 <= h.a && j >= 0 && j + 1 <= h.b + h.c && i + j + 1 >= 0 &&
           i + j + 2 <= h.a + h.b;
}

bool cell_order(const TriangleCell& x, const TriangleCell& y) {
    return std::tie(x.j, x.i, x.up) < std::tie(y.j, y.i, y.up);
}

}  // namespace

TriangleRegion::TriangleRegion(std::vector<TriangleCell> ups, std::vector<TriangleCell> downs)
    : ups_(std::move(ups)), downs_(std::move(downs)) {
    std::sort(ups_.begin(), ups_.end(), cell_order);
    std::sort(downs_.begin(), downs_.end(), cell_order);

    std::map<std::pair<long, long>, int> down_at;
    for (std::size_t d = 0; d < downs_.size(); ++d)
        down_at[{downs_[d].i, downs_[d].j}] = static_cast<int>(d);

    up_adj_.assign(ups_.size(), {-1, -1, -1});
    down_last_up_.assign(downs_.size(), -1);
    for (std::size_t u = 0; u < ups_.size(); ++u) {
        const long i = ups_[u].i, j = ups_[u].j;
        const std::pair<long, long> neighbors[3] = {{i, j}, {i - 1, j}, {i, j - 1}};
        for (int t = 0; t < 3; ++t) {
            auto it = down_at.find(neighbors[t]);
            if (it == down_at.end()) continue;
            up_adj_[u][t] = it->second;
            down_last_up_[it->second] =
                std::max(down_last_up_[it->second], static_cast<int>(u));
        }
    }
}

TriangleRegion TriangleRegion::hexagon(const HexagonShape& h) {
    if (h.a < 0 || h.b < 0 || h.c < 0)
        throw std::invalid_argument("hexagon sides must be nonnegative");
    std::vector<TriangleCell> ups, downs;
    for (long i = -h.c; i <= h.a; ++i)
        for (long j = 0; j <= h.b + h.c; ++j) {
            if (up_in_hexagon(h, i, j)) ups.push_back({i, j, true});
            if (down_in_hexagon(h, i, j)) downs.push_back({i, j, false});
        }
    return TriangleRegion(std::move(ups), std::move(downs));
}

TriangleRegion TriangleRegion::upper_half(const HexagonShape& h) {
    if (h.a != h.c) throw std::invalid_argument("upper_half requires a symmetric hexagon");
    const long axis = h.a + h.b;  // fixed line i + 2j = a + b
    std::vector<TriangleCell> ups, downs;
    for (long i = -h.c; i <= h.a; ++i)
        for (long j = 0; j <= h.b + h.c; ++j) {
            if (up_in_hexagon(h, i, j) && i + 2 * j >= axis) ups.push_back({i, j, true});
            if (down_in_hexagon(h, i, j) && i + 2 * j >= axis - 1) downs.push_back({i, j, false});
        }
    return TriangleRegion(std::move(ups), std::move(downs));
}

std::optional<std::size_t> TriangleRegion::up_index(long i, long j) const {
    TriangleCell probe{i, j, true};
    auto it = std::lower_bound(ups_.begin(), ups_.end(), probe, cell_order);
    if (it != ups_.end() && it->i == i && it->j == j) return it - ups_.begin();
    return std::nullopt;
}

std::optional<std::size_t> TriangleRegion::down_index(long i, long j) const {
    TriangleCell probe{i, j, false};
    auto it = std::lower_bound(downs_.begin(), downs_.end(), probe, cell_order);
    if (it != downs_.end() && it->i == i && it->j == j) return it - downs_.begin();
    return std::nullopt;
}

namespace {

struct MatchSearch {
    const TriangleRegion& region;
    const std::vector<std::array<int, 3>>& adj;
    const std::vector<int>& last_up;
    std::vector<uint8_t> up_covered;
    std::vector<uint8_t> down_covered;
    std::vector<int> choice;  // chosen down per up (visitor mode only)
    std::uint64_t visited = 0;
    std::uint64_t budget;
    unsigned long long count = 0;
    const TilingVisitor* visitor;
    TilingPairs forced;

    void emit() {
        TilingPairs tiling = forced;
        for (std::size_t u = 0; u < region.up_count(); ++u)
            if (choice[u] >= 0)
                tiling.emplace_back(region.ups()[u], region.downs()[choice[u]]);
        std::sort(tiling.begin(), tiling.end(), [](const auto& x, const auto& y) {
            return std::tie(x.first.j, x.first.i) < std::tie(y.first.j, y.first.i);
        });
        (*visitor)(tiling);
    }

    void run(std::size_t pivot) {
        while (pivot < region.up_count() && up_covered[pivot]) ++pivot;
        if (pivot == region.up_count()) {
            ++count;
            if (visitor) emit();
            return;
        }
        if (++visited > budget) throw BudgetExceeded(budget);
        for (int t = 0; t < 3; ++t) {
            const int d = adj[pivot][t];
            if (d < 0 || down_covered[d]) continue;
            // Any other uncovered neighbor whose last chance was this pivot
            // can never be covered once we commit elsewhere.
            bool orphan = false;
            for (int s = 0; s < 3; ++s) {
                const int o = adj[pivot][s];
                if (o >= 0 && o != d && !down_covered[o] &&
                    last_up[o] == static_cast<int>(pivot)) {
                    orphan = true;
                    break;
                }
            }
            if (orphan) continue;
            down_covered[d] = 1;
            if (visitor) choice[pivot] = d;
            run(pivot + 1);
            down_covered[d] = 0;
            if (visitor) choice[pivot] = -1;
        }
    }
};

}  // namespace

Integer TriangleRegion::count_matchings(
    const std::vector<std::pair<std::size_t, std::size_t>>& forced_pairs, std::uint64_t budget,
    const TilingVisitor* visitor) const {
    if (ups_.size() != downs_.size()) return 0;

    MatchSearch search{*this, up_adj_, down_last_up_, std::vector<uint8_t>(ups_.size(), 0),
                       std::vector<uint8_t>(downs_.size(), 0),
                       std::vector<int>(visitor ? ups_.size() : 0, -1),
                       0,
                       budget,
                       0,
                       visitor,
                       {}};
    for (const auto& [u, d] : forced_pairs) {
        if (u >= ups_.size() || d >= downs_.size())
            throw std::invalid_argument("forced pair index out of range");
        if (search.up_covered[u] || search.down_covered[d])
            throw std::invalid_argument("forced pairs overlap");
        search.up_covered[u] = 1;
        search.down_covered[d] = 1;
        search.forced.emplace_back(ups_[u], downs_[d]);
    }
    search.run(0);
    return Integer(search.count);
}

std::vector<AxisRhombus> axis_rhombi(const HexagonShape& h) {
    if (h.a != h.c) throw std::invalid_argument("axis rhombi require a symmetric hexagon");
    std::vector<AxisRhombus> rhombi;
    const long axis = h.a + h.b;
    for (long i = -h.c; i <= h.a; ++i) {
        if ((axis - 1 - i) % 2 != 0) continue;
        const long j = (axis - 1 - i) / 2;
        if (up_in_hexagon(h, i, j) && down_in_hexagon(h, i - 1, j))
            rhombi.push_back({static_cast<long>(rhombi.size()) + 1,
                              TriangleCell{i, j, true}, TriangleCell{i - 1, j, false}});
    }
    return rhombi;
}

Integer enumerate_tilings(const HexagonShape& shape, std::uint64_t budget,
                          const TilingVisitor* visitor) {
    return TriangleRegion::hexagon(shape).count_matchings({}, budget, visitor);
}

namespace {

Integer count_with_positions(const HexagonShape& shape, const std::vector<long>& positions,
                             std::uint64_t budget) {
    TriangleRegion region = TriangleRegion::hexagon(shape);
    std::vector<AxisRhombus> rhombi = axis_rhombi(shape);
    std::vector<std::pair<std::size_t, std::size_t>> forced;
    for (long l : positions) {
        if (l < 1 || l > static_cast<long>(rhombi.size()))
            throw std::invalid_argument("axis position out of range");
        const AxisRhombus& r = rhombi[l - 1];
        auto u = region.up_index(r.up.i, r.up.j);
        auto d = region.down_index(r.down.i, r.down.j);
        if (!u || !d) throw std::logic_error("axis rhombus not inside the hexagon");
        forced.emplace_back(*u, *d);
    }
    return region.count_matchings(forced, budget);
}

}  // namespace

Integer count_with_fixed_axis(const AxisProblem& p, std::uint64_t budget) {
    validate(p);
    return count_with_positions(hexagon_of(p), {p.l}, budget);
}

Integer count_with_fixed_axis(const AxisSet& s, std::uint64_t budget) {
    validate(s);
    return count_with_positions(hexagon_of(s), s.L, budget);
}

bool tiling_contains(const TilingPairs& tiling, const TriangleCell& up_cell,
                     const TriangleCell& down_cell) {
    for (const auto& [u, d] : tiling)
        if (u == up_cell && d == down_cell) return true;
    return false;
}

namespace {

// Exhaustive search over tuples of vertex-disjoint monotone lattice paths
// (right steps x+1, down steps y-1) with fixed endpoints.
struct PathFamilySearch {
    struct PathSpec {
        long sx, sy, tx, ty;
        bool half_weight_on_horizontal_start = false;
    };
    std::vector<PathSpec> paths;
    long x0 = 0, y0 = 0, width = 0, height = 0;
    std::vector<uint8_t> used;
    std::uint64_t visited = 0;
    std::uint64_t budget = 0;
    Rational total = 0;

    std::size_t vertex(long x, long y) const {
        return static_cast<std::size_t>(x - x0) + static_cast<std::size_t>(width) *
                                                      static_cast<std::size_t>(y - y0);
    }

    void setup_bounds() {
        long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
        bool first = true;
        for (const auto& p : paths) {
            if (first) {
                xmin = std::min(p.sx, p.tx);
                xmax = std::max(p.sx, p.tx);
                ymin = std::min(p.sy, p.ty);
                ymax = std::max(p.sy, p.ty);
                first = false;
            } else {
                xmin = std::min({xmin, p.sx, p.tx});
                xmax = std::max({xmax, p.sx, p.tx});
                ymin = std::min({ymin, p.sy, p.ty});
                ymax = std::max({ymax, p.sy, p.ty});
            }
        }
        x0 = xmin;
        y0 = ymin;
        width = xmax - xmin + 1;
        height = ymax - ymin + 1;
        used.assign(static_cast<std::size_t>(width) * height, 0);
    }

    void walk(std::size_t index, long x, long y, long halves, bool at_start) {
        const PathSpec& p = paths[index];
        if (++visited > budget) throw BudgetExceeded(budget);
        if (x == p.tx && y == p.ty) {
            family(index + 1, halves);
            return;
        }
        if (x < p.tx) {
            const std::size_t v = vertex(x + 1, y);
            if (!used[v]) {
                used[v] = 1;
                walk(index, x + 1, y, halves + (at_start && p.half_weight_on_horizontal_start),
                     false);
                used[v] = 0;
            }
        }
        if (y > p.ty) {
            const std::size_t v = vertex(x, y - 1);
            if (!used[v]) {
                used[v] = 1;
                walk(index, x, y - 1, halves, false);
                used[v] = 0;
            }
        }
    }

    void family(std::size_t index, long halves) {
        if (index == paths.size()) {
            total += pow_rational(Rational(1, 2), halves);
            return;
        }
        const PathSpec& p = paths[index];
        if (p.tx < p.sx || p.ty > p.sy) return;  // unreachable endpoint
        const std::size_t v = vertex(p.sx, p.sy);
        if (used[v]) return;
        used[v] = 1;
        walk(index, p.sx, p.sy, halves, true);
        used[v] = 0;
    }

    Rational run() {
        setup_bounds();
        family(0, 0);
        return total;
    }
};

}  // namespace

Integer simple_half_count(long N, long m, std::uint64_t budget) {
    if (N < 0 || m < 0) throw std::invalid_argument("simple_half_count: N, m must be >= 0");
    if (N == 0) return 1;
    PathFamilySearch search;
    search.budget = budget;
    for (long i = 1; i <= N; ++i)
        search.paths.push_back({i, i, 2 * i, i - m, false});
    return to_integer_exact(search.run(), "simple path family count");
}

Rational weighted_half_count(long N, long m, const std::vector<long>& L, std::uint64_t budget) {
    if (N < 1 || m < 0) throw std::invalid_argument("weighted_half_count: bad N or m");
    std::vector<bool> fixed(N + 1, false);
    for (long l : L) {
        if (l < 1 || l > N) throw std::invalid_argument("weighted_half_count: L out of range");
        fixed[l] = true;
    }
    PathFamilySearch search;
    search.budget = budget;
    for (long i = 1; i <= N; ++i) {
        if (fixed[i])
            search.paths.push_back({2 * i - N, i + m, i, i, false});
        else
            search.paths.push_back({2 * i - N - 1, i + m, i, i, true});
    }
    return search.run();
}

Integer upper_half_region_count(const HexagonShape& shape, std::uint64_t budget) {
    return TriangleRegion::upper_half(shape).count_matchings({}, budget);
}

FactorizationCheck factorization_check(const AxisSet& s, std::uint64_t budget) {
    validate(s);
    FactorizationCheck check;
    check.brute_force = count_with_fixed_axis(s, budget);
    if (s.parity == Parity::even) {
        check.power_of_two = s.N - s.r();
        check.simple_part = simple_half_count(s.N - 1, s.m, budget);
        check.weighted_part = weighted_half_count(s.N, s.m, s.L, budget);
    } else {
        // Stated for the hexagon side length; here the side is N+1, so the
        // reduced regions are S(N+1, m-1) and C(N, m, L).
        check.power_of_two = s.N + 1 - s.r();
        check.simple_part = simple_half_count(s.N + 1, s.m - 1, budget);
        check.weighted_part = weighted_half_count(s.N, s.m, s.L, budget);
    }
    check.factorized = pow_rational(Rational(2), check.power_of_two) *
                       Rational(check.simple_part) * check.weighted_part;
    check.ok = Rational(check.brute_force) == check.factorized;
    return check;
}

}  // namespace lozenge

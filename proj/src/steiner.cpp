#include <algorithm>
#include <climits>
#include <deque>

#include "tristance/dispersion.hpp"
#include "tristance/error.hpp"

namespace tristance {

namespace {

constexpr int kInf = INT_MAX / 4;

struct Window {
    Point lo, hi;
    int w = 1, h = 1, depth = 1;
    std::size_t size() const { return static_cast<std::size_t>(w) * h * depth; }
    int index(const Point& p) const { return ((p.z - lo.z) * h + (p.y - lo.y)) * w + (p.x - lo.x); }
    bool inside(const Point& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z &&
               p.z <= hi.z;
    }
    Point at(int i) const {
        return {lo.x + i % w, lo.y + (i / w) % h, lo.z + i / (w * h)};
    }
};

// In-place multi-source shortest paths with unit edges. Seeds are taken in
// value order (counting sort), relaxations go through a FIFO; popping the
// smaller front of the two queues keeps the order monotone.
void relax(std::vector<int>& dist, const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(dist.size());
    int top = 0;
    for (int v : dist)
        if (v < kInf) top = std::max(top, v);
    std::vector<int> count(top + 2, 0);
    for (int v : dist)
        if (v < kInf) ++count[v + 1];
    for (int i = 1; i < top + 2; ++i) count[i] += count[i - 1];
    std::vector<int> seeds(count.back());
    for (int i = 0; i < n; ++i)
        if (dist[i] < kInf) seeds[count[dist[i]]++] = i;

    std::deque<int> fifo;
    std::size_t si = 0;
    while (si < seeds.size() || !fifo.empty()) {
        int v;
        if (fifo.empty() || (si < seeds.size() && dist[seeds[si]] <= dist[fifo.front()])) {
            v = seeds[si++];
        } else {
            v = fifo.front();
            fifo.pop_front();
        }
        const int next = dist[v] + 1;
        for (int u : adj[v])
            if (next < dist[u]) {
                dist[u] = next;
                fifo.push_back(u);
            }
    }
}

}  // namespace

int steiner_oracle(Model m, std::span<const Point> pts, OracleOptions opt) {
    if (opt.margin < 0) throw DomainError("constraint", "oracle margin must be nonnegative");
    std::vector<Point> terms(pts.begin(), pts.end());
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    if (terms.size() > 5)
        throw DomainError("unsupported", "oracle supports at most 5 distinct points");
    if (terms.size() <= 1) return 0;

    Window win;
    win.lo = win.hi = terms[0];
    for (const Point& p : terms)
        for (int k = 0; k < 3; ++k) {
            win.lo[k] = std::min(win.lo[k], p[k]);
            win.hi[k] = std::max(win.hi[k], p[k]);
        }
    const int dim = model_dim(m);
    for (int k = 0; k < dim; ++k) {
        win.lo[k] -= opt.margin;
        win.hi[k] += opt.margin;
    }
    win.w = win.hi.x - win.lo.x + 1;
    win.h = win.hi.y - win.lo.y + 1;
    win.depth = win.hi.z - win.lo.z + 1;
    if (win.size() > opt.node_budget)
        throw BudgetError("oracle window has " + std::to_string(win.size()) +
                          " nodes, budget is " + std::to_string(opt.node_budget));

    const int n = static_cast<int>(win.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        const Point p = win.at(i);
        for (const Point& s : unit_steps(m))
            if (win.inside(p + s)) adj[i].push_back(win.index(p + s));
    }

    const int k = static_cast<int>(terms.size());
    const int full = (1 << k) - 1;
    std::vector<std::vector<int>> dp(full + 1);
    for (int i = 0; i < k; ++i) {
        auto& d = dp[1 << i];
        d.assign(n, kInf);
        d[win.index(terms[i])] = 0;
        relax(d, adj);
    }
    for (int mask = 1; mask <= full; ++mask) {
        if ((mask & (mask - 1)) == 0) continue;
        auto& d = dp[mask];
        d.assign(n, kInf);
        const int low = mask & -mask;
        // each split counted once: the part holding the lowest terminal
        for (int sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            const auto& a = dp[sub];
            const auto& b = dp[mask ^ sub];
            for (int v = 0; v < n; ++v) d[v] = std::min(d[v], a[v] + b[v]);
        }
        relax(d, adj);
    }
    return dp[full][win.index(terms[0])];
}

}  // namespace tristance

#include "tristance/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "tristance/error.hpp"

namespace tristance {

const std::vector<Symmetry>& symmetry_group(Model m) {
    static const std::vector<Symmetry> square = [] {
        std::vector<Symmetry> g;
        for (int swap = 0; swap < 2; ++swap)
            for (int sx = -1; sx <= 1; sx += 2)
                for (int sy = -1; sy <= 1; sy += 2)
                    g.push_back([=](const Point& p) {
                        const Point q = swap ? Point{p.y, p.x, 0} : p;
                        return Point{sx * q.x, sy * q.y, 0};
                    });
        return g;
    }();
    static const std::vector<Symmetry> cube = [] {
        std::vector<Symmetry> g;
        int perm[3] = {0, 1, 2};
        do {
            for (int signs = 0; signs < 8; ++signs)
                g.push_back([=, p0 = perm[0], p1 = perm[1], p2 = perm[2]](const Point& p) {
                    const int s[3] = {signs & 1 ? -1 : 1, signs & 2 ? -1 : 1, signs & 4 ? -1 : 1};
                    return Point{s[0] * p[p0], s[1] * p[p1], s[2] * p[p2]};
                });
        } while (std::next_permutation(perm, perm + 3));
        return g;
    }();
    static const std::vector<Symmetry> hex = [] {
        // rotation by pi/3 is (x, y) -> (x - y, x); swapping x and y is a reflection
        std::vector<Symmetry> g;
        for (int flip = 0; flip < 2; ++flip)
            for (int k = 0; k < 6; ++k)
                g.push_back([=](const Point& p) {
                    Point q = flip ? Point{p.y, p.x, 0} : p;
                    for (int i = 0; i < k; ++i) q = Point{q.x - q.y, q.x, 0};
                    return q;
                });
        return g;
    }();
    switch (m) {
        case Model::grid3: return cube;
        case Model::hex2: return hex;
        default: return square;
    }
}

Region canonicalize(const Region& region) {
    if (region.empty()) return region;
    std::vector<Point> best;
    for (const Symmetry& g : symmetry_group(region.model())) {
        std::vector<Point> img;
        img.reserve(region.size());
        for (const Point& p : region.points()) img.push_back(g(p));
        Point lo = img[0];
        for (const Point& p : img)
            for (int k = 0; k < 3; ++k) lo[k] = std::min(lo[k], p[k]);
        for (Point& p : img) p = p - lo;
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = std::move(img);
    }
    return Region(region.model(), std::move(best));
}

namespace {

using Clock = std::chrono::steady_clock;

struct Problem {
    Model model;
    int r = 3, d = 0, n = 0, dim = 2;
    std::vector<Point> pts;
    std::vector<unsigned char> on_floor_y, on_floor_z;
    std::vector<int> dist;
    std::vector<unsigned char> tri;  // empty if too large to tabulate

    int pair(int i, int j) const { return dist[i * n + j]; }
    int triple(int i, int j, int k) const {
        if (!tri.empty()) return tri[(static_cast<std::size_t>(i) * n + j) * n + k];
        return tristance(model, pts[i], pts[j], pts[k]);
    }
    int quad(int i, int j, int k, int l) const { return quadristance(pts[i], pts[j], pts[k], pts[l]); }

    // q joins S + {p}; q is already known to be compatible with S
    bool compatible(const std::vector<int>& s, int p, int q) const {
        if (pair(p, q) > d) return false;
        if (r == 2) return true;
        if (r == 3) {
            for (int v : s)
                if (triple(v, p, q) > d) return false;
            return true;
        }
        if (s.size() == 1) return triple(s[0], p, q) <= d;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (quad(s[a], s[b], p, q) > d) return false;
        return true;
    }
};

struct Shared {
    std::atomic<int> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::uint64_t node_budget = 0;
    double wall = 0;
    Clock::time_point start;
    bool witnesses = false;
    std::mutex mu;
    std::set<std::vector<Point>> found;
    int found_size = 0;
};

class Worker {
public:
    Worker(const Problem& pr, Shared& sh) : pr_(pr), sh_(sh) {}

    void root(int p) {
        std::vector<int> cand;
        for (int q = p + 1; q < pr_.n; ++q)
            if (pr_.pair(p, q) <= pr_.d) cand.push_back(q);
        s_.assign(1, p);
        explore(cand);
        s_.clear();
    }

private:
    void record() {
        const int size = static_cast<int>(s_.size());
        int cur = sh_.best.load();
        while (size > cur && !sh_.best.compare_exchange_weak(cur, size)) {
        }
        if (!sh_.witnesses || size < sh_.best.load()) return;
        std::vector<Point> pts;
        for (int i : s_) pts.push_back(pr_.pts[i]);
        Region canon = canonicalize(Region(pr_.model, std::move(pts)));
        std::lock_guard<std::mutex> lock(sh_.mu);
        if (size > sh_.found_size) sh_.found.clear(), sh_.found_size = size;
        if (size == sh_.found_size) sh_.found.insert(canon.points());
    }

    bool out_of_budget() {
        const std::uint64_t n = ++sh_.nodes;
        if (sh_.node_budget && n > sh_.node_budget) sh_.stop = true;
        if (sh_.wall > 0 && (n & 1023) == 0 &&
            std::chrono::duration<double>(Clock::now() - sh_.start).count() > sh_.wall)
            sh_.stop = true;
        return sh_.stop.load(std::memory_order_relaxed);
    }

    void explore(const std::vector<int>& cand) {
        if (out_of_budget()) return;
        record();
        const int size = static_cast<int>(s_.size());
        const int nc = static_cast<int>(cand.size());

        // sets whose minimum y (or z) is positive are translates of sets found elsewhere
        bool have_y = false, have_z = pr_.dim < 3;
        for (int v : s_) {
            have_y |= pr_.on_floor_y[v] != 0;
            have_z |= pr_.on_floor_z[v] != 0;
        }
        std::vector<int> last_y(nc + 1, -1), last_z(nc + 1, -1);  // any floor point at index >= i?
        for (int i = nc - 1; i >= 0; --i) {
            last_y[i] = pr_.on_floor_y[cand[i]] ? i : last_y[i + 1];
            last_z[i] = pr_.on_floor_z[cand[i]] ? i : last_z[i + 1];
        }

        std::vector<int> next;
        for (int i = 0; i < nc; ++i) {
            const int best = sh_.best.load(std::memory_order_relaxed);
            const int reach = size + (nc - i);
            if (sh_.witnesses ? reach < best : reach <= best) break;
            if (!have_y && last_y[i] < 0) break;
            if (!have_z && last_z[i] < 0) break;
            const int p = cand[i];
            next.clear();
            for (int j = i + 1; j < nc; ++j)
                if (pr_.compatible(s_, p, cand[j])) next.push_back(cand[j]);
            s_.push_back(p);
            explore(next);
            s_.pop_back();
            if (sh_.stop.load(std::memory_order_relaxed)) return;
        }
    }

    const Problem& pr_;
    Shared& sh_;
    std::vector<int> s_;
};

Problem build(Model m, Kind k, int d) {
    Problem pr;
    pr.model = m;
    pr.r = kind_arity(k);
    pr.d = d;
    pr.dim = model_dim(m);
    const int zmax = pr.dim == 3 ? d : 0;
    for (int x = 0; x <= d; ++x)
        for (int y = 0; y <= d; ++y)
            for (int z = 0; z <= zmax; ++z) pr.pts.push_back({x, y, z});
    pr.n = static_cast<int>(pr.pts.size());
    for (const Point& p : pr.pts) {
        pr.on_floor_y.push_back(p.y == 0);
        pr.on_floor_z.push_back(p.z == 0);
    }
    pr.dist.resize(static_cast<std::size_t>(pr.n) * pr.n);
    for (int i = 0; i < pr.n; ++i)
        for (int j = 0; j < pr.n; ++j) pr.dist[i * pr.n + j] = distance(m, pr.pts[i], pr.pts[j]);
    const std::size_t cube = static_cast<std::size_t>(pr.n) * pr.n * pr.n;
    if (pr.r >= 3 && cube <= (std::size_t(1) << 24)) {
        pr.tri.resize(cube);
        for (int i = 0; i < pr.n; ++i)
            for (int j = 0; j < pr.n; ++j)
                for (int l = 0; l < pr.n; ++l)
                    pr.tri[(static_cast<std::size_t>(i) * pr.n + j) * pr.n + l] = static_cast<unsigned char>(
                        std::min(255, tristance(m, pr.pts[i], pr.pts[j], pr.pts[l])));
    }
    return pr;
}

}  // namespace

SearchReport max_anticode(Model m, Kind k, int d, const SearchOptions& opt) {
    if (d < 1) throw DomainError("constraint", "search needs diameter >= 1");
    if (k == Kind::quadristance && m != Model::grid2)
        throw DomainError("unsupported", "quadristance search is only defined for grid2");
    if (d > 60) throw DomainError("constraint", "search window too large");

    const Problem pr = build(m, k, d);
    Shared sh;
    sh.node_budget = opt.node_budget;
    sh.wall = opt.wall_seconds;
    sh.witnesses = opt.witnesses;
    sh.start = Clock::now();

    // the lexicographically first point of an anchored set has x = 0
    std::vector<int> roots;
    for (int p = 0; p < pr.n; ++p)
        if (pr.pts[p].x == 0) roots.push_back(p);

    std::atomic<std::size_t> next_root{0};
    auto run = [&] {
        Worker w(pr, sh);
        for (std::size_t i; (i = next_root++) < roots.size() && !sh.stop;) w.root(roots[i]);
    };
    const int threads = std::max(1, opt.threads);
    if (threads == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    SearchReport rep;
    rep.model = m;
    rep.kind = k;
    rep.diameter = d;
    rep.max_size = sh.best;
    rep.nodes_explored = sh.nodes;
    rep.wall_budget_hit = sh.stop;
    rep.seconds = std::chrono::duration<double>(Clock::now() - sh.start).count();
    if (opt.witnesses && sh.found_size == rep.max_size)
        for (const auto& pts : sh.found) rep.witnesses.emplace_back(m, pts);
    return rep;
}

}  // namespace tristance

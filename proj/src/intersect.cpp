#include "sep2/intersect.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sep2 {

int germ_position(char c) {
    for (int i = 0; i < 8; ++i)
        if (kGermOrder[(std::size_t)i] == c) return i;
    throw WordError("germ_position: bad letter");
}

namespace {

constexpr std::size_t kMaxWindow = 1 << 16;

// Backward rays of a CCW cycle are CW-sided; their CCW-normalized windows are
// cached per phase and grown on demand with a window-doubling stability check.
class BackwardRayCache {
public:
    BackwardRayCache() = default;
    explicit BackwardRayCache(const Word* cycle)
        : cycle_(cycle), norm_(cycle->size()), trusted_(cycle->size(), 0) {}

    char at(int phase, std::size_t k) {
        if (k >= trusted_[(std::size_t)phase]) extend(phase, k);
        return norm_[(std::size_t)phase][k];
    }

private:
    char raw_at(int phase, std::size_t k) const {
        std::int64_t n = (std::int64_t)cycle_->size();
        std::int64_t idx = ((phase - 1 - (std::int64_t)k) % n + n) % n;
        return inv_letter((*cycle_)[(std::size_t)idx]);
    }

    Word raw_window(int phase, std::size_t len) const {
        Word w;
        w.reserve(len);
        for (std::size_t k = 0; k < len; ++k) w.push_back(raw_at(phase, k));
        return w;
    }

    void extend(int phase, std::size_t k) {
        std::size_t want = 64;
        while (want <= 2 * k + 16) want *= 2;
        while (true) {
            Word n1 = ccw_normalize(raw_window(phase, want));
            Word n2 = ccw_normalize(raw_window(phase, want * 2));
            std::size_t lcp = 0;
            while (lcp < n1.size() && n1[lcp] == n2[lcp]) ++lcp;
            std::size_t trust = lcp > 8 ? lcp - 8 : 0;
            if (trust > k) {
                norm_[(std::size_t)phase] = std::move(n2);
                trusted_[(std::size_t)phase] = trust;
                return;
            }
            want *= 2;
            if (want > kMaxWindow) throw WordError("BackwardRayCache: window cap exceeded");
        }
    }

    const Word* cycle_ = nullptr;
    std::vector<Word> norm_;
    std::vector<std::size_t> trusted_;
};

struct RayContext {
    const Word* cu;
    const Word* cv;
    BackwardRayCache* bu;
    BackwardRayCache* bv;
    int i, j;

    // rays: 0 = u forward, 1 = u backward, 2 = v forward, 3 = v backward
    char letter(int ray, std::size_t depth) const {
        std::int64_t m = (std::int64_t)cu->size(), n = (std::int64_t)cv->size();
        switch (ray) {
            case 0: return (*cu)[(std::size_t)((i + (std::int64_t)depth) % m)];
            case 1: return bu->at(i, depth);
            case 2: return (*cv)[(std::size_t)((j + (std::int64_t)depth) % n)];
            default: return bv->at(j, depth);
        }
    }
};

// circular order of rays with pairwise distinct endpoints, as planar tree
// leaves: at each vertex children germs sorted CCW starting after the
// incoming germ; implementation shared with circular_ray_order below

// generic variant used by circular_ray_order: rays addressed through RaySpec
struct SpecContext {
    const std::vector<RaySpec>* specs;
    std::vector<BackwardRayCache>* caches;  // parallel to specs, backward rays only
    char letter(int ray, std::size_t depth) const {
        const RaySpec& r = (*specs)[(std::size_t)ray];
        if (r.constant) return r.constant;
        std::int64_t n = (std::int64_t)r.cycle->size();
        if (!r.backward) return (*r.cycle)[(std::size_t)((r.phase + (std::int64_t)depth) % n)];
        return (*caches)[(std::size_t)ray].at(r.phase, depth);
    }
};

template <class Ctx>
void order_rays_generic(std::vector<int> idxs, std::size_t depth, int cut, const Ctx& ctx,
                        std::vector<int>& out) {
    if (idxs.size() == 1) {
        out.push_back(idxs[0]);
        return;
    }
    if (depth > kMaxWindow) throw WordError("order_rays: rays failed to diverge");
    struct Group {
        int key;
        char letter;
        std::vector<int> members;
    };
    std::vector<Group> groups;
    for (int rid : idxs) {
        char c = ctx.letter(rid, depth);
        int pos = germ_position(c);
        int rel = cut < 0 ? pos : (pos - cut + 8) % 8;
        bool found = false;
        for (auto& g : groups)
            if (g.letter == c) {
                g.members.push_back(rid);
                found = true;
            }
        if (!found) groups.push_back({rel, c, {rid}});
    }
    std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.key < b.key; });
    for (auto& g : groups) {
        if (g.members.size() == 1) out.push_back(g.members[0]);
        else order_rays_generic(std::move(g.members), depth + 1, germ_position(inv_letter(g.letter)), ctx, out);
    }
}

struct LinkVerdict {
    bool linked = false;
    int orient = 0;
};

LinkVerdict verdict_from_order(const std::vector<int>& order) {
    int pos_uf = 0, pos_ub = 0;
    for (int k = 0; k < 4; ++k) {
        if (order[(std::size_t)k] == 0) pos_uf = k;
        if (order[(std::size_t)k] == 1) pos_ub = k;
    }
    LinkVerdict v;
    v.linked = ((pos_uf - pos_ub + 4) % 4) == 2;
    if (v.linked) {
        int after = order[(std::size_t)((pos_uf + 1) % 4)];
        v.orient = (after == 2) ? 1 : -1;
    }
    return v;
}

LinkVerdict link_state(const RayContext& ctx) {
    char g0 = ctx.letter(0, 0), g1 = ctx.letter(1, 0), g2 = ctx.letter(2, 0), g3 = ctx.letter(3, 0);
    if (g0 != g1 && g0 != g2 && g0 != g3 && g1 != g2 && g1 != g3 && g2 != g3) {
        // all four first germs distinct: sort by germ position directly
        int p[4] = {germ_position(g0), germ_position(g1), germ_position(g2), germ_position(g3)};
        std::vector<int> order{0, 1, 2, 3};
        std::sort(order.begin(), order.end(), [&](int a, int b) { return p[a] < p[b]; });
        return verdict_from_order(order);
    }
    std::vector<int> order;
    order_rays_generic({0, 1, 2, 3}, 0, -1, ctx, order);
    return verdict_from_order(order);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[(std::size_t)x] != x) {
            parent[(std::size_t)x] = parent[(std::size_t)parent[(std::size_t)x]];
            x = parent[(std::size_t)x];
        }
        return x;
    }
    void unite(int a, int b) { parent[(std::size_t)find(a)] = find(b); }
};

} // namespace

PairCrossings compute_crossings(const CyclicWord& u, const CyclicWord& v, bool self) {
    PairCrossings out;
    out.ccw_u = ccw_cycle(u);
    out.ccw_v = self ? out.ccw_u : ccw_cycle(v);
    const Word& cu = out.ccw_u.letters();
    const Word& cv = out.ccw_v.letters();
    int m = (int)cu.size(), n = (int)cv.size();

    auto id = [&](int i, int j) { return i * n + j; };
    UnionFind uf((std::size_t)(m * n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (cu[(std::size_t)i] == cv[(std::size_t)j])
                uf.unite(id(i, j), id((i + 1) % m, (j + 1) % n));
            if (cu[(std::size_t)i] == inv_letter(cv[(std::size_t)(((j - 1) % n + n) % n)]))
                uf.unite(id(i, j), id((i + 1) % m, ((j - 1) % n + n) % n));
            if (self) uf.unite(id(i, j), id(j, i));
        }

    std::vector<std::vector<std::pair<int, int>>> members((std::size_t)(m * n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (self && i == j) continue;
            members[(std::size_t)uf.find(id(i, j))].push_back({i, j});
        }

    BackwardRayCache bu(&cu), bv_own(&cv);
    BackwardRayCache* bv = self ? &bu : &bv_own;

    struct Cls {
        std::pair<int, int> rep;
        int orient;
        std::vector<std::pair<int, int>> states;
    };
    std::vector<Cls> linked;
    for (auto& mem : members) {
        if (mem.empty()) continue;
        RayContext ctx{&cu, &cv, &bu, bv, mem[0].first, mem[0].second};
        LinkVerdict verdict = link_state(ctx);
        if (!verdict.linked) continue;
        linked.push_back({mem[0], verdict.orient, std::move(mem)});
    }

    // Merge linked classes that are one lift pair met at separated vertex
    // clusters (antiparallel lens re-meets).  A mate of the pair at (i, j)
    // sits L letters forward along u and L backward along v with a trivial
    // connecting loop; parallel re-meets cannot occur between CCW-normal
    // paths, so this scan together with the contiguous merge is complete.
    std::vector<int> cls_root(linked.size());
    std::iota(cls_root.begin(), cls_root.end(), 0);
    auto find_root = [&](int x) {
        while (cls_root[(std::size_t)x] != x)
            x = cls_root[(std::size_t)x] = cls_root[(std::size_t)cls_root[(std::size_t)x]];
        return x;
    };
    std::vector<int> state_class((std::size_t)(m * n), -1);
    for (std::size_t a = 0; a < linked.size(); ++a)
        for (auto& st : linked[a].states) state_class[(std::size_t)id(st.first, st.second)] = (int)a;
    std::int64_t Lmax = 2 * (m + n) + 16;
    for (std::size_t a = 0; a < linked.size(); ++a) {
        int i = linked[a].rep.first, j = linked[a].rep.second;
        IncrementalReducedWord D;
        for (std::int64_t L = 1; L <= Lmax; ++L) {
            D.push_front_letter(inv_letter(cu[(std::size_t)((i + L - 1) % m)]));
            D.push_back_letter(inv_letter(cv[(std::size_t)(((j - L) % n + n) % n)]));
            if (!D.empty()) continue;
            int ti = (int)((i + L) % m), tj = (int)(((j - L) % n + n) % n);
            int tc = state_class[(std::size_t)id(ti, tj)];
            if (tc < 0)
                throw WordError("compute_crossings: lens mate of a linked state is unlinked");
            if (find_root((int)a) != find_root(tc)) cls_root[(std::size_t)find_root(tc)] = find_root((int)a);
        }
    }

    std::vector<std::vector<std::size_t>> buckets(linked.size());
    for (std::size_t a = 0; a < linked.size(); ++a) buckets[(std::size_t)find_root((int)a)].push_back(a);
    for (auto& bucket : buckets) {
        if (bucket.empty()) continue;
        Crossing c;
        c.i = linked[bucket[0]].rep.first;
        c.j = linked[bucket[0]].rep.second;
        c.orient = linked[bucket[0]].orient;
        for (std::size_t idx : bucket)
            for (auto& st : linked[idx].states) c.states.push_back(st);
        out.crossings.push_back(std::move(c));
    }
    return out;
}

std::vector<int> circular_ray_order(const std::vector<RaySpec>& rays) {
    std::vector<BackwardRayCache> caches(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k)
        if (!rays[k].constant && rays[k].backward) caches[k] = BackwardRayCache(rays[k].cycle);
    SpecContext ctx{&rays, &caches};
    std::vector<int> idxs(rays.size());
    std::iota(idxs.begin(), idxs.end(), 0);
    std::vector<int> out;
    order_rays_generic(std::move(idxs), 0, -1, ctx, out);
    return out;
}

int self_intersection(const CyclicWord& w) {
    if (!is_primitive(w)) throw NonPrimitive();
    return (int)compute_crossings(w, w, true).crossings.size();
}

int intersection_number_classes(const CyclicWord& u, const CyclicWord& v) {
    if (conjugate_or_inverse(u, v)) return 0;
    return (int)compute_crossings(u, v, false).crossings.size();
}

} // namespace sep2

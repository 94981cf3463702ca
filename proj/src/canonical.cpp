#include "motifscope/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace motifscope {

namespace {

struct SmallSearch {
    uint32_t n;
    const uint8_t* adj;
    const uint8_t* colors;  // null when uncolored
    uint32_t total_bits;
    uint64_t best;
    uint32_t order[8];
    bool used[8];

    void run() {
        best = ~0ull >> (64 - total_bits);
        dfs(0, 0, 0);
    }

    void dfs(uint32_t depth, uint64_t partial, uint32_t bits) {
        if (depth == n) {
            if (partial < best) best = partial;
            return;
        }
        uint32_t chunk_bits = depth + (colors ? 1 : 0);
        for (uint32_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint64_t chunk = 0;
            if (colors) chunk = colors[v];
            for (uint32_t j = 0; j < depth; ++j)
                chunk = (chunk << 1) | ((adj[v] >> order[j]) & 1u);
            uint64_t next = (partial << chunk_bits) | chunk;
            // All extensions of a worse prefix are worse.
            if (next > (best >> (total_bits - bits - chunk_bits))) continue;
            used[v] = true;
            order[depth] = v;
            dfs(depth + 1, next, bits + chunk_bits);
            used[v] = false;
        }
    }
};

}  // namespace

uint64_t canonical_code_small_masks(uint32_t n, const uint8_t* adj_masks, const uint8_t* colors) {
    if (n > kSmallCanonMax) throw std::invalid_argument("canonical_code_small: more than 8 vertices");
    if (n == 0) return 0;
    SmallSearch s;
    s.n = n;
    s.adj = adj_masks;
    s.colors = colors;
    s.total_bits = n * (n - 1) / 2 + (colors ? n : 0);
    std::fill(std::begin(s.used), std::end(s.used), false);
    s.run();
    // Prefix with n so codes of different orders never collide.
    return (static_cast<uint64_t>(n) << 40) | s.best;
}

uint64_t canonical_code_small(const Graph& g, const std::vector<uint8_t>* colors) {
    uint32_t n = g.num_vertices();
    if (n > kSmallCanonMax) throw std::invalid_argument("canonical_code_small: more than 8 vertices");
    uint8_t masks[8] = {0};
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t w : g.neighbors(v)) masks[v] |= uint8_t(1u << w);
    return canonical_code_small_masks(n, masks, colors ? colors->data() : nullptr);
}

namespace {

// Individualization-refinement canonicalizer for graphs up to ~24 vertices.
// Refinement is the usual 1-dimensional Weisfeiler-Leman pass; the search
// branches on the first smallest non-singleton cell. A partition whose cells
// are internally complete/empty and pairwise complete/empty fixes the code,
// which keeps highly symmetric graphs (cliques, bicliques) cheap.
class BigSearch {
public:
    BigSearch(const Graph& g, const std::vector<uint8_t>* colors) : g_(g) {
        n_ = g.num_vertices();
        if (n_ > 24) throw std::invalid_argument("canonical_code: more than 24 vertices");
        adj_.assign(n_, 0);
        for (uint32_t v = 0; v < n_; ++v)
            for (uint32_t w : g.neighbors(v)) adj_[v] |= 1u << w;
        cell_.assign(n_, 0);
        if (colors) {
            if (colors->size() != n_) throw std::invalid_argument("color vector size mismatch");
            for (uint32_t v = 0; v < n_; ++v) cell_[v] = (*colors)[v];
            colors_.assign(colors->begin(), colors->end());
        } else {
            colors_.assign(n_, 0);
        }
    }

    std::string run() {
        if (n_ == 0) return std::string(1, '\0');
        refine();
        best_.clear();
        search(cell_);
        std::string out;
        out.push_back(static_cast<char>(n_));
        out += best_;
        return out;
    }

private:
    using Cells = std::vector<uint32_t>;

    void refine_from(Cells& cell) const {
        for (;;) {
            // Key each vertex by (cell, sorted multiset of neighbor cells).
            std::vector<std::pair<std::vector<uint32_t>, uint32_t>> keys(n_);
            for (uint32_t v = 0; v < n_; ++v) {
                std::vector<uint32_t> k;
                k.push_back(cell[v]);
                for (uint32_t w : g_.neighbors(v)) k.push_back(cell[w]);
                std::sort(k.begin() + 1, k.end());
                keys[v] = {std::move(k), v};
            }
            auto sorted = keys;
            std::sort(sorted.begin(), sorted.end());
            Cells next(n_);
            uint32_t id = 0;
            for (uint32_t i = 0; i < n_; ++i) {
                if (i > 0 && sorted[i].first != sorted[i - 1].first) ++id;
                next[sorted[i].second] = id;
            }
            if (next == cell) return;
            cell = std::move(next);
        }
    }

    void refine() { refine_from(cell_); }

    bool homogeneous(const Cells& cell, uint32_t num_cells) const {
        std::vector<std::vector<uint32_t>> members(num_cells);
        for (uint32_t v = 0; v < n_; ++v) members[cell[v]].push_back(v);
        for (uint32_t a = 0; a < num_cells; ++a)
            for (uint32_t b = a; b < num_cells; ++b) {
                bool any = false, all = true;
                for (uint32_t u : members[a])
                    for (uint32_t v : members[b]) {
                        if (u == v) continue;
                        bool e = (adj_[u] >> v) & 1u;
                        any |= e;
                        all &= e;
                    }
                if (a == b && members[a].size() < 2) continue;
                if (any && !all) return false;
            }
        return true;
    }

    std::string code_for_order(const std::vector<uint32_t>& order) const {
        std::string code;
        code.reserve(n_ + (n_ * (n_ - 1) / 2 + 7) / 8);
        for (uint32_t v : order) code.push_back(static_cast<char>(colors_[v]));
        uint8_t cur = 0;
        int fill = 0;
        for (uint32_t i = 1; i < n_; ++i)
            for (uint32_t j = 0; j < i; ++j) {
                cur = static_cast<uint8_t>((cur << 1) | ((adj_[order[i]] >> order[j]) & 1u));
                if (++fill == 8) {
                    code.push_back(static_cast<char>(cur));
                    cur = 0;
                    fill = 0;
                }
            }
        if (fill) code.push_back(static_cast<char>(cur << (8 - fill)));
        return code;
    }

    void leaf(const Cells& cell, uint32_t num_cells) {
        std::vector<std::vector<uint32_t>> members(num_cells);
        for (uint32_t v = 0; v < n_; ++v) members[cell[v]].push_back(v);
        std::vector<uint32_t> order;
        order.reserve(n_);
        for (auto& m : members) order.insert(order.end(), m.begin(), m.end());
        std::string code = code_for_order(order);
        if (best_.empty() || code < best_) best_ = std::move(code);
    }

    void search(Cells cell) {
        if (++nodes_ > kNodeBudget)
            throw std::runtime_error("canonical_code: search budget exceeded");
        uint32_t num_cells = *std::max_element(cell.begin(), cell.end()) + 1;
        if (num_cells == n_ || homogeneous(cell, num_cells)) {
            leaf(cell, num_cells);
            return;
        }
        // First smallest non-singleton cell (invariant target choice).
        std::vector<uint32_t> size(num_cells, 0);
        for (uint32_t v = 0; v < n_; ++v) ++size[cell[v]];
        uint32_t target = num_cells, target_size = n_ + 1;
        for (uint32_t c = 0; c < num_cells; ++c)
            if (size[c] > 1 && size[c] < target_size) {
                target = c;
                target_size = size[c];
            }
        for (uint32_t v = 0; v < n_; ++v) {
            if (cell[v] != target) continue;
            Cells child = cell;
            for (uint32_t u = 0; u < n_; ++u)
                if (child[u] >= target && u != v) ++child[u];
            refine_from(child);
            search(std::move(child));
        }
    }

    static constexpr uint64_t kNodeBudget = 2'000'000;

    const Graph& g_;
    uint32_t n_ = 0;
    std::vector<uint32_t> adj_;
    Cells cell_;
    std::vector<uint8_t> colors_;
    std::string best_;
    uint64_t nodes_ = 0;
};

}  // namespace

std::string canonical_code(const Graph& g, const std::vector<uint8_t>* colors) {
    return BigSearch(g, colors).run();
}

std::string observed_class_key(const Graph& g, const std::vector<uint8_t>* colors,
                               uint64_t invisible_vertices) {
    std::vector<std::string> parts;
    for (const auto& comp : g.connected_components()) {
        Graph sub = g.induced(comp);
        if (colors) {
            std::vector<uint8_t> c(comp.size());
            for (size_t i = 0; i < comp.size(); ++i) c[i] = (*colors)[comp[i]];
            parts.push_back(canonical_code(sub, &c));
        } else {
            parts.push_back(canonical_code(sub));
        }
    }
    std::sort(parts.begin(), parts.end());
    std::string key = "i" + std::to_string(invisible_vertices);
    for (const auto& p : parts) {
        key.push_back('|');
        key += p;
    }
    return key;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    return observed_class_key(a, nullptr, 0) == observed_class_key(b, nullptr, 0);
}

}  // namespace motifscope

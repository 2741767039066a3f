#include "fanspec/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "fanspec/errors.hpp"

namespace fanspec {

namespace {

// Ordered partition of 0..n-1. Cells are contiguous ranges of `lab`;
// `start[p]` is the first position of the cell holding position p and
// `len[s]` is the length of the cell starting at s.
struct Partition {
  std::vector<int> lab;
  std::vector<int> start;
  std::vector<int> len;
  int cells = 0;

  bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

constexpr std::size_t kMaxStoredAutomorphisms = 512;

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const int> colors)
      : g_(g), n_(g.order()), words_(g.words_per_row()) {
    if (!colors.empty() && static_cast<int>(colors.size()) != n_)
      throw ParameterError("colour vector length does not match graph order");
    colors_.assign(colors.begin(), colors.end());
  }

  Partition initial_partition() const {
    Partition p;
    p.lab.resize(static_cast<std::size_t>(n_));
    std::iota(p.lab.begin(), p.lab.end(), 0);
    p.start.assign(static_cast<std::size_t>(n_), 0);
    p.len.assign(static_cast<std::size_t>(n_), 0);
    if (n_ == 0) return p;
    auto color = [&](int v) { return colors_.empty() ? 0 : colors_[static_cast<std::size_t>(v)]; };
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return color(a) < color(b); });
    int s = 0;
    for (int i = 1; i <= n_; ++i) {
      if (i == n_ || color(p.lab[static_cast<std::size_t>(i)]) != color(p.lab[static_cast<std::size_t>(s)])) {
        close_cell(p, s, i);
        ++p.cells;
        s = i;
      }
    }
    std::vector<int> queue;
    for (int c = 0; c < n_; c += p.len[static_cast<std::size_t>(c)]) queue.push_back(c);
    refine(p, std::move(queue));
    return p;
  }

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ > 0) {
      Partition root = initial_partition();
      path_.assign(static_cast<std::size_t>(n_), -1);
      search(root, 0);
      out.order = best_.lab;
    }
    out.label = make_label(out.order);
    return out;
  }

  void refine(Partition& p, std::vector<int> queue) const {
    std::vector<char> queued(static_cast<std::size_t>(n_), 0);
    for (int s : queue) queued[static_cast<std::size_t>(s)] = 1;
    std::vector<std::uint64_t> splitter(static_cast<std::size_t>(words_));
    std::vector<std::pair<int, int>> keyed;
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete()) {
      const int s = queue[head++];
      queued[static_cast<std::size_t>(s)] = 0;
      std::fill(splitter.begin(), splitter.end(), 0);
      for (int i = s; i < s + p.len[static_cast<std::size_t>(s)]; ++i) {
        int v = p.lab[static_cast<std::size_t>(i)];
        splitter[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
      }
      for (int c = 0; c < n_;) {
        const int len = p.len[static_cast<std::size_t>(c)];
        if (len == 1) {
          ++c;
          continue;
        }
        keyed.clear();
        bool uniform = true;
        for (int i = c; i < c + len; ++i) {
          int v = p.lab[static_cast<std::size_t>(i)];
          auto row = g_.row(v);
          int cnt = 0;
          for (int w = 0; w < words_; ++w) cnt += std::popcount(row[static_cast<std::size_t>(w)] & splitter[static_cast<std::size_t>(w)]);
          if (!keyed.empty() && cnt != keyed.front().first) uniform = false;
          keyed.emplace_back(cnt, v);
        }
        if (uniform) {
          c += len;
          continue;
        }
        std::sort(keyed.begin(), keyed.end());
        int frag = c;
        for (int i = 0; i < len; ++i) {
          p.lab[static_cast<std::size_t>(c + i)] = keyed[static_cast<std::size_t>(i)].second;
          if (i + 1 == len || keyed[static_cast<std::size_t>(i + 1)].first != keyed[static_cast<std::size_t>(i)].first) {
            close_cell(p, frag, c + i + 1);
            ++p.cells;
            if (!queued[static_cast<std::size_t>(frag)]) {
              queued[static_cast<std::size_t>(frag)] = 1;
              queue.push_back(frag);
            }
            frag = c + i + 1;
          }
        }
        --p.cells;  // the original cell was replaced by its fragments
        c += len;
      }
    }
  }

 private:
  static void close_cell(Partition& p, int s, int e) {
    for (int i = s; i < e; ++i) p.start[static_cast<std::size_t>(i)] = s;
    p.len[static_cast<std::size_t>(s)] = e - s;
  }

  void individualize(Partition& p, int s, int v) const {
    auto it = std::find(p.lab.begin() + s, p.lab.begin() + s + p.len[static_cast<std::size_t>(s)], v);
    std::iter_swap(p.lab.begin() + s, it);
    const int len = p.len[static_cast<std::size_t>(s)];
    p.len[static_cast<std::size_t>(s)] = 1;
    for (int i = s + 1; i < s + len; ++i) p.start[static_cast<std::size_t>(i)] = s + 1;
    p.len[static_cast<std::size_t>(s + 1)] = len - 1;
    ++p.cells;
  }

  int target_cell(const Partition& p) const {
    for (int c = 0; c < n_; c += p.len[static_cast<std::size_t>(c)])
      if (p.len[static_cast<std::size_t>(c)] > 1) return c;
    return -1;
  }

  struct Leaf {
    std::vector<int> lab;
    std::vector<std::uint64_t> graph;
    std::vector<int> path;
  };

  std::vector<std::uint64_t> leaf_graph(const std::vector<int>& lab) const {
    std::vector<int> inv(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) inv[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n_) * static_cast<std::size_t>(words_), 0);
    for (int i = 0; i < n_; ++i) {
      auto row = g_.row(lab[static_cast<std::size_t>(i)]);
      auto* dst = out.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_);
      for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = row[static_cast<std::size_t>(w)];
        while (bits) {
          int u = inv[static_cast<std::size_t>(w * 64 + std::countr_zero(bits))];
          dst[u >> 6] |= std::uint64_t{1} << (u & 63);
          bits &= bits - 1;
        }
      }
    }
    return out;
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t d = 0;
    while (d < a.size() && d < b.size() && a[d] == b[d]) ++d;
    return static_cast<int>(d);
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
    automorphisms_.push_back(std::move(gamma));
  }

  int leaf(const Partition& p, int level) {
    std::vector<int> cur_path(path_.begin(), path_.begin() + level);
    auto graph = leaf_graph(p.lab);
    if (!have_first_) {
      have_first_ = true;
      first_ = {p.lab, graph, cur_path};
      best_ = first_;
      return level;
    }
    if (graph == first_.graph) {
      record_automorphism(first_.lab, p.lab);
      return divergence(cur_path, first_.path);
    }
    if (graph == best_.graph) {
      record_automorphism(best_.lab, p.lab);
      return divergence(cur_path, best_.path);
    }
    if (graph > best_.graph) best_ = {p.lab, std::move(graph), std::move(cur_path)};
    return level;
  }

  // Whether v lies in the orbit of an already explored sibling under the
  // stored automorphisms that fix the current path pointwise.
  bool pruned(int v, const std::vector<int>& tried, int level) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i)
        fixes = gamma[static_cast<std::size_t>(path_[static_cast<std::size_t>(i)])] == path_[static_cast<std::size_t>(i)];
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    if (!any) return false;
    const int root = find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == root; });
  }

  int search(const Partition& p, int level) {
    if (p.discrete()) return leaf(p, level);
    const int s = target_cell(p);
    std::vector<int> cell(p.lab.begin() + s, p.lab.begin() + s + p.len[static_cast<std::size_t>(s)]);
    std::sort(cell.begin(), cell.end());
    std::vector<int> tried;
    for (int v : cell) {
      if (pruned(v, tried, level)) continue;
      tried.push_back(v);
      Partition child = p;
      individualize(child, s, v);
      refine(child, {s});
      path_[static_cast<std::size_t>(level)] = v;
      int r = search(child, level + 1);
      if (r < level) return r;
    }
    return level;
  }

  std::string make_label(const std::vector<int>& order) const {
    std::string out;
    auto put32 = [&](std::uint32_t x) {
      for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((x >> (8 * k)) & 0xFF));
    };
    put32(static_cast<std::uint32_t>(n_));
    if (!colors_.empty())
      for (int v : order) put32(static_cast<std::uint32_t>(colors_[static_cast<std::size_t>(v)]));
    for (auto w : best_.graph)
      for (int k = 0; k < 8; ++k) out.push_back(static_cast<char>((w >> (8 * k)) & 0xFF));
    return out;
  }

  const Graph& g_;
  int n_;
  int words_;
  std::vector<int> colors_;
  std::vector<int> path_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  return Canonizer(g, colors).run();
}

std::string canonical_label(const Graph& g) { return canonical_form(g).label; }

Graph canonical_graph(const Graph& g) {
  auto form = canonical_form(g);
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < form.order.size(); ++i) perm[static_cast<std::size_t>(form.order[i])] = static_cast<int>(i);
  return g.permuted(perm);
}

std::vector<int> equitable_cells(const Graph& g) {
  Canonizer c(g, {});
  auto p = c.initial_partition();
  std::vector<int> cell(static_cast<std::size_t>(g.order()));
  int index = -1;
  for (int i = 0; i < g.order(); ++i) {
    if (p.start[static_cast<std::size_t>(i)] == i) ++index;
    cell[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = index;
  }
  return cell;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_label(a) == canonical_label(b);
}

}  // namespace fanspec

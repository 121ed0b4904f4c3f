#include "remh/subgraph.hpp"

#include <algorithm>
#include <numeric>

namespace remh {

namespace {

struct Embedder {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;      // pattern vertices, descending degree
  std::vector<int> image;      // image[pattern vertex] or -1
  Bitset used;                 // host vertices already taken

  Embedder(const Graph& h, const Graph& p)
      : host(h),
        pattern(p),
        order(p.vertex_count()),
        image(p.vertex_count(), -1),
        used(h.vertex_count()) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return p.degree(a) > p.degree(b);
    });
  }

  bool place(std::size_t k) {
    if (k == order.size()) return true;
    const int pv = order[k];
    const int want = pattern.degree(pv);

    // Candidates must be adjacent to the images of all already-placed
    // pattern neighbours of pv.
    Bitset cand(host.vertex_count());
    cand.set_all();
    bool anchored = false;
    pattern.neighbors(pv).for_each([&](int q) {
      if (image[q] >= 0) {
        cand &= host.neighbors(image[q]);
        anchored = true;
      }
    });
    (void)anchored;
    cand.subtract(used);

    for (int hv = cand.next(); hv >= 0; hv = cand.next(hv + 1)) {
      if (host.degree(hv) < want) continue;
      image[pv] = hv;
      used.set(hv);
      if (place(k + 1)) return true;
      used.reset(hv);
      image[pv] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> contains_subgraph(const Graph& host,
                                                  const Graph& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (pattern.vertex_count() == 0) return std::vector<int>{};
  Embedder e(host, pattern);
  if (e.place(0)) return e.image;
  return std::nullopt;
}

bool has_subgraph(const Graph& host, const Graph& pattern) {
  return contains_subgraph(host, pattern).has_value();
}

}  // namespace remh

#include "rcp/catalog/universal.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "rcp/motif/oo.hpp"

namespace rcp {
namespace {

// DP state while scanning the path left to right, relative to a fixed hub
// color c1: the previous path vertex's new color gp (0 once it can no longer
// matter), whether a chain of conflict arcs runs from the hub out to the
// current position (ro), and whether one runs from the current position back
// into the hub (ri).  At most 9 * 10 * 2 * 2 = 360 states.
constexpr int kWords = 6;
using Bits = std::array<std::uint64_t, kWords>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : b) {
      h ^= w;
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
  }
};

bool subset_of(const Bits& a, const Bits& b) {
  for (int i = 0; i < kWords; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool empty_bits(const Bits& b) {
  for (std::uint64_t w : b)
    if (w) return false;
  return true;
}

int popcount_bits(const Bits& b) {
  int c = 0;
  for (std::uint64_t w : b) c += __builtin_popcountll(w);
  return c;
}

int state_index(int c1i, int gp, int ro, int ri) {
  return (((c1i * 10 + gp) << 1 | ro) << 1) | ri;
}

void set_state(Bits& b, int s) { b[s >> 6] |= 1ull << (s & 63); }
bool has_state(const Bits& b, int s) { return b[s >> 6] >> (s & 63) & 1; }

using Relabel = std::array<std::uint8_t, 10>;  // color -> color, index 0 unused

constexpr Relabel kIdentity = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};

// Provenance of one frontier set: which set it came from, the concrete list
// the adversary played, and the color relabeling applied when the child was
// canonicalized.  Kept per level so a refutation can be traced back to
// concrete lists.
struct Meta {
  int level = -1;
  int parent = -1;
  std::uint16_t list_mask = 0;
  Relabel relabel = kIdentity;
};

struct SparseState {
  std::uint8_t c1i, gp, ro, ri;
};

class Engine {
 public:
  Engine(const ConfigurationTemplate& t, const StarPathShape& shape,
         const std::vector<int>& alpha, const std::vector<int>& sizes,
         std::uint64_t max_sets)
      : t_(t), shape_(shape), alpha_(alpha), sizes_(sizes), max_sets_(max_sets) {
    hub_ = shape.hub >= 0;
    nc1_ = hub_ ? 9 : 1;
    alpha_hub_ = hub_ ? alpha[shape.hub] : 0;
    for (int c : alpha)
      if (c != 10) pinned_ |= std::uint16_t(1) << (c - 1);
  }

  UniversalResult run() {
    UniversalResult res;
    int m = static_cast<int>(shape_.path.size());
    sets_.assign(m + 1, {});
    metas_.assign(m + 1, {});
    Bits start{};
    for (int c1i = 0; c1i < nc1_; ++c1i) set_state(start, state_index(c1i, 0, 0, 0));
    sets_[0].push_back(start);
    metas_[0].push_back(Meta{});

    for (int level = 0; level < m; ++level) {
      if (!advance(level, res)) return res;  // refuted or out of budget
      res.stats.sets_explored += sets_[level + 1].size();
      res.stats.peak_antichain =
          std::max<std::uint64_t>(res.stats.peak_antichain, sets_[level + 1].size());
      if (max_sets_ && res.stats.sets_explored > max_sets_) {
        res.exhausted = true;
        return res;
      }
    }

    // Acceptance: every minimal final set must leave enough surviving hub
    // colors that any hub list of the prescribed size hits one (with no hub,
    // nonempty reachability is everything).
    for (int k = 0; k < static_cast<int>(sets_[m].size()); ++k) {
      std::uint16_t survivors = 0;
      for (int c1i = 0; c1i < nc1_; ++c1i)
        if (has_state(sets_[m][k], state_index(c1i, 0, 0, 0)))
          survivors |= std::uint16_t(1) << c1i;
      int needed = hub_ ? 9 - sizes_[shape_.hub] + 1 : 1;
      if (__builtin_popcount(survivors) < needed) {
        res.bad_lists = trace_final(k, survivors);
        validate_refutation(res.bad_lists);
        return res;
      }
    }
    res.verified = true;
    return res;
  }

 private:
  // One adversary level: play every inclusion-minimal list choice against
  // every frontier set, canonicalize and deduplicate the children, and keep
  // only minimal sets.  Returns false when a refutation or the budget ends
  // the run.
  bool advance(int level, UniversalResult& res) {
    int pv = shape_.path[level];
    int ai = alpha_[pv];
    int aprev = level > 0 ? alpha_[shape_.path[level - 1]] : 0;
    bool ledge = shape_.left_edge[level];
    bool nedge = level + 1 < static_cast<int>(shape_.path.size()) &&
                 shape_.left_edge[level + 1];
    build_transitions(ai, aprev, ledge, nedge);

    auto& next = sets_[level + 1];
    auto& nextm = metas_[level + 1];
    std::unordered_set<Bits, BitsHash> raw_seen;
    std::unordered_set<Bits, BitsHash> canon_seen;
    int size = sizes_[pv];

    for (int rix = 0; rix < static_cast<int>(sets_[level].size()); ++rix) {
      // Image of the set under each single played color.
      Bits img[9];
      for (auto& b : img) b = Bits{};
      decode(sets_[level][rix]);
      for (const auto& s : sparse_) {
        const std::int16_t* row = trans_[s.c1i][(s.gp << 2) | (s.ro << 1) | s.ri];
        for (int g = 0; g < 9; ++g) {
          if (row[g] < 0) continue;
          int q = row[g];
          set_state(img[g], state_index(s.c1i, q >> 2, (q >> 1) & 1, q & 1));
        }
      }
      // Colors with equal images are interchangeable inside a list, so the
      // adversary only needs inclusion-minimal supports over distinct images.
      int k = 0;
      Bits dimg[9];
      std::uint16_t dcolors[9];
      int dcount[9];
      for (int g = 0; g < 9; ++g) {
        int j = 0;
        while (j < k && dimg[j] != img[g]) ++j;
        if (j == k) {
          dimg[k] = img[g];
          dcolors[k] = 0;
          dcount[k] = 0;
          ++k;
        }
        dcolors[j] |= std::uint16_t(1) << g;
        ++dcount[j];
      }
      for (int sup = 1; sup < (1 << k); ++sup) {
        if (__builtin_popcount(sup) > size) continue;
        int total = 0;
        bool minimal = true;
        for (int j = 0; j < k; ++j)
          if (sup >> j & 1) total += dcount[j];
        if (total < size) continue;
        for (int j = 0; j < k && minimal; ++j)
          if ((sup >> j & 1) && total - dcount[j] >= size) minimal = false;
        if (!minimal) continue;

        Bits u{};
        for (int j = 0; j < k; ++j)
          if (sup >> j & 1)
            for (int w = 0; w < kWords; ++w) u[w] |= dimg[j][w];
        std::uint16_t lmask = support_list(sup, k, dcolors, size);
        if (empty_bits(u)) {
          res.bad_lists = trace(level, rix, lmask);
          validate_refutation(res.bad_lists);
          return false;
        }
        if (!raw_seen.insert(u).second) continue;
        Bits canon;
        Relabel relabel;
        canonicalize(u, canon, relabel);
        if (!canon_seen.insert(canon).second) continue;
        next.push_back(canon);
        nextm.push_back(Meta{level, rix, lmask, relabel});
      }
    }
    reduce_antichain(next, nextm);
    return true;
  }

  // A concrete list with the given support over distinct-image classes: one
  // color from each class, topped up to the requested size within them.
  static std::uint16_t support_list(int sup, int k, const std::uint16_t* dcolors,
                                    int size) {
    std::uint16_t list = 0;
    int have = 0;
    for (int j = 0; j < k; ++j)
      if (sup >> j & 1) {
        list |= dcolors[j] & -dcolors[j];
        ++have;
      }
    for (int j = 0; j < k && have < size; ++j) {
      if (!(sup >> j & 1)) continue;
      std::uint16_t extra = dcolors[j] & ~list;
      while (extra && have < size) {
        list |= extra & -extra;
        extra &= extra - 1;
        ++have;
      }
    }
    return list;
  }

  void build_transitions(int ai, int aprev, bool ledge, bool nedge) {
    for (int c1i = 0; c1i < nc1_; ++c1i) {
      int c1 = hub_ ? c1i + 1 : 0;
      for (int gp = 0; gp <= 9; ++gp)
        for (int b = 0; b < 4; ++b) {
          int ro = b >> 1, ri = b & 1;
          for (int g = 1; g <= 9; ++g) {
            std::int16_t out = -1;
            bool arc_fwd = ledge && g == aprev;  // previous vertex -> current
            bool arc_bwd = ledge && gp == ai;    // current -> previous vertex
            bool hub_out = hub_ && g == alpha_hub_;
            bool hub_in = hub_ && c1 == ai;
            if (g != c1 && !(ledge && g == gp) && !(arc_fwd && arc_bwd)) {
              bool ro2 = hub_out || (arc_fwd && ro);
              bool ri2 = hub_in || (arc_bwd && ri);
              if (!(ro2 && hub_in) && !(hub_out && ri2))
                out = nedge ? static_cast<std::int16_t>((g << 2) | (ro2 << 1) | ri2)
                            : std::int16_t{0};
            }
            trans_[c1i][(gp << 2) | b][g - 1] = out;
          }
        }
    }
  }

  void decode(const Bits& b) {
    sparse_.clear();
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t word = b[w];
      while (word) {
        int s = (w << 6) + __builtin_ctzll(word);
        word &= word - 1;
        sparse_.push_back({static_cast<std::uint8_t>(s / 40),
                           static_cast<std::uint8_t>(s / 4 % 10),
                           static_cast<std::uint8_t>(s >> 1 & 1),
                           static_cast<std::uint8_t>(s & 1)});
      }
    }
  }

  // Canonical representative of a set under permutations of the free colors
  // (those not pinned by alpha): map the free colors that actually appear to
  // the lowest free slots, minimizing over their order when few enough, and
  // fall back to first-use naming otherwise.  Dedup stays sound either way
  // because a specific permutation is applied and recorded.
  void canonicalize(const Bits& in, Bits& out, Relabel& relabel) {
    decode(in);
    std::uint16_t appearing = 0;
    for (const auto& s : sparse_) {
      if (hub_ && !(pinned_ >> s.c1i & 1)) appearing |= std::uint16_t(1) << s.c1i;
      if (s.gp >= 1 && !(pinned_ >> (s.gp - 1) & 1))
        appearing |= std::uint16_t(1) << (s.gp - 1);
    }
    std::array<int, 9> freecols{};
    int nfree = 0;
    for (int c = 1; c <= 9; ++c)
      if (appearing >> (c - 1) & 1) freecols[nfree++] = c;
    std::array<int, 9> slots{};
    int nslots = 0;
    for (int c = 1; c <= 9; ++c)
      if (!(pinned_ >> (c - 1) & 1)) slots[nslots++] = c;

    if (nfree <= 1 || nfree > 6) {
      relabel = first_use_relabel(freecols, nfree, slots, nslots);
      apply_relabel(relabel, out);
      return;
    }
    std::array<int, 6> perm{};
    for (int i = 0; i < nfree; ++i) perm[i] = i;
    Bits best{};
    Relabel best_relabel = kIdentity;
    bool have = false;
    do {
      Relabel map = kIdentity;
      for (int i = 0; i < nfree; ++i)
        map[freecols[i]] = static_cast<std::uint8_t>(slots[perm[i]]);
      fill_leftover(map, appearing);
      Bits img;
      apply_relabel(map, img);
      if (!have || img < best) {
        best = img;
        best_relabel = map;
        have = true;
      }
    } while (std::next_permutation(perm.begin(), perm.begin() + nfree));
    out = best;
    relabel = best_relabel;
  }

  Relabel first_use_relabel(const std::array<int, 9>& freecols, int nfree,
                            const std::array<int, 9>& slots, int nslots) const {
    Relabel map = kIdentity;
    int next = 0;
    std::uint16_t assigned = 0;
    auto take = [&](int c) {
      if (pinned_ >> (c - 1) & 1) return;
      if (assigned >> (c - 1) & 1) return;
      map[c] = static_cast<std::uint8_t>(slots[next++]);
      assigned |= std::uint16_t(1) << (c - 1);
    };
    for (const auto& s : sparse_) {
      if (hub_) take(s.c1i + 1);
      if (s.gp >= 1) take(s.gp);
    }
    for (int i = 0; i < nfree; ++i) take(freecols[i]);
    (void)nslots;
    // colors never appearing keep the leftover slots in ascending order
    std::uint16_t appearing = assigned;
    fill_leftover(map, appearing);
    return map;
  }

  void fill_leftover(Relabel& map, std::uint16_t appearing) const {
    std::uint16_t taken = pinned_;
    for (int c = 1; c <= 9; ++c)
      if (appearing >> (c - 1) & 1) taken |= std::uint16_t(1) << (map[c] - 1);
    int next = 1;
    for (int c = 1; c <= 9; ++c) {
      if (pinned_ >> (c - 1) & 1) continue;
      if (appearing >> (c - 1) & 1) continue;
      while (taken >> (next - 1) & 1) ++next;
      map[c] = static_cast<std::uint8_t>(next);
      taken |= std::uint16_t(1) << (next - 1);
    }
  }

  void apply_relabel(const Relabel& map, Bits& out) const {
    out = Bits{};
    for (const auto& s : sparse_) {
      int c1i = hub_ ? map[s.c1i + 1] - 1 : 0;
      int gp = s.gp == 0 ? 0 : map[s.gp];
      set_state(out, state_index(c1i, gp, s.ro, s.ri));
    }
  }

  void reduce_antichain(std::vector<Bits>& sets, std::vector<Meta>& metas) const {
    if (sets.size() <= 1 || sets.size() > 8000) return;
    std::vector<int> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return popcount_bits(sets[a]) < popcount_bits(sets[b]);
    });
    std::vector<char> dead(sets.size(), 0);
    for (std::size_t x = 0; x < order.size(); ++x) {
      if (dead[order[x]]) continue;
      for (std::size_t y = x + 1; y < order.size(); ++y)
        if (!dead[order[y]] && subset_of(sets[order[x]], sets[order[y]]))
          dead[order[y]] = 1;
    }
    std::vector<Bits> ks;
    std::vector<Meta> km;
    ks.reserve(sets.size());
    km.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (!dead[i]) {
        ks.push_back(sets[i]);
        km.push_back(metas[i]);
      }
    sets.swap(ks);
    metas.swap(km);
  }

  // Rebuild concrete lists from a refuting trail.  Stored list masks were
  // played in relabeled color space, so unwind the accumulated relabeling:
  // with sigma the composition so far, the real list is sigma^{-1} of the
  // stored mask, and sigma grows by the child's relabel after each step.
  std::vector<std::uint16_t> trace(int level, int ridx, std::uint16_t lmask) {
    std::vector<std::pair<int, std::uint16_t>> raw{{level, lmask}};
    std::vector<Relabel> relabels{kIdentity};
    int lev = level, idx = ridx;
    while (lev >= 0) {
      const Meta& mt = metas_[lev][idx];
      if (mt.level < 0) break;
      raw.push_back({mt.level, mt.list_mask});
      relabels.push_back(mt.relabel);
      lev = mt.level;
      idx = mt.parent;
    }
    std::reverse(raw.begin(), raw.end());
    std::reverse(relabels.begin(), relabels.end());

    std::vector<std::uint16_t> lists(alpha_.size(), 0);
    Relabel sigma = kIdentity;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      Relabel inv{};
      for (int c = 1; c <= 9; ++c) inv[sigma[c]] = static_cast<std::uint8_t>(c);
      std::uint16_t real = 0;
      for (int c = 1; c <= 9; ++c)
        if (raw[i].second >> (c - 1) & 1) real |= std::uint16_t(1) << (inv[c] - 1);
      lists[shape_.path[raw[i].first]] = real;
      Relabel comp{};
      for (int c = 1; c <= 9; ++c) comp[c] = relabels[i][sigma[c]];
      sigma = comp;
    }
    sigma_last_ = sigma;
    for (std::size_t i = 0; i < shape_.path.size(); ++i) {
      int v = shape_.path[i];
      if (lists[v] == 0) lists[v] = std::uint16_t((1u << sizes_[v]) - 1);
    }
    if (shape_.hub >= 0)
      lists[shape_.hub] = std::uint16_t((1u << sizes_[shape_.hub]) - 1);
    return lists;
  }

  // A final set with too few surviving hub colors: trace its trail, then give
  // the hub a list avoiding every (real-space) survivor.
  std::vector<std::uint16_t> trace_final(int k, std::uint16_t survivors_canon) {
    const Meta& mt = metas_[shape_.path.size()][k];
    auto lists = trace(mt.level, mt.parent, mt.list_mask);
    Relabel comp{};
    for (int c = 1; c <= 9; ++c) comp[c] = mt.relabel[sigma_last_[c]];
    Relabel inv{};
    for (int c = 1; c <= 9; ++c) inv[comp[c]] = static_cast<std::uint8_t>(c);
    std::uint16_t survivors = 0;
    for (int c = 1; c <= 9; ++c)
      if (survivors_canon >> (c - 1) & 1) survivors |= std::uint16_t(1) << (inv[c] - 1);
    if (shape_.hub >= 0) {
      std::uint16_t pick = 0;
      int need = sizes_[shape_.hub];
      for (int c = 1; c <= 9 && need > 0; ++c)
        if (!(survivors >> (c - 1) & 1)) {
          pick |= std::uint16_t(1) << (c - 1);
          --need;
        }
      lists[shape_.hub] = pick;
    }
    return lists;
  }

  void validate_refutation(const std::vector<std::uint16_t>& lists) const {
    Motif m;
    m.n = t_.n;
    m.adj = t_.adjacency_masks();
    m.alpha = alpha_;
    m.lists = lists;
    for (int v = 0; v < t_.n; ++v)
      if (__builtin_popcount(lists[v]) != sizes_[v])
        throw std::logic_error("universal engine traced lists with wrong sizes");
    if (oo_recolorable(m).yes)
      throw std::logic_error("universal engine refutation admits a witness");
  }

  const ConfigurationTemplate& t_;
  const StarPathShape& shape_;
  const std::vector<int>& alpha_;
  const std::vector<int>& sizes_;
  std::uint64_t max_sets_;
  bool hub_ = false;
  int nc1_ = 1;
  int alpha_hub_ = 0;
  std::uint16_t pinned_ = 0;
  std::int16_t trans_[9][40][9] = {};
  std::vector<SparseState> sparse_;
  std::vector<std::vector<Bits>> sets_;
  std::vector<std::vector<Meta>> metas_;
  Relabel sigma_last_ = kIdentity;
};

}  // namespace

std::optional<StarPathShape> star_path_shape(const ConfigurationTemplate& t) {
  auto try_hub = [&](int hub) -> std::optional<StarPathShape> {
    StarPathShape shape;
    shape.hub = hub;
    for (int v = 0; v < t.n; ++v)
      if (v != hub) shape.path.push_back(v);
    shape.left_edge.assign(shape.path.size(), 0);
    std::size_t covered = 0;
    for (std::size_t i = 1; i < shape.path.size(); ++i)
      if (t.has_edge(shape.path[i - 1], shape.path[i])) {
        shape.left_edge[i] = 1;
        ++covered;
      }
    std::size_t hub_edges = 0;
    if (hub >= 0)
      for (int v : shape.path)
        if (t.has_edge(hub, v)) ++hub_edges;
    if (hub >= 0 && hub_edges != shape.path.size()) return std::nullopt;
    if (t.edges.size() != hub_edges + covered) return std::nullopt;
    return shape;
  };
  for (int h = 0; h < t.n; ++h)
    if (t.pattern_deg(h) == t.n - 1)
      if (auto shape = try_hub(h)) return shape;
  return try_hub(-1);
}

UniversalResult verify_universal_class(const ConfigurationTemplate& t,
                                       const std::vector<int>& alpha,
                                       const std::vector<int>& sizes,
                                       std::uint64_t max_sets) {
  auto shape = star_path_shape(t);
  if (!shape)
    throw std::invalid_argument(
        "template is not hub-plus-path shaped; exact universal check unsupported");
  if (static_cast<int>(alpha.size()) != t.n || static_cast<int>(sizes.size()) != t.n)
    throw std::invalid_argument("alpha/sizes length mismatch");
  auto adj = t.adjacency_masks();
  for (int v = 0; v < t.n; ++v) {
    if (alpha[v] < 1 || alpha[v] > 10)
      throw std::invalid_argument("alpha color out of range");
    if (sizes[v] < 1 || sizes[v] > 9)
      throw std::invalid_argument("list size out of range");
    for (int u = v + 1; u < t.n; ++u)
      if ((adj[v] >> u & 1) && alpha[u] == alpha[v])
        throw std::invalid_argument("alpha is not proper");
  }
  Engine engine(t, *shape, alpha, sizes, max_sets);
  return engine.run();
}

}  // namespace rcp

#include "hexcount/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <unordered_map>

namespace hexcount {

namespace {

// The oracle sweeps the region line by line (horizontal lattice lines
// y = const). On line y, a "site" is a unit segment [x,x+1] x {y} adjacent to
// a region cell; in any tiling each site is either crossed by a lattice path
// (the site's segment is the horizontal edge shared by a lean_right or
// lean_left lozenge pair) or is the horizontal diagonal of an upright
// lozenge. The DP state is the set of path crossings on the current line.
//
// Crossing moves between lines: a crossing at site x of line y continues to
// site x (lean_right lozenge at (x,y)) or site x-1 (lean_left at (x,y)) of
// line y+1. Sites whose lower cell is missing are path starts (forced
// crossings); sites whose upper cell is missing are path ends. A non-crossing
// site hosts the upright lozenge up(x,y)+down(x,y-1) and needs both cells.
//
// Weights multiply into the transitions, so plain and weighted counting share
// this code; plain counting instantiates Scalar = ExactInt.

struct Site {
  long x = 0;
  bool has_up = false;    // up(x,y) in region
  bool has_down = false;  // down(x,y-1) in region
  int right_target = -1;  // site index on the next line reached by lean_right
  int left_target = -1;   // ... by lean_left
  bool mark_right = false, mark_left = false;
};

struct Line {
  long y = 0;
  std::vector<Site> sites;
  std::uint32_t start_mask = 0;    // forced crossings (no cell below)
  std::uint32_t upright_ok = 0;    // sites able to host an upright lozenge
  std::uint32_t upright_mark = 0;  // ... whose upright position is marked
};

struct Sweep {
  std::vector<Line> lines;
};

Sweep build_sweep(const Region& r, const MarkSet* marks) {
  Sweep sw;
  if (r.empty()) return sw;
  long ymin = r.cells()[0].y, ymax = r.cells()[0].y;
  for (const TriCell& c : r.cells()) {
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y + 1);
  }
  const int limit = oracle_limit();
  auto marked = [&](LozOrient k, long x, long y) {
    return marks != nullptr && marks->contains(LozengePos::make(k, x, y));
  };
  // lines y = ymin-1 .. ymax+1; the first and last are empty, so the DP can
  // start from the empty state and finish in it
  for (long y = ymin - 1; y <= ymax + 1; ++y) {
    Line ln;
    ln.y = y;
    std::map<long, Site> sites;
    for (const TriCell& c : r.cells()) {
      if (c.o == Orient::up && c.y == y) {
        Site& s = sites[c.x];
        s.x = c.x;
        s.has_up = true;
      } else if (c.o == Orient::down && c.y == y - 1) {
        Site& s = sites[c.x];
        s.x = c.x;
        s.has_down = true;
      }
    }
    if (static_cast<int>(sites.size()) > limit)
      throw OracleSizeError("region frontier width " + std::to_string(sites.size()) +
                            " exceeds the oracle budget " + std::to_string(limit) +
                            " (set HEXCOUNT_ORACLE_LIMIT to raise it)");
    for (auto& [x, s] : sites) ln.sites.push_back(s);
    for (size_t i = 0; i < ln.sites.size(); ++i) {
      Site& s = ln.sites[i];
      if (!s.has_down) ln.start_mask |= 1u << i;
      if (s.has_up && s.has_down) {
        ln.upright_ok |= 1u << i;
        if (marked(LozOrient::upright, s.x, y)) ln.upright_mark |= 1u << i;
      }
      if (s.has_up) {
        s.mark_right = marked(LozOrient::lean_right, s.x, y);
        s.mark_left = marked(LozOrient::lean_left, s.x, y);
      }
    }
    sw.lines.push_back(std::move(ln));
  }
  // link move targets (a move consumes down(target_x, y), so the target site
  // must have its lower cell)
  for (size_t li = 0; li + 1 < sw.lines.size(); ++li) {
    Line& cur = sw.lines[li];
    const Line& nxt = sw.lines[li + 1];
    std::map<long, int> index;
    for (size_t i = 0; i < nxt.sites.size(); ++i)
      if (nxt.sites[i].has_down) index[nxt.sites[i].x] = static_cast<int>(i);
    for (Site& s : cur.sites) {
      if (!s.has_up) continue;
      auto it = index.find(s.x);
      if (it != index.end()) s.right_target = it->second;
      it = index.find(s.x - 1);
      if (it != index.end()) s.left_target = it->second;
    }
  }
  return sw;
}

template <class Scalar>
struct Half;  // multiply a scalar by 1/2 per marked lozenge

template <>
struct Half<ExactRational> {
  static void apply(ExactRational& v, int times) {
    for (int i = 0; i < times; ++i) v /= 2;
  }
};

template <class Scalar>
class FrontierDP {
 public:
  explicit FrontierDP(const Sweep& sw) : sw_(sw) {}

  Scalar run() {
    if (sw_.lines.empty()) return Scalar(1);
    cur_.clear();
    cur_[0] = Scalar(1);
    for (size_t li = 0; li + 1 < sw_.lines.size(); ++li) {
      nxt_.clear();
      const Line& from = sw_.lines[li];
      const Line& to = sw_.lines[li + 1];
      for (auto& [mask, val] : cur_) {
        crossers_.clear();
        bool stuck = false;
        for (size_t i = 0; i < from.sites.size(); ++i) {
          if (!(mask >> i & 1)) continue;
          const Site& s = from.sites[i];
          if (!s.has_up) continue;  // path ends here
          if (s.right_target < 0 && s.left_target < 0) {
            stuck = true;
            break;
          }
          crossers_.push_back(&s);
        }
        if (stuck) continue;
        enumerate_moves(0, 0u, val, to);
      }
      cur_.swap(nxt_);
      if (cur_.empty()) return Scalar(0);
    }
    // the final line is empty: exactly the empty state survives
    auto it = cur_.find(0);
    return it == cur_.end() ? Scalar(0) : it->second;
  }

 private:
  void enumerate_moves(size_t k, std::uint32_t targets, Scalar weight,
                       const Line& to) {
    if (k == crossers_.size()) {
      std::uint32_t all = to.sites.empty()
                              ? 0u
                              : (to.sites.size() >= 32
                                     ? ~0u
                                     : ((1u << to.sites.size()) - 1));
      std::uint32_t crossings = targets | to.start_mask;
      std::uint32_t rest = all & ~crossings;
      if ((rest & ~to.upright_ok) != 0) return;  // a hole no lozenge can fill
      if constexpr (std::is_same_v<Scalar, ExactRational>) {
        int marked_uprights = std::popcount(rest & to.upright_mark);
        Half<Scalar>::apply(weight, marked_uprights);
      }
      auto [it, inserted] = nxt_.try_emplace(crossings, weight);
      if (!inserted) it->second += weight;
      return;
    }
    const Site& s = *crossers_[k];
    if (s.right_target >= 0 && !(targets >> s.right_target & 1)) {
      Scalar w = weight;
      if constexpr (std::is_same_v<Scalar, ExactRational>)
        if (s.mark_right) Half<Scalar>::apply(w, 1);
      enumerate_moves(k + 1, targets | (1u << s.right_target), w, to);
    }
    if (s.left_target >= 0 && !(targets >> s.left_target & 1)) {
      Scalar w = weight;
      if constexpr (std::is_same_v<Scalar, ExactRational>)
        if (s.mark_left) Half<Scalar>::apply(w, 1);
      enumerate_moves(k + 1, targets | (1u << s.left_target), w, to);
    }
  }

  const Sweep& sw_;
  std::unordered_map<std::uint32_t, Scalar> cur_, nxt_;
  std::vector<const Site*> crossers_;
};

}  // namespace

int oracle_limit() {
  if (const char* env = std::getenv("HEXCOUNT_ORACLE_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 31);  // state is a 32-bit mask
  }
  return 24;
}

ExactInt count_tilings(const Region& r) {
  if (r.empty()) return 1;
  Balance b = balance(r);
  if (b.up_count != b.down_count) return 0;
  Sweep sw = build_sweep(r, nullptr);
  return FrontierDP<ExactInt>(sw).run();
}

ExactRational count_weighted(const Region& r, const MarkSet& marks) {
  if (r.empty()) return 1;
  for (const LozengePos& p : marks.marks)
    if (!r.contains(p))
      throw std::domain_error("mark at (" + std::to_string(p.x()) + "," +
                              std::to_string(p.y()) + ") lies outside the region");
  Balance b = balance(r);
  if (b.up_count != b.down_count) return 0;
  Sweep sw = build_sweep(r, &marks);
  return FrontierDP<ExactRational>(sw).run();
}

bool Tiling::uses(const LozengePos& p) const {
  return std::binary_search(lozenges.begin(), lozenges.end(), p);
}

namespace {

// Exact-cover enumeration branching on the smallest uncovered cell, partners
// in ascending lozenge order; emits tilings in lexicographic order of their
// sorted lozenge lists and doubles as an oracle independent of the DP above.
struct Lister {
  const Region& region;
  std::uint64_t limit;
  std::vector<Tiling> out;
  std::vector<LozengePos> chosen;
  std::set<TriCell> covered;

  bool rec() {
    if (out.size() >= limit) return false;
    const TriCell* next = nullptr;
    for (const TriCell& c : region.cells())
      if (!covered.count(c)) {
        next = &c;
        break;
      }
    if (next == nullptr) {
      Tiling t;
      t.lozenges = chosen;
      std::sort(t.lozenges.begin(), t.lozenges.end());
      out.push_back(std::move(t));
      return out.size() < limit;
    }
    const TriCell c = *next;
    std::vector<LozengePos> opts;
    if (c.o == Orient::up) {
      for (LozOrient k : {LozOrient::lean_right, LozOrient::lean_left, LozOrient::upright})
        opts.push_back(LozengePos::make(k, c.x, c.y));
    } else {
      opts.push_back(LozengePos::make(LozOrient::lean_right, c.x, c.y));
      opts.push_back(LozengePos::make(LozOrient::lean_left, c.x + 1, c.y));
      opts.push_back(LozengePos::make(LozOrient::upright, c.x, c.y + 1));
    }
    std::sort(opts.begin(), opts.end());
    for (const LozengePos& p : opts) {
      if (!region.contains(p)) continue;
      if (covered.count(p.up_cell) || covered.count(p.down_cell)) continue;
      covered.insert(p.up_cell);
      covered.insert(p.down_cell);
      chosen.push_back(p);
      bool go = rec();
      chosen.pop_back();
      covered.erase(p.up_cell);
      covered.erase(p.down_cell);
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<Tiling> list_tilings(const Region& r, std::uint64_t limit) {
  if (limit == 0) return {};
  if (r.empty()) return {Tiling{}};
  Balance b = balance(r);
  if (b.up_count != b.down_count) return {};
  Lister ls{r, limit, {}, {}, {}};
  ls.rec();
  return std::move(ls.out);
}

}  // namespace hexcount

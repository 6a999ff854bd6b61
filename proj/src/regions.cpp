#include "hexcount/regions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hexcount {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::domain_error(what);
}

using CellSet = std::set<TriCell>;

CellSet hexagon_cells(long a, long b, long c) {
  CellSet s;
  for (long y = 0; y < a + c; ++y)
    for (long x = -c; x < b; ++x) {
      if (x + y >= 0 && x + y <= a + b - 1) s.insert({x, y, Orient::up});
      if (x + y >= -1 && x + y <= a + b - 2) s.insert({x, y, Orient::down});
    }
  return s;
}

// Corner data for the hexagon drawn with horizontal edges of length b and, in
// counterclockwise order, the other side pairs of lengths a and c. Corner 0
// is the bottom-left vertex; numbering continues counterclockwise.  At each
// 120-degree corner the hugging lozenge orientation and the two inward edge
// directions determine the removed staircase: cells at offsets u*d1 + v*d2
// with u+v <= p-2, where p = min of the adjacent side lengths.  The lozenge
// positions that fit in the indentations of the resulting zig-zag cut sit on
// the diagonal u+v = p-1.
struct Corner {
  LozOrient kind;
  long x0, y0;
  long d1x, d1y;
  long d2x, d2y;
  long p;
};

Corner corner(int cn, long a, long b, long c) {
  switch (cn) {
    case 0: return {LozOrient::lean_left, 0, 0, 1, 0, -1, 1, std::min(b, c)};
    case 1: return {LozOrient::lean_right, b - 1, 0, -1, 0, 0, 1, std::min(a, b)};
    case 2: return {LozOrient::upright, b - 1, a, 0, -1, -1, 1, std::min(a, c)};
    case 3: return {LozOrient::lean_left, b - c, a + c - 1, 1, -1, -1, 0, std::min(b, c)};
    case 4: return {LozOrient::lean_right, -c, a + c - 1, 1, 0, 0, -1, std::min(a, b)};
    case 5: return {LozOrient::upright, -c, c, 0, 1, 1, -1, std::min(a, c)};
  }
  throw std::logic_error("bad corner");
}

using Limit = std::optional<long>;  // restriction on a staircase offset

void remove_staircase(CellSet& s, const Corner& co, Limit limit_u = {},
                      Limit limit_v = {}, long p_override = -1) {
  const long p = p_override >= 0 ? p_override : co.p;
  for (long u = 0; u <= p - 2; ++u) {
    if (limit_u && u > *limit_u) break;
    for (long v = 0; v + u <= p - 2; ++v) {
      if (limit_v && v > *limit_v) continue;
      LozengePos pos = LozengePos::make(co.kind, co.x0 + u * co.d1x + v * co.d2x,
                                        co.y0 + u * co.d1y + v * co.d2y);
      require(s.count(pos.up_cell) != 0 && s.count(pos.down_cell) != 0,
              "staircase cell falls outside the region");
      s.erase(pos.up_cell);
      s.erase(pos.down_cell);
    }
  }
}

std::vector<LozengePos> staircase_marks(const Corner& co, Limit restrict_u = {},
                                        Limit restrict_v = {}) {
  std::vector<LozengePos> out;
  for (long u = 0; u <= co.p - 1; ++u) {
    long v = co.p - 1 - u;
    if (restrict_u && u > *restrict_u) continue;
    if (restrict_v && v > *restrict_v) continue;
    out.push_back(LozengePos::make(co.kind, co.x0 + u * co.d1x + v * co.d2x,
                                   co.y0 + u * co.d1y + v * co.d2y));
  }
  return out;
}

struct HexParams {
  long a, b, c;
};

HexParams abc(const RegionSpec& spec) {
  if (spec.params.size() != 3)
    throw std::domain_error(spec.kind_name() + " expects 3 parameters");
  return {spec.params[0], spec.params[1], spec.params[2]};
}

struct HnParams {
  long x, m, y;
  long a() const { return x; }
  long b() const { return m + y; }
  long c() const { return x + m - y; }
  long t() const { return x - y; }  // peak rhombus side
};

HnParams hn_params(const RegionSpec& spec) {
  if (spec.params.size() != 3) throw std::domain_error("hn expects 3 parameters x,m,y");
  HnParams p{spec.params[0], spec.params[1], spec.params[2]};
  require(p.m >= 1, "hn: m >= 1 required");
  require(p.y >= 0, "hn: y >= 0 required");
  require(p.x >= p.y, "hn: x >= y required (partial staircase columns x-1..x-y)");
  return p;
}

struct RdentParams {
  long n, m;
  std::vector<long> l;
};

RdentParams rdent_params(const RegionSpec& spec) {
  if (spec.params.size() < 3)
    throw std::domain_error("r_dented expects parameters n,m,l_1..l_n");
  RdentParams p;
  p.n = spec.params[0];
  p.m = spec.params[1];
  p.l.assign(spec.params.begin() + 2, spec.params.end());
  require(p.n >= 1, "r_dented: n >= 1 required");
  require(static_cast<long>(p.l.size()) == p.n, "r_dented: l must have length n");
  require(p.l[0] >= 0 && p.l[0] <= p.m, "r_dented: 0 <= l_1 <= m required");
  for (size_t i = 1; i < p.l.size(); ++i)
    require(p.l[i - 1] > p.l[i], "r_dented: l must be strictly decreasing");
  require(p.l.back() + p.n - 1 >= 0, "r_dented: l_n + n - 1 >= 0 required");
  return p;
}

CellSet hn_cells(const HnParams& p) {
  const long a = p.a(), b = p.b(), c = p.c(), t = p.t();
  CellSet s = hexagon_cells(a, b, c);
  // partial staircases: columns (a-1,...,a-y) against the NW edge and
  // (c-1,...,c-m) against the NE edge, both ending at size x-y
  remove_staircase(s, corner(4, a, b, c), /*limit_u=*/p.y - 1, {}, /*p=*/a);
  remove_staircase(s, corner(3, a, b, c), {}, /*limit_v=*/p.m - 1, /*p=*/c);
  // peak triangle (apex on the top edge) and its upside-down mirror image: the
  // rhombus has a unique tiling, so it is removed outright
  const long x_apex = -c + p.y;
  const long y0 = a + c - t;  // mirror line
  std::vector<TriCell> rhombus;
  for (long v = 0; v < t; ++v) {
    const long Y = a + c - 1 - v;
    for (long B = 0; B <= v; ++B) {
      rhombus.push_back({x_apex + B, Y, Orient::up});
      rhombus.push_back({x_apex + B + Y - y0, 2 * y0 - Y - 1, Orient::down});
    }
    for (long B = 0; B < v; ++B) {
      rhombus.push_back({x_apex + B, Y, Orient::down});
      rhombus.push_back({x_apex + B + Y + 1 - y0, 2 * y0 - Y - 1, Orient::up});
    }
  }
  for (const TriCell& cc : rhombus) {
    require(s.count(cc) != 0, "hn(" + std::to_string(p.x) + "," + std::to_string(p.m) +
                                  "," + std::to_string(p.y) +
                                  "): peak rhombus does not fit the region");
    s.erase(cc);
  }
  return s;
}

CellSet rdent_cells(const RdentParams& p) {
  const long l1 = p.l.front(), ln = p.l.back();
  CellSet s;
  // hexagon with sides n, l_1, m-l_1, l_1-l_n+1, l_n+n-1, m-l_n-n+1
  // (anticlockwise from the southwestern side)
  for (long y = 0; y <= p.m - ln; ++y)
    for (long x = -p.n; x < l1; ++x) {
      if (y + 1 <= p.m - ln + 1 && x + y >= 0 && x + y + 1 <= p.m)
        s.insert({x, y, Orient::up});
      if (y + 1 <= p.m - ln + 1 && x + y + 1 >= 0 && x + y + 2 <= p.m)
        s.insert({x, y, Orient::down});
    }
  // triangular dents along the northeastern side at the segments whose
  // midpoints are not among (l_j, m-l_j)
  std::set<long> keep(p.l.begin(), p.l.end());
  for (long k = 0; k <= l1 - ln; ++k)
    if (!keep.count(l1 - k)) s.erase({l1 - k - 1, p.m - l1 + k, Orient::up});
  return s;
}

Region to_region(CellSet&& s) {
  return Region(std::vector<TriCell>(s.begin(), s.end()));
}

}  // namespace

LozengePos LozengePos::make(LozOrient k, long x, long y) {
  LozengePos p;
  p.up_cell = {x, y, Orient::up};
  switch (k) {
    case LozOrient::lean_right: p.down_cell = {x, y, Orient::down}; break;
    case LozOrient::lean_left: p.down_cell = {x - 1, y, Orient::down}; break;
    case LozOrient::upright: p.down_cell = {x, y - 1, Orient::down}; break;
  }
  return p;
}

LozOrient LozengePos::orient() const {
  if (down_cell.x == up_cell.x && down_cell.y == up_cell.y) return LozOrient::lean_right;
  if (down_cell.x == up_cell.x - 1 && down_cell.y == up_cell.y) return LozOrient::lean_left;
  if (down_cell.x == up_cell.x && down_cell.y == up_cell.y - 1) return LozOrient::upright;
  throw std::invalid_argument("cells are not an edge-adjacent up/down pair");
}

Region::Region(std::vector<TriCell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Region::contains(const TriCell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::string Region::to_text() const {
  std::ostringstream os;
  for (const TriCell& c : cells_)
    os << c.x << ' ' << c.y << ' ' << (c.o == Orient::up ? 'u' : 'd') << '\n';
  return os.str();
}

Region Region::from_text(const std::string& text) {
  std::istringstream is(text);
  std::vector<TriCell> cells;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    long x, y;
    char o;
    if (!(ls >> x >> y >> o) || (o != 'u' && o != 'd'))
      throw std::invalid_argument("bad region line: " + line);
    cells.push_back({x, y, o == 'u' ? Orient::up : Orient::down});
  }
  return Region(std::move(cells));
}

bool MarkSet::contains(const LozengePos& p) const {
  return std::binary_search(marks.begin(), marks.end(), p);
}

std::string MarkSet::to_text() const {
  std::ostringstream os;
  for (const LozengePos& p : marks) {
    char k = p.orient() == LozOrient::lean_right ? 'r'
             : p.orient() == LozOrient::lean_left ? 'l'
                                                  : 'v';
    os << p.x() << ' ' << p.y() << ' ' << k << '\n';
  }
  return os.str();
}

namespace kinds {

std::string name(RegionKind k) {
  switch (k) {
    case RegionKind::hex: return "hex";
    case RegionKind::h1: return "h1";
    case RegionKind::hd: return "hd";
    case RegionKind::ha: return "ha";
    case RegionKind::ho: return "ho";
    case RegionKind::h3: return "h3";
    case RegionKind::hn: return "hn";
    case RegionKind::r_dented: return "r_dented";
  }
  return "?";
}

std::optional<RegionKind> from_name(const std::string& s) {
  static const std::map<std::string, RegionKind> m = {
      {"hex", RegionKind::hex}, {"h1", RegionKind::h1}, {"hd", RegionKind::hd},
      {"ha", RegionKind::ha},   {"ho", RegionKind::ho}, {"h3", RegionKind::h3},
      {"hn", RegionKind::hn},   {"r_dented", RegionKind::r_dented}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

}  // namespace kinds

RegionSpec RegionSpec::parse(const std::string& kind, const std::vector<long>& params) {
  auto k = kinds::from_name(kind);
  if (!k) throw std::domain_error("unknown region kind '" + kind + "'");
  RegionSpec s{*k, params};
  build_region(s);  // validate
  return s;
}

std::string RegionSpec::kind_name() const { return kinds::name(kind); }

std::string RegionSpec::to_string() const {
  std::string s = kind_name() + "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

Region build_region(const RegionSpec& spec) {
  switch (spec.kind) {
    case RegionKind::hex: {
      auto [a, b, c] = abc(spec);
      require(a >= 0 && b >= 0 && c >= 0, "hex: a,b,c >= 0 required");
      return to_region(hexagon_cells(a, b, c));
    }
    case RegionKind::h1: {
      auto [a, b, c] = abc(spec);
      require(a >= 0 && b >= 0 && c >= 0, "h1: a,b,c >= 0 required");
      require(a <= b, "h1: a <= b required");
      CellSet s = hexagon_cells(a, b, c);
      remove_staircase(s, corner(4, a, b, c));
      return to_region(std::move(s));
    }
    case RegionKind::hd: {
      auto [a, b, c] = abc(spec);
      require(a >= 1 && b >= 1 && c >= 1, "hd: a,b,c >= 1 required");
      CellSet s = hexagon_cells(a, b, c);
      remove_staircase(s, corner(4, a, b, c));
      remove_staircase(s, corner(2, a, b, c));
      return to_region(std::move(s));
    }
    case RegionKind::ha: {
      auto [a, b, c] = abc(spec);
      require(a >= 1 && b >= 1 && c >= 1, "ha: a,b,c >= 1 required");
      require(b >= a + c - 1,
              "ha: b >= a+c-1 required (otherwise the staircases interfere and "
              "the leftover region has no lozenge tilings)");
      CellSet s = hexagon_cells(a, b, c);
      remove_staircase(s, corner(3, a, b, c));
      remove_staircase(s, corner(4, a, b, c));
      return to_region(std::move(s));
    }
    case RegionKind::ho: {
      auto [a, b, c] = abc(spec);
      require(a >= 0 && b >= 0 && c >= 0, "ho: a,b,c >= 0 required");
      CellSet s = hexagon_cells(a, b, c);
      remove_staircase(s, corner(5, a, b, c));
      remove_staircase(s, corner(2, a, b, c));
      return to_region(std::move(s));
    }
    case RegionKind::h3: {
      auto [a, b, c] = abc(spec);
      require(a >= 1 && b >= 1 && c >= 1, "h3: a,b,c >= 1 required");
      CellSet s = hexagon_cells(a, b, c);
      remove_staircase(s, corner(0, a, b, c));
      remove_staircase(s, corner(2, a, b, c));
      remove_staircase(s, corner(4, a, b, c));
      return to_region(std::move(s));
    }
    case RegionKind::hn: return to_region(hn_cells(hn_params(spec)));
    case RegionKind::r_dented: return to_region(rdent_cells(rdent_params(spec)));
  }
  throw std::logic_error("bad region kind");
}

MarkSet marks(const RegionSpec& spec, const std::set<Cut>& cuts) {
  const bool nw = cuts.count(Cut::northwestern) != 0;
  const bool east = cuts.count(Cut::eastern) != 0;
  std::vector<LozengePos> out;
  switch (spec.kind) {
    case RegionKind::h1: {
      auto [a, b, c] = abc(spec);
      require(!east, "h1 has only the northwestern cut");
      if (nw) {
        Corner co = corner(4, a, b, c);
        co.p = a;  // the a tile positions of the L* weighting
        auto v = staircase_marks(co);
        out.insert(out.end(), v.begin(), v.end());
      }
      break;
    }
    case RegionKind::hd: {
      auto [a, b, c] = abc(spec);
      if (nw) {
        auto v = staircase_marks(corner(4, a, b, c));
        out.insert(out.end(), v.begin(), v.end());
      }
      if (east) {
        auto v = staircase_marks(corner(2, a, b, c));
        out.insert(out.end(), v.begin(), v.end());
      }
      break;
    }
    case RegionKind::ha: {
      auto [a, b, c] = abc(spec);
      if (nw) {
        auto v = staircase_marks(corner(4, a, b, c));
        out.insert(out.end(), v.begin(), v.end());
      }
      if (east) {  // the northeastern zig-zag
        auto v = staircase_marks(corner(3, a, b, c));
        out.insert(out.end(), v.begin(), v.end());
      }
      break;
    }
    case RegionKind::hn: {
      HnParams p = hn_params(spec);
      const long a = p.a(), b = p.b(), c = p.c();
      if (nw) {
        Corner co = corner(4, a, b, c);
        co.p = a;
        auto v = staircase_marks(co, /*restrict_u=*/p.y - 1);
        out.insert(out.end(), v.begin(), v.end());
      }
      if (east) {  // the northeastern zig-zag
        Corner co = corner(3, a, b, c);
        co.p = c;
        auto v = staircase_marks(co, {}, /*restrict_v=*/p.m - 1);
        out.insert(out.end(), v.begin(), v.end());
      }
      break;
    }
    default:
      throw std::domain_error(spec.kind_name() +
                              " has no weighted zig-zag cut (marks are defined "
                              "for h1, hd, ha, hn)");
  }
  Region r = build_region(spec);
  for (const LozengePos& p : out)
    if (!r.contains(p))
      throw std::logic_error("mark outside region for " + spec.to_string());
  std::sort(out.begin(), out.end());
  return MarkSet{std::move(out)};
}

Balance balance(const Region& r) {
  Balance b;
  for (const TriCell& c : r.cells())
    (c.o == Orient::up ? b.up_count : b.down_count)++;
  return b;
}

Region translated(const Region& r, long dx, long dy) {
  std::vector<TriCell> out;
  out.reserve(r.size());
  for (const TriCell& c : r.cells()) out.push_back({c.x + dx, c.y + dy, c.o});
  return Region(std::move(out));
}

Region rotated60(const Region& r) {
  // 60 deg ccw about the origin: up(x,y) -> down(-y-1, x+y), down(x,y) -> up(-y-1, x+y+1)
  std::vector<TriCell> out;
  out.reserve(r.size());
  for (const TriCell& c : r.cells()) {
    if (c.o == Orient::up)
      out.push_back({-c.y - 1, c.x + c.y, Orient::down});
    else
      out.push_back({-c.y - 1, c.x + c.y + 1, Orient::up});
  }
  return Region(std::move(out));
}

Region mirrored(const Region& r) {
  // reflect across the vertical axis: up(x,y) -> up(-x-y-1, y), down(x,y) -> down(-x-y-2, y)
  std::vector<TriCell> out;
  out.reserve(r.size());
  for (const TriCell& c : r.cells()) {
    if (c.o == Orient::up)
      out.push_back({-c.x - c.y - 1, c.y, Orient::up});
    else
      out.push_back({-c.x - c.y - 2, c.y, Orient::down});
  }
  return Region(std::move(out));
}

Region normalized(const Region& r) {
  if (r.empty()) return r;
  long mx = r.cells()[0].x, my = r.cells()[0].y;
  for (const TriCell& c : r.cells()) {
    mx = std::min(mx, c.x);
    my = std::min(my, c.y);
  }
  return translated(r, -mx, -my);
}

bool congruent_direct(const Region& r, const Region& s) {
  Region t = r;
  Region sn = normalized(s);
  for (int k = 0; k < 6; ++k) {
    if (normalized(t) == sn) return true;
    t = rotated60(t);
  }
  return false;
}

bool congruent_mirror(const Region& r, const Region& s) {
  return congruent_direct(mirrored(r), s);
}

bool congruent(const Region& r, const Region& s) {
  return congruent_direct(r, s) || congruent_mirror(r, s);
}

}  // namespace hexcount

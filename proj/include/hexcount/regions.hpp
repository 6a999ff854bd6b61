#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hexcount {

// Triangular lattice in oblique coordinates: lattice point (x,y) sits at
// Cartesian (x + y/2, y*sqrt(3)/2).
//   up(x,y):   vertices (x,y), (x+1,y), (x,y+1)   -- apex above the base
//   down(x,y): vertices (x+1,y), (x,y+1), (x+1,y+1) -- its edge-mirror
// The SVG emitter uses the same embedding.
enum class Orient : std::uint8_t { up, down };

struct TriCell {
  long x = 0;
  long y = 0;
  Orient o = Orient::up;
  auto operator<=>(const TriCell&) const = default;
};

// The three lozenge orientations, named by their anchor cell pairs:
//   lean_right: up(x,y) + down(x,y)    (horizontal top/bottom edges, leans right)
//   lean_left:  up(x,y) + down(x-1,y)  (horizontal top/bottom edges, leans left)
//   upright:    up(x,y) + down(x,y-1)  (long diagonal vertical)
enum class LozOrient : std::uint8_t { lean_right, lean_left, upright };

struct LozengePos {
  TriCell up_cell;
  TriCell down_cell;

  static LozengePos make(LozOrient k, long x, long y);
  LozOrient orient() const;
  // anchor = coordinates of the up cell
  long x() const { return up_cell.x; }
  long y() const { return up_cell.y; }
  auto operator<=>(const LozengePos&) const = default;
};

class Region {
 public:
  Region() = default;
  explicit Region(std::vector<TriCell> cells);

  const std::vector<TriCell>& cells() const { return cells_; }
  bool contains(const TriCell& c) const;
  bool contains(const LozengePos& p) const {
    return contains(p.up_cell) && contains(p.down_cell);
  }
  bool empty() const { return cells_.empty(); }
  size_t size() const { return cells_.size(); }

  bool operator==(const Region&) const = default;

  std::string to_text() const;  // one cell per line: "x y u|d"
  static Region from_text(const std::string& text);

 private:
  std::vector<TriCell> cells_;  // sorted, unique
};

struct MarkSet {
  std::vector<LozengePos> marks;  // sorted, each weighted 1/2
  bool contains(const LozengePos& p) const;
  std::string to_text() const;
};

enum class RegionKind : std::uint8_t { hex, h1, hd, ha, ho, h3, hn, r_dented };

// The two weighted cuts: "northwestern" is the superscript cut of L*, and
// "eastern" is the subscript cut of L_* (the eastern corner for H_d, the
// northeastern zig-zag for H_a and H_n).
enum class Cut : std::uint8_t { northwestern, eastern };

struct RegionSpec {
  RegionKind kind = RegionKind::hex;
  // hex/h1/hd/ha/ho/h3: {a,b,c}; hn: {x,m,y}; r_dented: {n,m,l_1..l_n}
  std::vector<long> params;

  static RegionSpec parse(const std::string& kind, const std::vector<long>& params);
  std::string kind_name() const;
  std::string to_string() const;
};

Region build_region(const RegionSpec& spec);
MarkSet marks(const RegionSpec& spec, const std::set<Cut>& cuts);

struct Balance {
  long up_count = 0;
  long down_count = 0;
  bool operator==(const Balance&) const = default;
};
Balance balance(const Region& r);

// Lattice congruences (used by symmetry tests and the verifier).
Region translated(const Region& r, long dx, long dy);
Region rotated60(const Region& r);   // 60 deg counterclockwise about the origin
Region mirrored(const Region& r);    // reflection across the vertical axis
Region normalized(const Region& r);  // translated so min coords are 0

// Whether some rotation (congruent_direct), some reflection composed with a
// rotation (congruent_mirror), or either (congruent) carries r onto s up to
// translation.
bool congruent_direct(const Region& r, const Region& s);
bool congruent_mirror(const Region& r, const Region& s);
bool congruent(const Region& r, const Region& s);

namespace kinds {
std::string name(RegionKind k);
std::optional<RegionKind> from_name(const std::string& s);
}  // namespace kinds

}  // namespace hexcount

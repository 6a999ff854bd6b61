#include "hexcount/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "hexcount/enumerator.hpp"
#include "hexcount/exact.hpp"
#include "hexcount/formulas.hpp"
#include "hexcount/lgv.hpp"
#include "hexcount/regions.hpp"

namespace hexcount {

namespace {

struct Routes {
  std::vector<std::pair<std::string, std::string>> values;  // route name -> value
  void add(const std::string& name, const ExactRational& v) {
    values.emplace_back(name, to_string(v));
  }
  void add(const std::string& name, const ExactInt& v) {
    values.emplace_back(name, to_string(v));
  }
  bool agree() const {
    for (size_t i = 1; i < values.size(); ++i)
      if (values[i].second != values[0].second) return false;
    return true;
  }
  std::string describe() const {
    std::string s;
    for (const auto& [n, v] : values) s += " " + n + "=" + v;
    return s;
  }
};

PointOutcome outcome(const std::string& point, const Routes& r) {
  PointOutcome o;
  o.point = point;
  o.status = r.agree() ? PointStatus::pass : PointStatus::fail;
  if (o.status == PointStatus::fail) o.detail = r.describe();
  return o;
}

PointOutcome skip(const std::string& point, const std::string& why) {
  return {point, PointStatus::skip, why};
}

std::string pt3(const char* names, long a, long b, long c) {
  std::ostringstream os;
  os << "(" << names << ")=(" << a << "," << b << "," << c << ")";
  return os.str();
}

Region region_of(RegionKind k, std::vector<long> params) {
  return build_region(RegionSpec{k, std::move(params)});
}

MarkSet marks_of(RegionKind k, std::vector<long> params, bool nw, bool east) {
  std::set<Cut> cuts;
  if (nw) cuts.insert(Cut::northwestern);
  if (east) cuts.insert(Cut::eastern);
  return marks(RegionSpec{k, std::move(params)}, cuts);
}

GridRange range_of(const Grid& g, const std::string& name, GridRange dflt) {
  auto it = g.ranges.find(name);
  return it == g.ranges.end() ? dflt : it->second;
}

using PointFn = std::function<PointOutcome()>;

// ---- per-suite grid point evaluations ----

void grid3(const Grid& g, const char* n1, GridRange d1, const char* n2, GridRange d2,
           const char* n3, GridRange d3,
           const std::function<PointOutcome(long, long, long)>& f,
           std::vector<PointFn>& out) {
  GridRange r1 = range_of(g, n1, d1), r2 = range_of(g, n2, d2), r3 = range_of(g, n3, d3);
  for (long a = r1.lo; a <= r1.hi; ++a)
    for (long b = r2.lo; b <= r2.hi; ++b)
      for (long c = r3.lo; c <= r3.hi; ++c)
        out.push_back([=] { return f(a, b, c); });
}

std::vector<PointFn> points_for(Suite s, const Grid& g) {
  std::vector<PointFn> pts;
  switch (s) {
    case Suite::thm11:
      grid3(g, "a", {1, 6}, "b", {1, 6}, "c", {1, 6},
            [](long a, long b, long c) {
              std::string p = pt3("a,b,c", a, b, c);
              if (!(b <= a && a <= c)) return skip(p, "requires b<=a<=c");
              Routes r;
              r.add("formula", f_thm11(a, b, c));
              r.add("lgv", det_exact(matrix_hd(a, b, c)));
              r.add("oracle", count_tilings(region_of(RegionKind::hd, {a, b, c})));
              return outcome(p, r);
            },
            pts);
      break;
    case Suite::thm12:
      grid3(g, "a", {1, 6}, "b", {1, 6}, "c", {1, 6},
            [](long a, long b, long c) {
              std::string p = pt3("a,b,c", a, b, c);
              if (!(b <= a && a <= c)) return skip(p, "requires b<=a<=c");
              Routes r;
              r.add("formula", f_thm12(a, b, c));
              r.add("lgv", ExactRational(det_exact(matrix_hd_weighted(a, b, c)) *
                                         hd_weighted_scale(a, b, c)));
              r.add("oracle",
                    count_weighted(region_of(RegionKind::hd, {a, b, c}),
                                   marks_of(RegionKind::hd, {a, b, c}, true, true)));
              return outcome(p, r);
            },
            pts);
      break;
    case Suite::prop13:
      grid3(g, "a", {1, 6}, "b", {1, 6}, "c", {1, 6},
            [](long a, long b, long c) {
              std::string p = pt3("a,b,c", a, b, c);
              if (!(a <= b && b <= c)) return skip(p, "requires a<=b<=c");
              Routes r;
              r.add("formula", f_prop13(a, b, c));
              r.add("lgv", det_exact(matrix_prop13(a, b, c)));
              r.add("oracle",
                    count_weighted(region_of(RegionKind::hd, {a, b, c}),
                                   marks_of(RegionKind::hd, {a, b, c}, true, false)));
              return outcome(p, r);
            },
            pts);
      break;
    case Suite::thm14:
      grid3(g, "a", {1, 5}, "b", {1, 5}, "c", {0, 5},
            [](long a, long b, long c) {
              std::string p = pt3("a,b,c", a, b, c);
              if (!(a <= b)) return skip(p, "requires a<=b");
              Routes r;
              r.add("formula", f_thm14(a, b, c));
              r.add("oracle",
                    count_weighted(region_of(RegionKind::h1, {a, b, c}),
                                   marks_of(RegionKind::h1, {a, b, c}, true, false)));
              return outcome(p, r);
            },
            pts);
      break;
    case Suite::thm16:
      grid3(g, "a", {1, 4}, "b", {1, 8}, "c", {1, 4},
            [](long a, long b, long c) {
              std::string p = pt3("a,b,c", a, b, c);
              if (!(b >= a + c - 1)) return skip(p, "requires b>=a+c-1");
              Routes r;
              r.add("formula", f_thm16(a, b, c));
              r.add("lgv", det_exact(matrix_A(static_cast<int>(a), b - a, c)));
              r.add("oracle", count_tilings(region_of(RegionKind::ha, {a, b, c})));
              return outcome(p, r);
            },
            pts);
      break;
    case Suite::thm17:
      grid3(g, "a", {1, 4}, "b", {1, 8}, "c", {1, 4},
            [](long a, long b, long c) {
              std::string p = pt3("a,b,c", a, b, c);
              if (!(b >= a + c - 1)) return skip(p, "requires b>=a+c-1");
              Routes r;
              r.add("formula", f_thm17(a, b, c));
              r.add("lgv", ExactRational(det_exact(matrix_ha_weighted(a, b, c)) *
                                         ha_weighted_scale(a, b, c)));
              r.add("oracle",
                    count_weighted(region_of(RegionKind::ha, {a, b, c}),
                                   marks_of(RegionKind::ha, {a, b, c}, true, true)));
              return outcome(p, r);
            },
            pts);
      break;
    case Suite::prop18:
      grid3(g, "a", {1, 4}, "b", {1, 6}, "_", {0, 0},
            [](long a, long b, long) {
              std::ostringstream os;
              os << "(a,b)=(" << a << "," << b << ")";
              Routes r;
              r.add("formula", f_prop18(a, b));
              r.add("oracle", count_tilings(region_of(RegionKind::ho, {a, b, a})));
              return outcome(os.str(), r);
            },
            pts);
      break;
    case Suite::lemma22: {
      GridRange rn = range_of(g, "n", {1, 4}), rm = range_of(g, "m", {1, 8});
      std::mt19937 rng(g.seed);
      for (long n = rn.lo; n <= rn.hi; ++n)
        for (long m = rm.lo; m <= rm.hi; ++m)
          for (int t = 0; t < g.samples; ++t) {
            // random strictly decreasing l with l_1 in [0,m], l_n >= 1-n
            std::vector<long> pool;
            for (long v = 1 - n; v <= m; ++v) pool.push_back(v);
            if (static_cast<long>(pool.size()) < n) continue;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<long> l(pool.begin(), pool.begin() + n);
            std::sort(l.rbegin(), l.rend());
            if (l[0] < 0) l[0] = 0;  // ensure l_1 >= 0
            std::sort(l.rbegin(), l.rend());
            l.erase(std::unique(l.begin(), l.end()), l.end());
            if (static_cast<long>(l.size()) != n) continue;
            pts.push_back([n, m, l] {
              std::ostringstream os;
              os << "(n,m,l)=(" << n << "," << m << ",(";
              for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
              os << "))";
              std::vector<long> params = {n, m};
              params.insert(params.end(), l.begin(), l.end());
              Routes r;
              r.add("formula", f_lemma22(n, m, l));
              r.add("lgv", det_exact(matrix_R(static_cast<int>(n), m, l)));
              r.add("oracle", count_tilings(region_of(RegionKind::r_dented, params)));
              return outcome(os.str(), r);
            });
          }
      break;
    }
    case Suite::det_K:
      grid3(g, "n", {1, 5}, "x", {0, 6}, "y", {0, 6},
            [](long n, long x, long y) {
              std::string p = pt3("n,x,y", n, x, y);
              if (x + y == 0) return skip(p, "requires x+y>0");
              Routes r;
              r.add("det", det_exact(matrix_K(static_cast<int>(n), x, y)));
              r.add("product", product_K(n, x, y));
              return outcome(p, r);
            },
            pts);
      break;
    case Suite::det_A:
      grid3(g, "n", {1, 5}, "x", {0, 6}, "y", {0, 6},
            [](long n, long x, long y) {
              std::string p = pt3("n,x,y", n, x, y);
              Routes r;
              r.add("det", det_exact(matrix_A(static_cast<int>(n), x, y)));
              r.add("product", product_P(n, x, y));
              return outcome(p, r);
            },
            pts);
      break;
    case Suite::conjA1:
    case Suite::conjA2: {
      const bool weighted = s == Suite::conjA2;
      const long max_size = g.max_size > 0 ? g.max_size : 5;
      GridRange rx = range_of(g, "x", {0, 7});
      GridRange rm = range_of(g, "m", {1, max_size});
      GridRange ry = range_of(g, "y", {0, max_size});
      for (long x = rx.lo; x <= rx.hi; ++x)
        for (long m = rm.lo; m <= rm.hi; ++m)
          for (long y = ry.lo; y <= ry.hi; ++y) {
            if (m + y > max_size) continue;
            pts.push_back([x, m, y, weighted] {
              std::string p = pt3("x,m,y", x, m, y);
              if (x < y) return skip(p, "not constructible (x<y)");
              Routes r;
              if (weighted) {
                r.add("formula", f_conjA2(x, m, y));
                r.add("lgv", ExactRational(det_exact(matrix_hn_weighted(m, y, x)) *
                                           hn_weighted_scale(m, y, x)));
                r.add("oracle",
                      count_weighted(region_of(RegionKind::hn, {x, m, y}),
                                     marks_of(RegionKind::hn, {x, m, y}, true, true)));
              } else {
                r.add("formula", f_conjA1(x, m, y));
                r.add("lgv", det_exact(matrix_hn(m, y, x)));
                r.add("oracle", count_tilings(region_of(RegionKind::hn, {x, m, y})));
              }
              return outcome(p, r);
            });
          }
      break;
    }
    case Suite::factorization_2_5:
      grid3(g, "a", {1, 4}, "b", {1, 4}, "c", {1, 3},
            [](long a, long b, long c) {
              std::string p = pt3("a,b,c", a, b, c);
              if (!(a <= b)) return skip(p, "requires a<=b");
              // U = H_1(a,b,c) glued with its mirror image is R(2c, a+b, l)
              std::vector<long> l;
              for (long v = b; v > b - c; --v) l.push_back(v);
              for (long v = a - c; v > a - 2 * c; --v) l.push_back(v);
              Routes r;
              r.add("lemma22", ExactRational(f_lemma22(2 * c, a + b, l)));
              ExactRational rhs(proctor(a, b - 1, c));
              rhs *= f_thm14(a, b, c);
              rhs *= ExactInt(1) << a;
              r.add("2^a*proctor*thm14", rhs);
              return outcome(p, r);
            },
            pts);
      break;
    case Suite::mirror_hd:
      grid3(g, "a", {1, 4}, "b", {1, 4}, "c", {1, 4},
            [](long a, long b, long c) {
              std::string p = pt3("a,b,c", a, b, c);
              Region lhs = region_of(RegionKind::hd, {a, b, c});
              Region rhs = region_of(RegionKind::hd, {a, c, b});
              Routes r;
              r.add("count(a,b,c)", count_tilings(lhs));
              r.add("count(a,c,b)", count_tilings(rhs));
              PointOutcome o = outcome(p, r);
              if (!congruent_mirror(lhs, rhs)) {
                o.status = PointStatus::fail;
                o.detail += " mirror image of hd(a,b,c) is not congruent to hd(a,c,b)";
              }
              return o;
            },
            pts);
      break;
  }
  return pts;
}

}  // namespace

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::thm11: return "thm11";
    case Suite::thm12: return "thm12";
    case Suite::prop13: return "prop13";
    case Suite::thm14: return "thm14";
    case Suite::thm16: return "thm16";
    case Suite::thm17: return "thm17";
    case Suite::prop18: return "prop18";
    case Suite::lemma22: return "lemma22";
    case Suite::det_K: return "det_K";
    case Suite::det_A: return "det_A";
    case Suite::conjA1: return "conjA1";
    case Suite::conjA2: return "conjA2";
    case Suite::factorization_2_5: return "factorization_2_5";
    case Suite::mirror_hd: return "mirror_hd";
  }
  return "?";
}

std::optional<Suite> suite_from_name(const std::string& s) {
  for (Suite x : all_suites())
    if (suite_name(x) == s) return x;
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  return {Suite::thm11,  Suite::thm12,  Suite::prop13, Suite::thm14,
          Suite::thm16,  Suite::thm17,  Suite::prop18, Suite::lemma22,
          Suite::det_K,  Suite::det_A,  Suite::conjA1, Suite::conjA2,
          Suite::factorization_2_5, Suite::mirror_hd};
}

VerifyReport run_suite(Suite s, const Grid& grid, int jobs) {
  std::vector<PointFn> pts = points_for(s, grid);
  std::vector<PointOutcome> outcomes(pts.size());
  auto eval = [&](size_t i) {
    try {
      outcomes[i] = pts[i]();
    } catch (const std::exception& e) {
      outcomes[i] = PointOutcome{"point " + std::to_string(i), PointStatus::fail,
                                 std::string("exception: ") + e.what()};
    }
  };
  if (jobs <= 1) {
    for (size_t i = 0; i < pts.size(); ++i) eval(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::future<void>> workers;
    for (int j = 0; j < jobs; ++j)
      workers.push_back(std::async(std::launch::async, [&] {
        for (size_t i = next.fetch_add(1); i < pts.size(); i = next.fetch_add(1)) eval(i);
      }));
    for (auto& w : workers) w.get();
  }
  VerifyReport rep;
  rep.suite = suite_name(s);
  rep.outcomes = std::move(outcomes);
  for (const PointOutcome& o : rep.outcomes) {
    switch (o.status) {
      case PointStatus::pass: rep.passed++; break;
      case PointStatus::skip: rep.skipped++; break;
      case PointStatus::fail:
        rep.failed++;
        if (!rep.first_counterexample) rep.first_counterexample = o;
        break;
    }
  }
  return rep;
}

}  // namespace hexcount

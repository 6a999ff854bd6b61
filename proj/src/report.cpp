#include "hexcount/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "hexcount/enumerator.hpp"
#include "hexcount/formulas.hpp"
#include "hexcount/lgv.hpp"

namespace hexcount {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void unsupported(const RegionSpec& spec, CountMethod m, WeightedMode w,
                              const std::string& why) {
  throw std::domain_error("count " + spec.to_string() + " --method " + method_name(m) +
                          " --weighted " + weighted_name(w) + ": " + why);
}

MarkSet marks_for(const RegionSpec& spec, WeightedMode w) {
  std::set<Cut> cuts;
  if (w == WeightedMode::star || w == WeightedMode::both) cuts.insert(Cut::northwestern);
  if (w == WeightedMode::substar || w == WeightedMode::both) cuts.insert(Cut::eastern);
  return marks(spec, cuts);
}

ExactRational count_oracle(const RegionSpec& spec, WeightedMode w) {
  Region r = build_region(spec);
  if (w == WeightedMode::plain) return ExactRational(count_tilings(r));
  return count_weighted(r, marks_for(spec, w));
}

ExactRational count_lgv(const RegionSpec& spec, CountMethod m, WeightedMode w) {
  const std::vector<long>& p = spec.params;
  switch (spec.kind) {
    case RegionKind::hd: {
      long a = p[0], b = p[1], c = p[2];
      if (w == WeightedMode::plain) return det_exact(matrix_hd(a, b, c));
      if (w == WeightedMode::star) return det_exact(matrix_prop13(a, b, c));
      if (w == WeightedMode::both)
        return det_exact(matrix_hd_weighted(a, b, c)) * hd_weighted_scale(a, b, c);
      unsupported(spec, m, w, "hd has no determinant route for L_*");
    }
    case RegionKind::ha: {
      long a = p[0], b = p[1], c = p[2];
      if (w == WeightedMode::plain) {
        if (b < a + c - 1) unsupported(spec, m, w, "requires b >= a+c-1");
        return det_exact(matrix_A(static_cast<int>(a), b - a, c));
      }
      if (w == WeightedMode::both)
        return det_exact(matrix_ha_weighted(a, b, c)) * ha_weighted_scale(a, b, c);
      unsupported(spec, m, w, "only plain and both-cut weightings have determinants");
    }
    case RegionKind::hn: {
      long x = p[0], mm = p[1], y = p[2];
      if (w == WeightedMode::plain) return det_exact(matrix_hn(mm, y, x));
      if (w == WeightedMode::both)
        return det_exact(matrix_hn_weighted(mm, y, x)) * hn_weighted_scale(mm, y, x);
      unsupported(spec, m, w, "only plain and both-cut weightings have determinants");
    }
    case RegionKind::r_dented: {
      if (w != WeightedMode::plain)
        unsupported(spec, m, w, "r_dented has no weighted enumerator");
      long n = p[0], mm = p[1];
      std::vector<long> l(p.begin() + 2, p.end());
      return det_exact(matrix_R(static_cast<int>(n), mm, l));
    }
    default:
      unsupported(spec, m, w, "this region family has no LGV path model");
  }
}

ExactRational count_formula(const RegionSpec& spec, CountMethod m, WeightedMode w) {
  const std::vector<long>& p = spec.params;
  switch (spec.kind) {
    case RegionKind::hex:
      if (w != WeightedMode::plain) unsupported(spec, m, w, "hex has no weighted cut");
      return ExactRational(macmahon(p[0], p[1], p[2]));
    case RegionKind::h1:
      if (w == WeightedMode::plain) return ExactRational(proctor(p[0], p[1], p[2]));
      if (w == WeightedMode::star) return f_thm14(p[0], p[1], p[2]);
      unsupported(spec, m, w, "h1 has only the northwestern cut");
    case RegionKind::hd:
      if (w == WeightedMode::plain) return ExactRational(f_thm11(p[0], p[1], p[2]));
      if (w == WeightedMode::star) return f_prop13(p[0], p[1], p[2]);
      if (w == WeightedMode::both) return f_thm12(p[0], p[1], p[2]);
      unsupported(spec, m, w, "hd has no product formula for L_*");
    case RegionKind::ha:
      if (w == WeightedMode::plain) return ExactRational(f_thm16(p[0], p[1], p[2]));
      if (w == WeightedMode::both) return f_thm17(p[0], p[1], p[2]);
      unsupported(spec, m, w, "only plain and both-cut weightings have formulas");
    case RegionKind::ho:
      if (w != WeightedMode::plain) unsupported(spec, m, w, "ho has no weighted cut");
      if (p[0] != p[2])
        unsupported(spec, m, w, "the product formula covers ho(a,b,a) only");
      return ExactRational(f_prop18(p[0], p[1]));
    case RegionKind::h3:
      unsupported(spec, m, w, "no formula is known for h3 (open problem)");
    case RegionKind::hn:
      if (w == WeightedMode::plain) return f_conjA1(p[0], p[1], p[2]);
      if (w == WeightedMode::both) return f_conjA2(p[0], p[1], p[2]);
      unsupported(spec, m, w, "only plain and both-cut weightings are conjectured");
    case RegionKind::r_dented: {
      if (w != WeightedMode::plain)
        unsupported(spec, m, w, "r_dented has no weighted enumerator");
      std::vector<long> l(p.begin() + 2, p.end());
      return ExactRational(f_lemma22(p[0], p[1], l));
    }
  }
  unsupported(spec, m, w, "unhandled region kind");
}

}  // namespace

std::string method_name(CountMethod m) {
  switch (m) {
    case CountMethod::oracle: return "oracle";
    case CountMethod::lgv: return "lgv";
    case CountMethod::formula: return "formula";
  }
  return "?";
}

std::string weighted_name(WeightedMode w) {
  switch (w) {
    case WeightedMode::plain: return "plain";
    case WeightedMode::star: return "star";
    case WeightedMode::substar: return "substar";
    case WeightedMode::both: return "both";
  }
  return "?";
}

ExactRational compute_count(const RegionSpec& spec, CountMethod method, WeightedMode mode) {
  switch (method) {
    case CountMethod::oracle: return count_oracle(spec, mode);
    case CountMethod::lgv: return count_lgv(spec, method, mode);
    case CountMethod::formula: return count_formula(spec, method, mode);
  }
  throw std::logic_error("bad method");
}

CountReport run_count(const RegionSpec& spec, CountMethod method, WeightedMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  ExactRational v = compute_count(spec, method, mode);
  auto t1 = std::chrono::steady_clock::now();
  CountReport rep;
  rep.region = spec.kind_name();
  rep.params = spec.params;
  rep.method = method_name(method);
  rep.weighted = weighted_name(mode);
  rep.value = to_string(v);
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

std::string CountReport::to_json() const {
  ordered_json j;
  j["region"] = region;
  j["params"] = params;
  j["method"] = method;
  j["weighted"] = weighted;
  j["value"] = value;
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

CountReport CountReport::from_json(const std::string& json) {
  ordered_json j = ordered_json::parse(json);
  CountReport r;
  r.region = j.at("region").get<std::string>();
  r.params = j.at("params").get<std::vector<long>>();
  r.method = j.at("method").get<std::string>();
  r.weighted = j.at("weighted").get<std::string>();
  r.value = j.at("value").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<long>();
  return r;
}

}  // namespace hexcount

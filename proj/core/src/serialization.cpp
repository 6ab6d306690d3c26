#include "fansub/serialization.hpp"

#include <cstdio>

namespace fansub {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void to_json(json& j, const RiemannData& d) {
  j = json{{"rho_minus", d.rho_minus},
           {"rho_plus", d.rho_plus},
           {"v_minus", d.v_minus},
           {"v_plus", d.v_plus},
           {"gamma", d.gamma}};
}

void from_json(const json& j, RiemannData& d) {
  j.at("rho_minus").get_to(d.rho_minus);
  j.at("rho_plus").get_to(d.rho_plus);
  j.at("v_minus").get_to(d.v_minus);
  j.at("v_plus").get_to(d.v_plus);
  j.at("gamma").get_to(d.gamma);
}

namespace {

std::string wave_kind_name(WaveKind k) {
  switch (k) {
    case WaveKind::Shock: return "shock";
    case WaveKind::Rarefaction: return "rarefaction";
    default: return "none";
  }
}

WaveKind wave_kind_from(const std::string& s) {
  if (s == "shock") return WaveKind::Shock;
  if (s == "rarefaction") return WaveKind::Rarefaction;
  return WaveKind::None;
}

}  // namespace

void to_json(json& j, const Wave& w) {
  j = json{{"kind", wave_kind_name(w.kind)}};
  if (w.kind == WaveKind::Shock) {
    j["speed"] = w.speed_lo;
  } else if (w.kind == WaveKind::Rarefaction) {
    j["speed_lo"] = w.speed_lo;
    j["speed_hi"] = w.speed_hi;
  }
}

void from_json(const json& j, Wave& w) {
  w.kind = wave_kind_from(j.at("kind").get<std::string>());
  if (w.kind == WaveKind::Shock) {
    w.speed_lo = w.speed_hi = j.at("speed").get<double>();
  } else if (w.kind == WaveKind::Rarefaction) {
    j.at("speed_lo").get_to(w.speed_lo);
    j.at("speed_hi").get_to(w.speed_hi);
  }
}

void to_json(json& j, const WaveFan& fan) {
  j = json{{"pattern", label_of(fan).str()},
           {"left", fan.left},
           {"right", fan.right},
           {"contact", json{{"present", fan.contact}}},
           {"vacuum", fan.vacuum}};
  if (fan.contact) j["contact"]["speed"] = fan.contact_speed;
  if (fan.middle_density) {
    j["middle"] = json{{"rho", *fan.middle_density},
                       {"v2", *fan.middle_normal_velocity}};
  } else {
    j["middle"] = nullptr;
  }
}

void to_json(json& j, const FanPartition& p) {
  j = json{{"nu_minus", p.nu_minus}, {"nu_1", p.nu_1}, {"nu_plus", p.nu_plus}};
}

void from_json(const json& j, FanPartition& p) {
  j.at("nu_minus").get_to(p.nu_minus);
  j.at("nu_1").get_to(p.nu_1);
  j.at("nu_plus").get_to(p.nu_plus);
}

void to_json(json& j, const TracelessSym2& u) {
  j = json{{"g", u.g}, {"d", u.d}};
}

void from_json(const json& j, TracelessSym2& u) {
  j.at("g").get_to(u.g);
  j.at("d").get_to(u.d);
}

void to_json(json& j, const OuterState& s) {
  j = json{{"rho", s.rho}, {"v", s.v}};
}

void from_json(const json& j, OuterState& s) {
  j.at("rho").get_to(s.rho);
  j.at("v").get_to(s.v);
}

void to_json(json& j, const RegionState& s) {
  j = json{{"rho", s.rho}, {"v", s.v}, {"u", s.u}, {"C", s.C}};
}

void from_json(const json& j, RegionState& s) {
  j.at("rho").get_to(s.rho);
  j.at("v").get_to(s.v);
  j.at("u").get_to(s.u);
  j.at("C").get_to(s.C);
}

void to_json(json& j, const FanSubsolution& s) {
  j = json{{"partition", s.partition},
           {"outer_minus", s.outer_minus},
           {"outer_plus", s.outer_plus},
           {"region1", s.region1},
           {"region2", s.region2}};
}

void from_json(const json& j, FanSubsolution& s) {
  j.at("partition").get_to(s.partition);
  j.at("outer_minus").get_to(s.outer_minus);
  j.at("outer_plus").get_to(s.outer_plus);
  j.at("region1").get_to(s.region1);
  j.at("region2").get_to(s.region2);
}

void to_json(json& j, const AnsatzPoint& p) {
  j = json{{"rho1", p.rho1},         {"beta", p.beta}, {"nu_minus", p.nu_minus},
           {"nu_plus", p.nu_plus},   {"eps1", p.eps1}, {"eps2", p.eps2}};
}

void from_json(const json& j, AnsatzPoint& p) {
  j.at("rho1").get_to(p.rho1);
  j.at("beta").get_to(p.beta);
  j.at("nu_minus").get_to(p.nu_minus);
  j.at("nu_plus").get_to(p.nu_plus);
  j.at("eps1").get_to(p.eps1);
  j.at("eps2").get_to(p.eps2);
}

void to_json(json& j, const Certificate& c) {
  j = json{{"rh_residuals", c.rh_residuals},
           {"subsolution_margins", c.subsolution_margins},
           {"admissibility_margins", c.admissibility_margins},
           {"ordering_ok", c.ordering_ok},
           {"eigen_margins", c.eigen_margins},
           {"verdict", c.pass ? "pass" : "fail"}};
}

void from_json(const json& j, Certificate& c) {
  j.at("rh_residuals").get_to(c.rh_residuals);
  j.at("subsolution_margins").get_to(c.subsolution_margins);
  j.at("admissibility_margins").get_to(c.admissibility_margins);
  j.at("ordering_ok").get_to(c.ordering_ok);
  j.at("eigen_margins").get_to(c.eigen_margins);
  c.pass = j.at("verdict").get<std::string>() == "pass";
}

void to_json(json& j, const SearchDiagnostic& d) {
  j = json{{"eps1", d.eps1}, {"stage", d.stage}, {"message", d.message}};
}

void to_json(json& j, const SearchHit& h) {
  j = json{{"ansatz", h.point},
           {"subsolution", h.subsolution},
           {"certificate", h.certificate}};
}

void to_json(json& j, const SearchResult& r) {
  j = json{{"subsolutions", r.hits}, {"diagnostics", r.diagnostics}};
}

void to_json(json& j, const FeasibilitySample& s) {
  j = json{{"v_gap", s.v_gap}, {"feasible", s.feasible}};
}

void to_json(json& j, const ThresholdReport& r) {
  j = json{{"T", r.T},
           {"bracket", json::array({r.bracket_lo, r.bracket_hi})},
           {"samples", r.samples}};
  if (r.vbar_estimate)
    j["Vbar_estimate"] = *r.vbar_estimate;
  else
    j["Vbar_estimate"] = nullptr;
}

}  // namespace fansub

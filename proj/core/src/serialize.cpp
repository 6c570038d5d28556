#include "fockflow/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace fockflow {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string format_complex(cplx z) {
  std::string out = fmt_double(z.real());
  out += (std::signbit(z.imag()) ? "-" : "+");
  out += fmt_double(std::abs(z.imag()));
  out += "i";
  return out;
}

cplx parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw domain_error("parse_complex: empty string");

  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (has_i) s.pop_back();

  // split at the last +/- that is not an exponent sign and not leading
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }

  auto to_double = [](const std::string& part, double fallback_unit) -> double {
    if (part.empty() || part == "+") return fallback_unit;
    if (part == "-") return -fallback_unit;
    std::size_t used = 0;
    double val;
    try {
      val = std::stod(part, &used);
    } catch (const std::exception&) {
      throw domain_error("parse_complex: bad number '" + part + "'");
    }
    if (used != part.size()) throw domain_error("parse_complex: bad number '" + part + "'");
    return val;
  };

  if (!has_i) {
    if (split != std::string::npos)
      throw domain_error("parse_complex: expected 'a+bi' form in '" + text + "'");
    return {to_double(s, 1.0), 0.0};
  }
  if (split == std::string::npos) return {0.0, to_double(s, 1.0)};  // pure imaginary
  return {to_double(s.substr(0, split), 1.0), to_double(s.substr(split), 1.0)};
}

json state_to_json(const StateSpec& s) {
  json j;
  std::visit(
      [&j](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, FockState>) {
          j = {{"kind", "fock"}, {"n", st.n}};
        } else if constexpr (std::is_same_v<T, CoherentState>) {
          j = {{"kind", "coherent"}, {"alpha", format_complex(st.alpha)}};
        } else if constexpr (std::is_same_v<T, DisplacedCoherentState>) {
          j = {{"kind", "displaced"}, {"n", st.n}, {"alpha", format_complex(st.alpha)}};
        } else if constexpr (std::is_same_v<T, CatState>) {
          j = {{"kind", "cat"},
               {"parity", st.parity == Parity::even ? "even" : "odd"},
               {"alpha", format_complex(st.alpha)}};
        } else if constexpr (std::is_same_v<T, QutritState>) {
          j = {{"kind", "qutrit"}, {"sector", st.sector}, {"alpha", format_complex(st.alpha)}};
        } else if constexpr (std::is_same_v<T, QCoherentState>) {
          j = {{"kind", "qcoherent"}, {"q", st.q}, {"alpha", format_complex(st.alpha)}};
        } else {
          json arr = json::array();
          for (cplx c : st.c) arr.push_back(format_complex(c));
          j = {{"kind", "coefficients"}, {"c", arr}};
        }
      },
      s.variant());
  return j;
}

StateSpec state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw domain_error("state: JSON object with a \"kind\" field expected");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "fock") return StateSpec::fock(j.at("n").get<int>());
    if (kind == "coherent")
      return StateSpec::coherent(parse_complex(j.at("alpha").get<std::string>()));
    if (kind == "displaced")
      return StateSpec::displaced(j.at("n").get<int>(),
                                  parse_complex(j.at("alpha").get<std::string>()));
    if (kind == "cat") {
      const std::string parity = j.at("parity").get<std::string>();
      if (parity != "even" && parity != "odd")
        throw domain_error("state: cat parity must be \"even\" or \"odd\"");
      return StateSpec::cat(parity == "even" ? Parity::even : Parity::odd,
                            parse_complex(j.at("alpha").get<std::string>()));
    }
    if (kind == "qutrit")
      return StateSpec::qutrit(j.at("sector").get<int>(),
                               parse_complex(j.at("alpha").get<std::string>()));
    if (kind == "qcoherent")
      return StateSpec::qcoherent(j.at("q").get<double>(),
                                  parse_complex(j.at("alpha").get<std::string>()));
    if (kind == "coefficients") {
      std::vector<cplx> c;
      for (const auto& item : j.at("c")) c.push_back(parse_complex(item.get<std::string>()));
      return StateSpec::coefficients(std::move(c));
    }
  } catch (const json::exception& e) {
    throw domain_error(std::string("state: ") + e.what());
  }
  throw domain_error("state: unknown kind '" + kind + "'");
}

std::string format_rep(const FlowRep& rep) {
  switch (rep.kind) {
    case FlowRep::Kind::vortex:
      return "vortex:" + fmt_double(rep.gamma);
    case FlowRep::Kind::source:
      return "source:" + fmt_double(rep.n_strength);
    case FlowRep::Kind::mixed:
      return "mixed:" + fmt_double(rep.n_strength) + ":" + fmt_double(rep.gamma);
  }
  throw domain_error("format_rep: unknown kind");
}

FlowRep parse_rep(const std::string& text) {
  std::istringstream in(text);
  std::string kind;
  std::getline(in, kind, ':');
  auto next_value = [&in, &text]() {
    std::string part;
    if (!std::getline(in, part, ':'))
      throw domain_error("rep: expected vortex:<Gamma> | source:<N> | mixed:<N>:<Gamma>, got '" +
                         text + "'");
    try {
      std::size_t used = 0;
      const double v = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      return v;
    } catch (const std::exception&) {
      throw domain_error("rep: bad strength value '" + part + "'");
    }
  };
  if (kind == "vortex") return FlowRep::vortex(next_value());
  if (kind == "source") return FlowRep::source(next_value());
  if (kind == "mixed") {
    const double n = next_value();
    return FlowRep::mixed(n, next_value());
  }
  throw domain_error("rep: unknown kind '" + kind + "'");
}

std::string singularity_kind_name(SingularityKind k) {
  switch (k) {
    case SingularityKind::vortex:
      return "vortex";
    case SingularityKind::anti_vortex:
      return "anti_vortex";
    case SingularityKind::source:
      return "source";
    case SingularityKind::sink:
      return "sink";
  }
  throw domain_error("singularity_kind_name: unknown kind");
}

namespace {

json domain_to_json(const DomainSpec& d) {
  return std::visit(
      [](const auto& dom) -> json {
        using T = std::decay_t<decltype(dom)>;
        if constexpr (std::is_same_v<T, WedgeDomain>) {
          return {{"type", "wedge"}, {"n", dom.n}};
        } else if constexpr (std::is_same_v<T, StripDomain>) {
          return {{"type", "strip"}, {"h", dom.h}};
        } else if constexpr (std::is_same_v<T, ObliqueStripDomain>) {
          return {{"type", "oblique_strip"},
                  {"h", dom.h},
                  {"beta", dom.beta},
                  {"offset", format_complex(dom.offset)}};
        } else {
          return {{"type", "geometric"}, {"q", dom.q}, {"alpha", format_complex(dom.alpha)}};
        }
      },
      d);
}

}  // namespace

json image_system_to_json(const ImageSystem& sys) {
  json singularities = json::array();
  for (const Singularity& s : sys.singularities) {
    singularities.push_back({{"re", s.position.real()},
                             {"im", s.position.imag()},
                             {"kind", singularity_kind_name(s.kind)},
                             {"strength", s.strength},
                             {"multiplicity", s.multiplicity}});
  }
  return {{"domain", domain_to_json(sys.domain)},
          {"truncation_index", sys.truncation_index},
          {"truncated", sys.truncated},
          {"singularities", singularities}};
}

json report_to_json(const VerificationReport& r) {
  return {{"name", r.name},
          {"max_error", r.max_error},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"sample_count", r.sample_count}};
}

json reports_to_json(const std::vector<VerificationReport>& rs) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr;
}

json field_grid_to_json(const FieldGrid& g) {
  json j = {{"bounds", {{"xmin", g.xmin}, {"xmax", g.xmax}, {"ymin", g.ymin}, {"ymax", g.ymax}}},
            {"nx", g.nx},
            {"ny", g.ny}};
  j["phi"] = g.phi;
  j["psi"] = g.psi;
  j["u"] = g.u;
  j["v"] = g.v;
  j["mask"] = json::array();
  for (auto m : g.mask) j["mask"].push_back(static_cast<int>(m));
  return j;
}

std::string field_grid_to_csv(const FieldGrid& g) {
  std::string out = "x,y,phi,psi,u,v,masked\n";
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      const std::size_t idx = static_cast<std::size_t>(iy) * g.nx + ix;
      out += fmt_double(g.x_at(ix));
      out += ',';
      out += fmt_double(g.y_at(iy));
      out += ',';
      if (g.mask[idx]) {
        out += ",,,,1\n";
      } else {
        out += fmt_double(g.phi[idx]);
        out += ',';
        out += fmt_double(g.psi[idx]);
        out += ',';
        out += fmt_double(g.u[idx]);
        out += ',';
        out += fmt_double(g.v[idx]);
        out += ",0\n";
      }
    }
  }
  return out;
}

}  // namespace fockflow

// JSON / CSV codecs for the published schemas: complex "a+bi" strings,
// StateSpec, FlowRep flags, ImageSystem, VerificationReport, FieldGrid.
#ifndef FOCKFLOW_SERIALIZE_HPP
#define FOCKFLOW_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "fockflow/types.hpp"

namespace fockflow {

using json = nlohmann::json;

// Complex numbers travel as strings "a+bi" / "a-bi" (also accepts "a", "bi", "i").
std::string format_complex(cplx z);
cplx parse_complex(const std::string& text);

// StateSpec <-> {"kind": "...", ...}
json state_to_json(const StateSpec& s);
StateSpec state_from_json(const json& j);

// FlowRep <-> "vortex:<Gamma>" | "source:<N>" | "mixed:<N>:<Gamma>"
std::string format_rep(const FlowRep& rep);
FlowRep parse_rep(const std::string& text);

json image_system_to_json(const ImageSystem& sys);
json report_to_json(const VerificationReport& r);
json reports_to_json(const std::vector<VerificationReport>& rs);

json field_grid_to_json(const FieldGrid& g);
// CSV columns, fixed order: x,y,phi,psi,u,v,masked. Masked rows leave the
// field columns empty. Rows iterate ix fastest (x inner, y outer).
std::string field_grid_to_csv(const FieldGrid& g);

std::string singularity_kind_name(SingularityKind k);

}  // namespace fockflow

#endif  // FOCKFLOW_SERIALIZE_HPP

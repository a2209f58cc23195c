#pragma once

#include <string>

#include "json.hpp"

#include "dblab/db_space.hpp"
#include "dblab/examples.hpp"
#include "dblab/majorization.hpp"
#include "dblab/model_space.hpp"
#include "dblab/verify.hpp"

namespace dblab::io {

using json = nlohmann::json;

// Complex numbers are [re, im]. Parsing also accepts a bare number and the
// strings "3", "-1.5+2i", "0+1i", "i".
json to_json(cplx z);
cplx complex_from_json(const json& j);
cplx parse_complex(const std::string& s);

/// Finite doubles as numbers; infinities and NaN as the strings "inf", "-inf", "nan".
json number(double v);
double number_from_json(const json& j);

json to_json(const FunctionExpr& f);
FunctionExpr function_from_json(const json& j);

json to_json(const ZeroSequence& z);
ZeroSequence zeros_from_json(const json& j);
json to_json(const PoleSequence& p);
PoleSequence poles_from_json(const json& j);

/// {"E": ..., "declared_order", "declared_exp_type", "zeros"?, "real_zeros"?},
/// an example id string ("pw2" is the Paley-Wiener space of type 2), or
/// {"example": id, "params"?: {...}, "part"?: "space" | "subspace"}.
json to_json(const DbSpace& s);
DbSpace space_from_json(const json& j);

json to_json(const SampledDomain& d);
SampledDomain domain_from_json(const json& j);

json to_json(const Majorant& m);
Majorant majorant_from_json(const json& j);

/// {"inner": {"kind": "ratio" | "exp" | "blaschke" | "constant" | "general", ...}}
json to_json(const InnerFunction& t);
InnerFunction inner_from_json(const json& j);

json to_json(const MeanTypeEstimate& m);
json to_json(const MembershipReport& r);
json to_json(const MajorizationReport& r, bool with_rows = false);
json to_json(const AdmissibilityReport& r);
json to_json(const HbReport& r);
json to_json(const HerglotzData& d);
json to_json(const WeakTypeReport& r);
json to_json(const A60Scan& s);
json to_json(const DecompositionExperiment& e);
json to_json(const VerifyReport& r);
json to_json(const ExampleInstance& ex);

/// Every tunable default with the library version.
json defaults_table();

}  // namespace dblab::io

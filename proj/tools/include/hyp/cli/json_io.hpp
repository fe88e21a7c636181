#pragma once

// JSON encodings shared by the command-line tool and its tests. Rationals are
// "num/den" strings; field elements are integers over prime fields and
// little-endian coefficient arrays otherwise.

#include <optional>
#include <string>

#include <json.hpp>

#include "hyp/bound.hpp"
#include "hyp/groups.hpp"
#include "hyp/nondegen.hpp"
#include "hyp/polytope.hpp"
#include "hyp/sums.hpp"
#include "hyp/system.hpp"

namespace hyp::cli {

using json = nlohmann::json;

/// Parses a system file. Coefficients are read in `field_override` when
/// given, else in the file's own field. Throws Error(Validation).
RepSystem system_from_json(const json& j, std::optional<FieldSpec> field_override = std::nullopt);
json system_to_json(const RepSystem& sys);

/// Entry of a coefficient or witness matrix.
ff::Elem elem_from_json(const ff::Field& f, const json& j);
json elem_to_json(const ff::Field& f, ff::Elem x);
FqMatrix matrix_from_json(const ff::Field& f, const json& j);
json matrix_to_json(const ff::Field& f, const FqMatrix& m);

json rational_vector(const RatVec& v);
json polytope_to_json(const RationalPolytope& p);
json bound_to_json(const RepSystem& sys, const BoundResult& b);
json point_to_json(const ff::Field& f, const groups::GroupPoint& x);
/// `base` is the field the coefficients live in; witnesses are written in
/// its degree-`extension` extension.
json status_to_json(const ff::Field& base, const nondegen::NondegenStatus& st);
json counts_to_json(const ff::Field& f, const ff::CharCounts& c);
json report_to_json(const ff::Field& f, const sums::VerifyReport& r);

/// Shortest round-trip decimal, always with a fraction or exponent ("2.0").
std::string decimal(double x);

}  // namespace hyp::cli

#pragma once

#include <json.hpp>

#include "pgeigen/eigenbasis.hpp"
#include "pgeigen/verify.hpp"

namespace pgeigen {

/// Canonical "num/den" form, denominator always present and positive.
std::string rat_string(const Rat& r);

// All encoders emit keys in documented order (ordered_json), so serialized
// output is byte-stable.

/// Array of p-1 rational strings: the power-basis coordinates.
nlohmann::ordered_json cyclo_json(const CycloNum& c);

/// {"p": p, "coeffs": [coordinates of the phi^0, phi^1, ... coefficients]}.
nlohmann::ordered_json scalar_json(const PhiPoly& s);

/// {"n": ambient, "k": dim, "cols": [[packed values by row] per column]}.
nlohmann::ordered_json subspace_json(const Subspace& x);

/// {"level": n, "a": [packed values]}.
nlohmann::ordered_json character_json(const Character& chi);

/// {"n": ambient, "entries": [{"subspace": ..., "scalar": ...}]} in canonical
/// subspace order.
nlohmann::ordered_json vector_json(const PosetVector& v);

/// Array of "0" / "1" / {"chi": ...} steps.
nlohmann::ordered_json index_json(const IndexSeq& alpha);

/// {"index": ..., "weight": k, "vector": ...}.
nlohmann::ordered_json basis_record_json(const BasisEntry& e);

/// {"p": p, "m": m, "modulus": [c_0..c_m]}.
nlohmann::ordered_json field_json(const Field& f);

/// {"suite", "q", "n", "phi_mode", "checks", "failures", "seconds"} with
/// "skipped"/"reason" appended only for skipped suites.
nlohmann::ordered_json report_json(const SuiteReport& r, bool with_timings = false);

}  // namespace pgeigen

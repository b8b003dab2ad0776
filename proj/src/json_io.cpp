#include "pgeigen/json_io.hpp"

namespace pgeigen {

using ojson = nlohmann::ordered_json;

std::string rat_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

ojson cyclo_json(const CycloNum& c) {
  ojson arr = ojson::array();
  for (const auto& x : c.coords()) arr.push_back(rat_string(x));
  return arr;
}

ojson scalar_json(const PhiPoly& s) {
  ojson coeffs = ojson::array();
  for (int i = 0; i <= s.degree(); ++i) coeffs.push_back(cyclo_json(s.coeff(i)));
  return ojson{{"p", s.conductor()}, {"coeffs", coeffs}};
}

ojson subspace_json(const Subspace& x) {
  ojson cols = ojson::array();
  for (const auto& c : x.cols()) cols.push_back(c);
  return ojson{{"n", x.ambient()}, {"k", x.dim()}, {"cols", cols}};
}

ojson character_json(const Character& chi) {
  return ojson{{"level", chi.level}, {"a", chi.a}};
}

ojson vector_json(const PosetVector& v) {
  ojson entries = ojson::array();
  for (const auto& [x, c] : v.entries())
    entries.push_back(ojson{{"subspace", subspace_json(x)}, {"scalar", scalar_json(c)}});
  return ojson{{"n", v.ambient()}, {"entries", entries}};
}

ojson index_json(const IndexSeq& alpha) {
  ojson arr = ojson::array();
  for (const auto& e : alpha.entries) {
    switch (e.kind) {
      case IndexEntry::Kind::zero: arr.push_back("0"); break;
      case IndexEntry::Kind::one: arr.push_back("1"); break;
      case IndexEntry::Kind::chi: arr.push_back(ojson{{"chi", character_json(e.character)}}); break;
    }
  }
  return arr;
}

ojson basis_record_json(const BasisEntry& e) {
  return ojson{{"index", index_json(e.index)},
               {"weight", e.index.weight()},
               {"vector", vector_json(e.vec)}};
}

ojson field_json(const Field& f) {
  return ojson{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

ojson report_json(const SuiteReport& r, bool with_timings) {
  ojson failures = ojson::array();
  for (const auto& fl : r.failures)
    failures.push_back(ojson{{"check", fl.check}, {"witness", fl.witness}});
  ojson out{{"suite", r.suite},   {"q", r.q},
            {"n", r.n},           {"phi_mode", r.phi_mode},
            {"checks", r.checks}, {"failures", failures},
            {"seconds", with_timings ? r.seconds : 0.0}};
  if (r.skipped) {
    out["skipped"] = true;
    out["reason"] = r.skip_reason;
  }
  return out;
}

}  // namespace pgeigen

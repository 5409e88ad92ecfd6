#pragma once

#include "sipoly/classify.hpp"
#include "sipoly/hurwitz.hpp"
#include "sipoly/laurent.hpp"
#include "sipoly/roots.hpp"
#include "sipoly/stieltjes.hpp"

#include <json.hpp>

namespace sipoly {

nlohmann::json to_json(const Rational& x);
nlohmann::json to_json(const std::vector<Rational>& xs);
nlohmann::json to_json(const IsolatingInterval& iv);
nlohmann::json to_json(const HurwitzMatrix& m);  // row-major rational strings
nlohmann::json to_json(const LaurentCoeffs& s);
nlohmann::json to_json(const HankelData& data);  // {"s", "D", "Dhat"}
nlohmann::json to_json(const ContinuedFraction& cf);
nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const CriteriaSet& c);
nlohmann::json to_json(const SiVerdict& v);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const ClassificationReport& report);

/// Payload for the `minors` command: Hurwitz minors plus all three Hankel
/// determinant families, with degeneracy notes.
nlohmann::json minors_payload(const Polynomial& p);

}  // namespace sipoly

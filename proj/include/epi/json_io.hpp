#pragma once

#include <json.hpp>

#include "epi/closed_form.hpp"
#include "epi/factorizer.hpp"
#include "epi/verify.hpp"

namespace epi {

/// {"scheme","input_length","factors","last_complete","cut_by_input_end"}
nlohmann::json to_json(const Factorization& f);
/// Inverse of to_json; throws PreconditionError on malformed input.
Factorization factorization_from_json(const nlohmann::json& j);

/// Factorization JSON tagged with "source":"closed_form"; for the c scheme it
/// also carries the transient and its indices i, j, k0, m and the z-from-c onset.
nlohmann::json closed_form_json(const Factorization& f, const CTransient* transient);

nlohmann::json to_json(const verify::PropertyResult& r);

}  // namespace epi

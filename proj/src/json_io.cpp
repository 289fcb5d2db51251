#include "epi/json_io.hpp"

#include "epi/errors.hpp"

namespace epi {

nlohmann::json to_json(const Factorization& f) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& w : f.factors) factors.push_back(w.text());
  return {{"scheme", std::string(scheme_name(f.scheme))},
          {"input_length", f.input_length()},
          {"factors", std::move(factors)},
          {"last_complete", f.last_complete},
          {"cut_by_input_end", f.cut_by_input_end}};
}

Factorization factorization_from_json(const nlohmann::json& j) {
  try {
    Factorization f;
    const auto scheme = j.at("scheme").get<std::string>();
    if (scheme != "z" && scheme != "c") throw PreconditionError("unknown scheme \"" + scheme + "\"");
    f.scheme = scheme == "z" ? Scheme::Z : Scheme::C;
    for (const auto& w : j.at("factors")) f.factors.push_back(Word::from_text(w.get<std::string>()));
    f.last_complete = j.at("last_complete").get<bool>();
    f.cut_by_input_end = j.at("cut_by_input_end").get<bool>();
    if (j.at("input_length").get<std::size_t>() != f.input_length()) {
      throw PreconditionError("input_length does not match the factors");
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed factorization JSON: ") + e.what());
  }
}

nlohmann::json closed_form_json(const Factorization& f, const CTransient* transient) {
  nlohmann::json out = to_json(f);
  out["source"] = "closed_form";
  if (transient) {
    nlohmann::json initial = nlohmann::json::array();
    for (const auto& w : transient->initial_factors) initial.push_back(w.text());
    out["transient"] = std::move(initial);
    out["i"] = transient->i;
    out["j"] = transient->j;
    out["k0"] = transient->k0;
    out["m"] = transient->m;
    out["onset"] = z_from_c_onset(*transient);
  }
  return out;
}

nlohmann::json to_json(const verify::PropertyResult& r) {
  return {{"property", r.name},
          {"passed", r.passed()},
          {"checks", r.checks},
          {"failures", r.failure_count},
          {"details", r.failures}};
}

}  // namespace epi

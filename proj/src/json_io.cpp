#include "hdepth/json_io.hpp"

#include "hdepth/errors.hpp"

namespace hdepth {

using nlohmann::json;

json toJson(const HilbertFunction& h) {
  json numerator = json::object();
  for (const auto& [e, c] : h.numerator().terms()) numerator[std::to_string(e)] = c.get_str();
  return {{"numerator", numerator}, {"denomPower", h.denomPower()}};
}

HilbertFunction hilbertFromJson(const json& doc) {
  auto bad = [](const std::string& why) { return ParseError(0, {"function JSON"}, why); };
  if (!doc.is_object() || !doc.contains("numerator") || !doc.contains("denomPower")) {
    throw bad("expected an object with 'numerator' and 'denomPower'");
  }
  const json& num = doc.at("numerator");
  const json& p = doc.at("denomPower");
  if (!num.is_object()) throw bad("'numerator' must be an object");
  if (!p.is_number_integer() || p.get<long>() < 0) throw bad("'denomPower' must be a nonnegative integer");
  LaurentPolynomial::Terms terms;
  for (const auto& [key, value] : num.items()) {
    Integer exponent;
    Integer coeff;
    try {
      exponent = parseInteger(key);
      if (value.is_string()) coeff = parseInteger(value.get<std::string>());
      else if (value.is_number_integer()) coeff = Integer(value.get<long>());
      else throw bad("coefficient of t^" + key + " must be a decimal string");
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw bad(e.what());
    }
    if (!exponent.fits_slong_p()) throw bad("exponent " + key + " out of range");
    terms.emplace(exponent.get_si(), coeff);
  }
  return HilbertFunction::fromRational(LaurentPolynomial(std::move(terms)), p.get<int>());
}

json toJson(const BetaTable& table) {
  json values = json::array();
  for (const auto& v : table.values) values.push_back(v.get_str());
  return {{"d", table.d}, {"startK", table.startK}, {"values", values}};
}

json toJson(const QDepthResult& result) {
  json out = {{"qdepth", result.qdepth},
              {"lowerBound", result.lowerBound},
              {"upperBound", result.upperBound},
              {"certificate", toJson(result.certificate)},
              {"refutation", nullptr}};
  if (result.refutation) {
    out["refutation"] = {{"d", result.refutation->d}, {"k", result.refutation->k}, {"beta", result.refutation->beta.get_str()}};
  }
  return out;
}

json toJson(const VerificationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"case", v.descriptor}, {"expected", v.expected}, {"actual", v.actual}});
  }
  return {{"battery", report.batteryName},
          {"casesRun", report.casesRun},
          {"passed", report.passed()},
          {"violations", violations},
          {"notes", report.notes}};
}

}  // namespace hdepth

#include "pathforge/json.hpp"

#include "pathforge/error.hpp"

namespace pathforge::json {

Json path(PathView p) {
  Json j;
  j["word"] = to_string(p.steps);
  j["heights"] = std::vector<int>(p.heights.begin(), p.heights.end());
  j["dyck"] = classify(p).is_dyck;
  return j;
}

Json checkmarks(const CheckmarkPair& pair) {
  Json j;
  j["n"] = pair.n();
  j["nw"] = pair.nw().arrow_labels();
  j["sw"] = pair.sw().arrow_labels();
  return j;
}

CheckmarkPair checkmarks_from(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1) throw Error(ErrorCode::MalformedPair, "n must be at least 1");
    const auto nw = j.at("nw").get<std::vector<int>>();
    const auto sw = j.at("sw").get<std::vector<int>>();
    return CheckmarkPair(CheckmarkSeq::from_labels(n, nw), CheckmarkSeq::from_labels(n - 1, sw));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedPair, std::string("bad checkmark JSON: ") + e.what());
  }
}

Json monomial(const BiBandedMonomial& m) {
  Json j;
  j["exp_a"] = m.exp_a;
  j["exp_b"] = m.exp_b;
  return j;
}

Json monomial(const PeakMonomial& m) {
  Json j;
  j["exp_m"] = m.exp_m;
  return j;
}

Json coefficients(const WeightPolynomial& poly) {
  Json j = Json::object();
  for (const auto& [v, c] : poly.coefficients) j[std::to_string(v)] = c;
  return j;
}

Json polynomial(const WeightPolynomial& poly, Lattice lattice) {
  Json j;
  j["n"] = poly.n;
  j["lattice"] = to_string(lattice);
  j["scheme"] = to_string(poly.scheme);
  j["coeffs"] = coefficients(poly);
  return j;
}

Json mapping(PathView input, PathView image, bool inverse) {
  const PathView banded = inverse ? image : input;
  const PathView peaked = inverse ? input : image;
  Json j;
  j["input"] = to_string(input.steps);
  j["image"] = to_string(image.steps);
  j["bibanded"] = monomial(bibanded_monomial(banded));
  j["peaks"] = monomial(peak_monomial(peaked));
  j["dyck_in"] = classify(input).is_dyck;
  j["dyck_out"] = classify(image).is_dyck;
  return j;
}

Json report(const VerifyReport& r, bool with_timing) {
  Json j;
  j["n"] = r.n;
  j["lattice"] = to_string(r.lattice);
  j["scheme"] = to_string(r.scheme);
  j["path_count"] = r.path_count;
  j["match"] = r.match;
  if (r.error) {
    j["error"] = to_string(*r.error);
    j["message"] = r.error_message;
  } else {
    j["enumerated"] = coefficients(r.enumerated);
    j["closed_form"] = coefficients(r.closed_form);
    if (r.stated_form) {
      j["stated_form"] = coefficients(*r.stated_form);
      j["stated_match"] = *r.stated_form == r.enumerated;
    }
  }
  if (with_timing) {
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  }
  return j;
}

}  // namespace pathforge::json

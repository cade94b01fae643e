#include "knotsig/report.hpp"

#include <cstdio>
#include <sstream>

#include "knotsig/error.hpp"

namespace knotsig {

using nlohmann::json;

namespace {

json int_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer int_from(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

json rat_json(const Rational& q) { return q.get_str(); }

Rational rat_from(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
  Rational q(j.get<std::string>());
  q.canonicalize();
  return q;
}

json poly_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(int_json(c));
  return a;
}

IntPoly poly_from(const json& j) {
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(int_from(x));
  return IntPoly(std::move(c));
}

json witness_json(const UnitRootWitness& w) {
  return {{"factor", poly_json(w.factor)},
          {"interval", {rat_json(w.lo), rat_json(w.hi)}},
          {"multiplicity", w.multiplicity},
          {"angle_bounds", {rat_json(w.angle_lo), rat_json(w.angle_hi)}}};
}

UnitRootWitness witness_from(const json& j) {
  UnitRootWitness w;
  w.factor = poly_from(j.at("factor"));
  w.lo = rat_from(j.at("interval").at(0));
  w.hi = rat_from(j.at("interval").at(1));
  w.multiplicity = j.at("multiplicity").get<int>();
  w.angle_lo = rat_from(j.at("angle_bounds").at(0));
  w.angle_hi = rat_from(j.at("angle_bounds").at(1));
  return w;
}

json witnesses_json(const std::vector<UnitRootWitness>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(witness_json(w));
  return a;
}

std::vector<UnitRootWitness> witnesses_from(const json& j) {
  std::vector<UnitRootWitness> out;
  for (const auto& x : j) out.push_back(witness_from(x));
  return out;
}

json jump_json(const JumpReport& r) {
  return {{"root", witness_json(r.root)},
          {"left_value", r.left_value},
          {"right_value", r.right_value},
          {"jump", r.jump},
          {"odd_multiplicity", r.odd_multiplicity},
          {"transversal_simple", r.transversal_simple}};
}

JumpReport jump_from(const json& j) {
  JumpReport r;
  r.root = witness_from(j.at("root"));
  r.left_value = j.at("left_value").get<int>();
  r.right_value = j.at("right_value").get<int>();
  r.jump = j.at("jump").get<int>();
  r.odd_multiplicity = j.at("odd_multiplicity").get<bool>();
  r.transversal_simple = j.at("transversal_simple").get<bool>();
  return r;
}

json jumps_json(const std::vector<JumpReport>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(jump_json(r));
  return a;
}

std::vector<JumpReport> jumps_from(const json& j) {
  std::vector<JumpReport> out;
  for (const auto& x : j) out.push_back(jump_from(x));
  return out;
}

json profile_json(const SignatureProfile& p) {
  json samples = json::array();
  for (const auto& s : p.samples) {
    samples.push_back(s.is_minus_one() ? json("inf") : rat_json(*s.tan_half()));
  }
  return {{"jumps", witnesses_json(p.jumps)},
          {"plateaus", p.plateaus},
          {"samples", samples},
          {"value_at_minus_one", p.value_at_minus_one},
          {"half_angles", p.half_angles}};
}

SignatureProfile profile_from(const json& j) {
  SignatureProfile p;
  p.jumps = witnesses_from(j.at("jumps"));
  p.plateaus = j.at("plateaus").get<std::vector<int>>();
  for (const auto& s : j.at("samples")) {
    if (s == "inf") {
      p.samples.push_back(UnitCirclePoint::minus_one());
    } else {
      p.samples.push_back(UnitCirclePoint::from_tan_half(rat_from(s)));
    }
  }
  p.value_at_minus_one = j.at("value_at_minus_one").get<int>();
  p.half_angles = j.at("half_angles").get<bool>();
  return p;
}

std::string laurent_text(const SymmetricLaurentPoly& p) {
  std::string s = "[";
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].get_str();
  }
  return s + "]";
}

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::string decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Integer num = abs(q.get_num()) * scale;
  const Integer den = q.get_den();
  Integer r;
  const Integer twice = 2 * num + den;
  const Integer twice_den = 2 * den;
  mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), twice_den.get_mpz_t());
  std::string s = r.get_str();
  if (static_cast<int>(s.size()) <= digits) s = std::string(static_cast<std::size_t>(digits) + 1 - s.size(), '0') + s;
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (q < 0 && r != 0) s = "-" + s;
  return s;
}

json to_json(const Certificate& c) {
  json alex = json::array();
  if (c.verdict != Verdict::InvalidInput) {
    for (const auto& x : c.alexander.coefficients()) alex.push_back(int_json(x));
  }
  return {
      {"name", c.name},
      {"verdict", std::string(to_string(c.verdict))},
      {"error", c.error},
      {"genus", c.genus},
      {"alexander", {{"min_exponent", -c.alexander.half_degree()}, {"coefficients", alex}}},
      {"z_poly", poly_json(c.z_poly)},
      {"profile", profile_json(c.profile)},
      {"jump_reports", jumps_json(c.jump_reports)},
      {"simple_root_witnesses", witnesses_json(c.simple_root_witnesses)},
      {"jump_witnesses", jumps_json(c.jump_witnesses)},
      {"odd_multiplicity_witnesses", witnesses_json(c.odd_multiplicity_witnesses)},
      {"assumptions_echoed",
       {{"assume_irreducible", c.assumptions_echoed.assume_irreducible},
        {"assume_homology_sphere", c.assumptions_echoed.assume_homology_sphere},
        {"assume_m0_prime", c.assumptions_echoed.assume_m0_prime}}},
      {"conclusion_text", c.conclusion_text},
      {"consistency_checks",
       {{"det_sign_crosscheck", c.consistency_checks.det_sign_crosscheck},
        {"first_plateau_zero", c.consistency_checks.first_plateau_zero},
        {"parity", c.consistency_checks.parity},
        {"simple_root_jump", c.consistency_checks.simple_root_jump}}},
  };
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    c.name = j.at("name").get<std::string>();
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    c.error = j.at("error").get<std::string>();
    c.genus = j.at("genus").get<std::size_t>();
    const json& alex = j.at("alexander");
    const auto& coeffs = alex.at("coefficients");
    if (!coeffs.empty()) {
      const int d = -alex.at("min_exponent").get<int>();
      if (coeffs.size() != static_cast<std::size_t>(2 * d + 1)) {
        throw Error(ErrorCode::ParseError, "alexander coefficient count does not match min_exponent");
      }
      std::vector<Integer> half;
      for (int k = 0; k <= d; ++k) half.push_back(int_from(coeffs[static_cast<std::size_t>(d + k)]));
      c.alexander = SymmetricLaurentPoly::from_half(std::move(half));
    }
    c.z_poly = poly_from(j.at("z_poly"));
    c.profile = profile_from(j.at("profile"));
    c.jump_reports = jumps_from(j.at("jump_reports"));
    c.simple_root_witnesses = witnesses_from(j.at("simple_root_witnesses"));
    c.jump_witnesses = jumps_from(j.at("jump_witnesses"));
    c.odd_multiplicity_witnesses = witnesses_from(j.at("odd_multiplicity_witnesses"));
    const json& a = j.at("assumptions_echoed");
    c.assumptions_echoed.assume_irreducible = a.at("assume_irreducible").get<bool>();
    c.assumptions_echoed.assume_homology_sphere = a.at("assume_homology_sphere").get<bool>();
    c.assumptions_echoed.assume_m0_prime = a.at("assume_m0_prime").get<bool>();
    c.conclusion_text = j.at("conclusion_text").get<std::string>();
    const json& k = j.at("consistency_checks");
    c.consistency_checks.det_sign_crosscheck = k.at("det_sign_crosscheck").get<bool>();
    c.consistency_checks.first_plateau_zero = k.at("first_plateau_zero").get<bool>();
    c.consistency_checks.parity = k.at("parity").get<bool>();
    c.consistency_checks.simple_root_jump = k.at("simple_root_jump").get<bool>();
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json to_json(const BatchRecord& r) {
  if (r.certificate) return to_json(*r.certificate);
  return {{"name", r.name}, {"internal_error", r.internal_error.value_or("")}};
}

BatchRecord batch_record_from_json(const json& j) {
  BatchRecord r;
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "report entry is not an object");
  if (j.contains("internal_error")) {
    r.name = j.at("name").get<std::string>();
    r.internal_error = j.at("internal_error").get<std::string>();
    return r;
  }
  r.certificate = certificate_from_json(j);
  r.name = r.certificate->name;
  return r;
}

std::string emit_report(const std::vector<BatchRecord>& records, ReportFormat format) {
  if (format == ReportFormat::Json) {
    json a = json::array();
    for (const auto& r : records) a.push_back(to_json(r));
    return a.dump(2) + "\n";
  }

  struct Row {
    std::string name, genus, delta, roots, simple, jumps, sigma, verdict;
  };
  std::vector<Row> rows;
  rows.push_back({"name", "genus", "alexander", "unit_roots", "simple", "jumps", "sigma(-1)", "verdict"});
  for (const auto& r : records) {
    if (!r.certificate) {
      rows.push_back({r.name, "-", "-", "-", "-", "-", "-", "INTERNAL_ERROR"});
      continue;
    }
    const Certificate& c = *r.certificate;
    if (c.verdict == Verdict::InvalidInput) {
      rows.push_back({c.name, "-", "-", "-", "-", "-", "-", std::string(to_string(c.verdict))});
      continue;
    }
    std::string jumps = "[";
    for (std::size_t i = 0; i < c.jump_reports.size(); ++i) {
      if (i) jumps += ",";
      jumps += std::to_string(c.jump_reports[i].jump);
    }
    jumps += "]";
    rows.push_back({c.name, std::to_string(c.genus), laurent_text(c.alexander),
                    std::to_string(c.profile.jumps.size()), std::to_string(c.simple_root_witnesses.size()),
                    jumps, std::to_string(c.profile.value_at_minus_one), std::string(to_string(c.verdict))});
  }
  std::vector<std::size_t> width(8, 0);
  for (const auto& row : rows) {
    const std::string* cells[] = {&row.name, &row.genus, &row.delta, &row.roots,
                                  &row.simple, &row.jumps, &row.sigma, &row.verdict};
    for (std::size_t i = 0; i < 8; ++i) width[i] = std::max(width[i], cells[i]->size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    const std::string* cells[] = {&row.name, &row.genus, &row.delta, &row.roots,
                                  &row.simple, &row.jumps, &row.sigma, &row.verdict};
    std::string line;
    for (std::size_t i = 0; i < 8; ++i) {
      line += i + 1 < 8 ? pad(*cells[i], width[i]) + "  " : *cells[i];
    }
    out << line << "\n";
  }
  for (const auto& r : records) {
    if (r.certificate && r.certificate->verdict == Verdict::InvalidInput) {
      out << "# " << r.certificate->name << ": " << r.certificate->error << "\n";
    } else if (r.internal_error) {
      out << "# " << r.name << ": " << *r.internal_error << "\n";
    }
  }
  return out.str();
}

std::vector<BatchRecord> parse_report_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "report must be a JSON array");
  std::vector<BatchRecord> out;
  for (const auto& j : doc) out.push_back(batch_record_from_json(j));
  return out;
}

}  // namespace knotsig

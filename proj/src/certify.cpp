#include "knotsig/certify.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "knotsig/error.hpp"

namespace knotsig {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Certified: return "CERTIFIED";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
    case Verdict::InvalidInput: return "INVALID_INPUT";
  }
  return "INVALID_INPUT";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "CERTIFIED") return Verdict::Certified;
  if (s == "NOT_APPLICABLE") return Verdict::NotApplicable;
  if (s == "INVALID_INPUT") return Verdict::InvalidInput;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + std::string(s) + "'");
}

namespace {

ConsistencyChecks run_checks(const SeifertMatrix& v, const SignatureProfile& profile,
                             const std::vector<JumpReport>& reports) {
  ConsistencyChecks c;
  c.det_sign_crosscheck = det_sign_crosscheck(v, profile);
  c.first_plateau_zero = !profile.plateaus.empty() && profile.plateaus.front() == 0;
  c.parity = std::all_of(profile.plateaus.begin(), profile.plateaus.end(),
                         [](int s) { return s % 2 == 0; }) &&
             profile.value_at_minus_one % 2 == 0;
  c.simple_root_jump = true;
  for (const auto& r : reports) {
    if (std::abs(r.jump) > 2 * r.root.multiplicity) c.parity = false;
    if (r.odd_multiplicity && r.jump == 0) c.parity = false;
    if (r.root.simple() && std::abs(r.jump) != 2) c.simple_root_jump = false;
  }
  return c;
}

std::string conclusion(const Certificate& c) {
  std::string text;
  const bool simple = !c.simple_root_witnesses.empty();
  if (c.verdict == Verdict::Certified) {
    text =
        "Delta has a simple root on the unit circle and the exterior M is asserted irreducible. "
        "Hence there is some a > 0 (not determined here) such that the Dehn filling M(r) has "
        "left-orderable fundamental group for every rational slope r in (-a, 0) U (0, a).";
    if (c.assumptions_echoed.assume_m0_prime) {
      text += " Since M(0) is asserted prime, its fundamental group is left-orderable as well, "
              "and the interval may be taken to be (-a, a).";
    }
  } else if (simple) {
    text = "Delta has a simple root on the unit circle, but irreducibility of M was not asserted; "
           "no conclusion about Dehn fillings is drawn.";
  } else if (c.profile.jumps.empty()) {
    text = "Delta has no roots on the unit circle; the hypothesis is not met.";
  } else {
    text = "Every unit-circle root of Delta is repeated; the hypothesis is not met.";
  }
  if (!c.jump_witnesses.empty()) {
    text += " The signature of B jumps at " + std::to_string(c.jump_witnesses.size()) +
            " root(s); at each of them irreducible SU(2) representations accumulate at the "
            "corresponding abelian representation.";
  }
  return text;
}

void halve_angles(std::vector<UnitRootWitness>& ws) {
  for (auto& w : ws) {
    w.angle_lo /= 2;
    w.angle_hi /= 2;
  }
}

}  // namespace

Certificate certify(const SeifertMatrix& v, const KnotMetadata& meta, const CertifyOptions& opts) {
  Certificate c;
  c.name = v.name().value_or("");
  c.assumptions_echoed = meta;
  c.genus = v.genus();
  c.alexander = alexander_poly(v);
  c.z_poly = to_z_poly(c.alexander);
  std::vector<UnitRootWitness> roots = isolate_unit_roots(c.z_poly, opts.refine_bits);
  c.profile = signature_profile(v, roots);
  c.jump_reports = jump_reports(c.profile);
  c.consistency_checks = run_checks(v, c.profile, c.jump_reports);
  if (!c.consistency_checks.all()) {
    throw Error(ErrorCode::InternalInconsistency,
                "consistency checks failed for '" + c.name + "' (det-sign " +
                    std::to_string(c.consistency_checks.det_sign_crosscheck) + ", first-plateau " +
                    std::to_string(c.consistency_checks.first_plateau_zero) + ", parity " +
                    std::to_string(c.consistency_checks.parity) + ", simple-jump " +
                    std::to_string(c.consistency_checks.simple_root_jump) + ")");
  }

  for (const auto& r : c.jump_reports) {
    if (r.root.simple()) c.simple_root_witnesses.push_back(r.root);
    if (r.jump != 0) c.jump_witnesses.push_back(r);
    if (r.odd_multiplicity) c.odd_multiplicity_witnesses.push_back(r.root);
  }
  c.verdict = (!c.simple_root_witnesses.empty() && meta.assume_irreducible) ? Verdict::Certified
                                                                              : Verdict::NotApplicable;
  if (opts.paper_angles) {
    c.profile = to_paper_parametrization(std::move(c.profile));
    for (std::size_t k = 0; k < c.jump_reports.size(); ++k) c.jump_reports[k].root = c.profile.jumps[k];
    for (auto& r : c.jump_witnesses) {
      r.root.angle_lo /= 2;
      r.root.angle_hi /= 2;
    }
    halve_angles(c.simple_root_witnesses);
    halve_angles(c.odd_multiplicity_witnesses);
  }
  c.conclusion_text = conclusion(c);
  return c;
}

Certificate invalid_input_certificate(const std::string& name, const KnotMetadata& meta,
                                      const std::string& error) {
  Certificate c;
  c.name = name;
  c.verdict = Verdict::InvalidInput;
  c.error = error;
  c.assumptions_echoed = meta;
  c.conclusion_text = "Input rejected: " + error;
  return c;
}

Certificate certify(const RawMatrix& entries, const std::string& name, const KnotMetadata& meta,
                    const CertifyOptions& opts) {
  std::optional<SeifertMatrix> v;
  try {
    v = SeifertMatrix::validate(entries, name);
  } catch (const Error& e) {
    return invalid_input_certificate(name, meta, e.what());
  }
  return certify(*v, meta, opts);
}

std::vector<BatchRecord> certify_batch(const std::vector<BatchInput>& inputs, const CertifyOptions& opts,
                                       unsigned threads) {
  std::vector<BatchRecord> out(inputs.size());
  auto work = [&](std::size_t i) {
    const BatchInput& in = inputs[i];
    BatchRecord& rec = out[i];
    rec.name = in.name;
    try {
      rec.certificate = certify(in.entries, in.name, in.meta, opts);
    } catch (const std::exception& e) {
      rec.internal_error = e.what();
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(inputs.size(), 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) work(i);
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < inputs.size(); i += threads) work(i);
    });
  }
  pool.clear();
  return out;
}

}  // namespace knotsig

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotsig/inertia.hpp"
#include "knotsig/laurent.hpp"
#include "knotsig/seifert.hpp"

namespace knotsig {

enum class Verdict { Certified, NotApplicable, InvalidInput };

std::string_view to_string(Verdict v) noexcept;
// Throws Error{ParseError}.
Verdict verdict_from_string(std::string_view s);

struct ConsistencyChecks {
  bool det_sign_crosscheck = false;
  bool first_plateau_zero = false;
  // Even plateaus, |jump| <= 2 * multiplicity, odd multiplicity => jump != 0.
  bool parity = false;
  // |jump| == 2 at every simple root.
  bool simple_root_jump = false;

  bool all() const noexcept {
    return det_sign_crosscheck && first_plateau_zero && parity && simple_root_jump;
  }
  friend bool operator==(const ConsistencyChecks&, const ConsistencyChecks&) = default;
};

struct Certificate {
  std::string name;
  Verdict verdict = Verdict::InvalidInput;
  std::string error;  // set for InvalidInput only

  std::size_t genus = 0;
  SymmetricLaurentPoly alexander;
  ZPoly z_poly;
  SignatureProfile profile;
  std::vector<JumpReport> jump_reports;  // one per unit root, by increasing angle

  std::vector<UnitRootWitness> simple_root_witnesses;
  std::vector<JumpReport> jump_witnesses;  // roots where the one-sided limits differ
  std::vector<UnitRootWitness> odd_multiplicity_witnesses;
  KnotMetadata assumptions_echoed;
  std::string conclusion_text;
  ConsistencyChecks consistency_checks;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertifyOptions {
  unsigned refine_bits = kDefaultRefineBits;
  // Report angles as alpha = phi/2 (roots e^{2 i alpha} of Delta).
  bool paper_angles = false;
};

// Runs the full pipeline. Throws Error{InternalInconsistency} if any
// consistency check fails; a certificate with failed checks is never returned.
Certificate certify(const SeifertMatrix& v, const KnotMetadata& meta, const CertifyOptions& opts = {});

// As above, but validation failures become an InvalidInput certificate.
Certificate certify(const RawMatrix& entries, const std::string& name, const KnotMetadata& meta,
                    const CertifyOptions& opts = {});

Certificate invalid_input_certificate(const std::string& name, const KnotMetadata& meta,
                                      const std::string& error);

struct BatchInput {
  std::string name;
  RawMatrix entries;
  KnotMetadata meta;
};

struct BatchRecord {
  std::string name;
  std::optional<Certificate> certificate;
  std::optional<std::string> internal_error;
};

// Order-preserving; per-input failures never abort the batch. threads == 0
// picks the hardware concurrency.
std::vector<BatchRecord> certify_batch(const std::vector<BatchInput>& inputs,
                                       const CertifyOptions& opts = {}, unsigned threads = 1);

}  // namespace knotsig

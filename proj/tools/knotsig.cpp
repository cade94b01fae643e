// knotsig: Alexander polynomial, unit-circle roots and signature jumps of
// Seifert matrices, with a certificate for the simple-unit-root criterion.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotsig/certify.hpp"
#include "knotsig/corpus.hpp"
#include "knotsig/error.hpp"
#include "knotsig/plot.hpp"
#include "knotsig/report.hpp"

namespace fs = std::filesystem;
using namespace knotsig;

namespace {

enum Exit { kOk = 0, kInputError = 1, kInternalError = 2 };

struct Options {
  std::string input;
  std::string format;
  std::string matrix;
  std::string name = "input";
  std::string plot_dir;
  std::string emit = "table";
  std::string output;
  bool paper_angles = false;
  bool json = false;
  unsigned refine_bits = kDefaultRefineBits;
  unsigned threads = 1;
};

std::vector<CorpusRecord> load(const Options& o) {
  if (!o.matrix.empty()) {
    nlohmann::json entry = {{"name", o.name}, {"seifert", nlohmann::json::parse(o.matrix)}};
    return parse_corpus_text(nlohmann::json::array({entry}).dump(), CorpusFormat::Json);
  }
  if (o.input.empty()) throw Error(ErrorCode::FileNotFound, "no --input or --matrix given");
  std::string fmt = o.format;
  if (fmt.empty()) {
    fmt = fs::path(o.input).extension().string();
    if (!fmt.empty() && fmt[0] == '.') fmt = fmt.substr(1);
  }
  return parse_corpus(o.input, corpus_format_from_string(fmt));
}

std::string safe_filename(std::size_t index, const std::string& name) {
  std::string s = std::to_string(index) + "_";
  for (char c : name) s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return s;
}

std::string interval_text(const UnitRootWitness& w, bool half) {
  std::string s = "z in (" + decimal(w.lo, 12) + ", " + decimal(w.hi, 12) + ")";
  s += half ? ", alpha in (" : ", phi in (";
  s += decimal(w.angle_lo, 12) + ", " + decimal(w.angle_hi, 12) + ")";
  s += ", multiplicity " + std::to_string(w.multiplicity);
  return s;
}

std::string label(const CorpusRecord& r) {
  return r.name.empty() ? "#" + std::to_string(r.index + 1) : r.name;
}

int run_validate(const Options& o) {
  int rc = kOk;
  for (const auto& rec : load(o)) {
    if (!rec.entry) {
      std::cout << label(rec) << ": INVALID " << rec.error << "\n";
      rc = kInputError;
      continue;
    }
    try {
      const auto v = SeifertMatrix::validate(rec.entry->seifert, rec.entry->name);
      std::cout << label(rec) << ": valid, genus " << v.genus() << "\n";
    } catch (const Error& e) {
      std::cout << label(rec) << ": INVALID " << e.what() << "\n";
      rc = kInputError;
    }
  }
  return rc;
}

template <class Fn>
int for_each_valid(const Options& o, Fn&& fn) {
  int rc = kOk;
  for (const auto& rec : load(o)) {
    if (!rec.entry) {
      std::cout << label(rec) << ": INVALID " << rec.error << "\n";
      rc = std::max<int>(rc, kInputError);
      continue;
    }
    try {
      fn(rec, SeifertMatrix::validate(rec.entry->seifert, rec.entry->name));
    } catch (const Error& e) {
      const bool internal = e.code() == ErrorCode::InternalInconsistency ||
                            e.code() == ErrorCode::InternalNormalization || e.code() == ErrorCode::SampleOnRoot;
      std::cout << label(rec) << ": " << (internal ? "ERROR " : "INVALID ") << e.what() << "\n";
      rc = std::max<int>(rc, internal ? kInternalError : kInputError);
    }
  }
  return rc;
}

int run_alexander(const Options& o) {
  return for_each_valid(o, [&](const CorpusRecord& rec, const SeifertMatrix& v) {
    const auto delta = alexander_poly(v);
    std::cout << label(rec) << ": Delta(t) = " << to_string(delta)
              << "   P(z) = " << to_string(to_z_poly(delta)) << "\n";
  });
}

int run_roots(const Options& o) {
  return for_each_valid(o, [&](const CorpusRecord& rec, const SeifertMatrix& v) {
    auto roots = isolate_unit_roots(to_z_poly(alexander_poly(v)), o.refine_bits);
    std::cout << label(rec) << ": " << roots.size() << " unit root(s)\n";
    // Report by increasing angle.
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
      UnitRootWitness w = *it;
      if (o.paper_angles) {
        w.angle_lo /= 2;
        w.angle_hi /= 2;
      }
      std::cout << "  " << interval_text(w, o.paper_angles) << "\n";
    }
  });
}

int run_certify_like(const Options& o, bool signature_only) {
  const auto records = load(o);
  CertifyOptions copts;
  copts.refine_bits = o.refine_bits;
  copts.paper_angles = o.paper_angles;
  const auto results = certify_corpus(records, copts, o.threads);

  int rc = kOk;
  for (const auto& r : results) {
    if (r.internal_error) rc = kInternalError;
    else if (r.certificate->verdict == Verdict::InvalidInput && rc == kOk) rc = kInputError;
  }

  if (!o.plot_dir.empty()) {
    fs::create_directories(o.plot_dir);
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      if (!r.certificate || r.certificate->verdict == Verdict::InvalidInput) continue;
      emit_profile_plot(r.certificate->profile, fs::path(o.plot_dir) / (safe_filename(i, r.name) + ".svg"),
                        r.name);
    }
  }

  if (o.json) {
    std::cout << emit_report(results, ReportFormat::Json);
    return rc;
  }
  for (const auto& r : results) {
    if (r.internal_error) {
      std::cout << r.name << ": ERROR " << *r.internal_error << "\n";
      continue;
    }
    const Certificate& c = *r.certificate;
    if (c.verdict == Verdict::InvalidInput) {
      std::cout << c.name << ": INVALID_INPUT " << c.error << "\n";
      continue;
    }
    if (signature_only) {
      std::cout << c.name << ": plateaus [";
      for (std::size_t k = 0; k < c.profile.plateaus.size(); ++k) {
        std::cout << (k ? ", " : "") << c.profile.plateaus[k];
      }
      std::cout << "], sigma(-1) = " << c.profile.value_at_minus_one << "\n";
      for (const auto& j : c.jump_reports) {
        std::cout << "  jump " << j.jump << " (" << j.left_value << " -> " << j.right_value << ") at "
                  << interval_text(j.root, c.profile.half_angles) << "\n";
      }
    } else {
      std::cout << c.name << ": " << to_string(c.verdict) << "\n  " << c.conclusion_text << "\n";
      for (const auto& w : c.simple_root_witnesses) {
        std::cout << "  simple root: " << interval_text(w, c.profile.half_angles) << "\n";
      }
    }
  }
  return rc;
}

int run_report(const Options& o) {
  const auto records = load(o);
  CertifyOptions copts;
  copts.refine_bits = o.refine_bits;
  copts.paper_angles = o.paper_angles;
  const auto results = certify_corpus(records, copts, o.threads);
  const ReportFormat fmt = o.emit == "json" ? ReportFormat::Json : ReportFormat::Table;
  const std::string text = emit_report(results, fmt);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + o.output);
    out << text;
  }
  if (!o.plot_dir.empty()) {
    fs::create_directories(o.plot_dir);
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      if (!r.certificate || r.certificate->verdict == Verdict::InvalidInput) continue;
      emit_profile_plot(r.certificate->profile, fs::path(o.plot_dir) / (safe_filename(i, r.name) + ".svg"),
                        r.name);
    }
  }
  int rc = kOk;
  for (const auto& r : results) {
    if (r.internal_error) rc = kInternalError;
    else if (r.certificate->verdict == Verdict::InvalidInput && rc == kOk) rc = kInputError;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotsig - exact Alexander polynomial, unit roots and signature jumps of Seifert matrices"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Corpus file");
    sub->add_option("--format", o.format, "Corpus format: json, jsonl or csv (default: from extension)");
    sub->add_option("--matrix", o.matrix, "Inline Seifert matrix as JSON, e.g. [[-1,1],[0,-1]]");
    sub->add_option("--name", o.name, "Name for an inline matrix");
    sub->add_option("--refine-bits", o.refine_bits, "Isolating interval width 2^-N")->check(CLI::Range(1u, 4096u));
    sub->add_flag("--paper-angles", o.paper_angles, "Report alpha = phi/2 instead of phi");
    sub->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");
  };

  auto* validate = app.add_subcommand("validate", "Check that matrices are Seifert matrices");
  auto* alexander = app.add_subcommand("alexander", "Print Delta(t) and P(z)");
  auto* roots = app.add_subcommand("roots", "Isolate unit-circle roots of Delta");
  auto* signature = app.add_subcommand("signature", "Signature step function of B on the unit circle");
  auto* cert = app.add_subcommand("certify", "Decide the simple-unit-root criterion");
  auto* report = app.add_subcommand("report", "Table or JSON report over a corpus");
  for (auto* s : {validate, alexander, roots, signature, cert, report}) add_common(s);
  for (auto* s : {signature, cert, report}) {
    s->add_option("--plot", o.plot_dir, "Directory for SVG/CSV step plots");
  }
  for (auto* s : {signature, cert}) s->add_flag("--json", o.json, "Emit certificates as JSON");
  report->add_option("--emit", o.emit, "Report format")->check(CLI::IsMember({"table", "json"}));
  report->add_option("--output", o.output, "Write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return run_validate(o);
    if (*alexander) return run_alexander(o);
    if (*roots) return run_roots(o);
    if (*signature) return run_certify_like(o, true);
    if (*cert) return run_certify_like(o, false);
    if (*report) return run_report(o);
  } catch (const Error& e) {
    std::cerr << "knotsig: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInconsistency ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "knotsig: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

#include "knotsig/error.hpp"

namespace knotsig {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::OddSize: return "OddSize";
    case ErrorCode::NonSymplectic: return "NonSymplectic";
    case ErrorCode::InternalNormalization: return "InternalNormalization";
    case ErrorCode::NotReciprocal: return "NotReciprocal";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::RootAtPlusMinusOne: return "RootAtPlusMinusOne";
    case ErrorCode::SampleOnRoot: return "SampleOnRoot";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace knotsig

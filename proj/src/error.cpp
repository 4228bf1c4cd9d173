#include "trifree/error.hpp"

namespace trifree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAsymmetricRotation: return "AsymmetricRotation";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorCode::kDeadDart: return "DeadDart";
    case ErrorCode::kDeadVertex: return "DeadVertex";
    case ErrorCode::kDifferentFaces: return "DifferentFaces";
    case ErrorCode::kSameOrigin: return "SameOrigin";
    case ErrorCode::kNotIsolated: return "NotIsolated";
    case ErrorCode::kBothBig: return "BothBig";
    case ErrorCode::kDegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::kNotSameFace: return "NotSameFace";
    case ErrorCode::kAdjacentEndpoints: return "AdjacentEndpoints";
    case ErrorCode::kEmbeddingCorruption: return "EmbeddingCorruption";
    case ErrorCode::kInsecureMultigram: return "InsecureMultigram";
    case ErrorCode::kExtensionFailure: return "ExtensionFailure";
    case ErrorCode::kTriangleFound: return "TriangleFound";
    case ErrorCode::kExhaustedQueueNonempty: return "ExhaustedQueueNonempty";
    case ErrorCode::kNotAFacialCycle: return "NotAFacialCycle";
    case ErrorCode::kImproperPrecoloring: return "ImproperPrecoloring";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

}  // namespace trifree

#pragma once

namespace ucbs {

inline constexpr const char* kToolVersion = "0.1.0";

// Schema versions for files this tool writes. Bump on incompatible change.
inline constexpr int kManifestSchemaVersion = 1;
inline constexpr int kCheckpointSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kMaskSidecarSchemaVersion = 1;

}  // namespace ucbs

#pragma once

namespace trislice {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kLedgerSchemaVersion = 1;

}  // namespace trislice

#pragma once

#include <string>
#include <string_view>

namespace qcol {

/// Hex-encoded SHA-256 digest; used for the reproducibility stamps in JSON
/// outputs and for verifying the bundled data checksums.
std::string sha256_hex(std::string_view data);

}  // namespace qcol

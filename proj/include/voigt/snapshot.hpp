#pragma once

#include <filesystem>

#include "voigt/dynamics.hpp"

namespace voigt {

/// Binary state snapshot, format "VOIGTFLD" v1; see docs/formats.md for the
/// exact layout. Little-endian on disk; big-endian hosts convert on the fly.
void write_snapshot(const SimState& state, const VoigtParams& params,
                    const std::filesystem::path& path);

struct Snapshot {
    SimState state;
    VoigtParams params;
};

/// Validates magic/version/shape and throws FormatError on any mismatch or
/// truncation. Round trip read(write(s)) is bit-exact.
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace voigt

#pragma once

namespace htdet {

/// Selects between the OpenMP kernels and the serial reference code they
/// are tested against.
enum class Execution { serial, parallel };

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace htdet

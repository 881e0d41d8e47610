#pragma once

namespace grk {

// Kernels with a parallel implementation keep a serial one for cross-checking.
enum class Exec { serial, parallel };

} // namespace grk

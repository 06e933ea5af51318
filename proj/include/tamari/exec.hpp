#pragma once

namespace tamari {

// Execution policy for the exhaustive kernels. Every parallel kernel has a
// serial twin that produces bit-identical results; tests compare the two
// and tools/bench.cpp times them against each other.
enum class Exec { serial, parallel };

}  // namespace tamari

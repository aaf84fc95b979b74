#pragma once

namespace uavcover {

// Execution policy for data-parallel kernels. Serial is the reference path
// kept for testing; Parallel runs the same algorithm under OpenMP with
// deterministic reductions, so both produce identical results.
enum class ExecPolicy { Serial, Parallel };

}  // namespace uavcover

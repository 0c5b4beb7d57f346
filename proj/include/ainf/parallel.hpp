#pragma once

namespace ainf {

// Thread cap from AINFTY_THREADS (unset or invalid: OpenMP default).
int worker_threads();

}  // namespace ainf

#include <cstdlib>
#include <string>

#include "curvrad/simd/kernels.hpp"

namespace curvrad::simd {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable* kernels_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return &detail::scalar_table();
    case Isa::Avx2:
#if defined(CURVRAD_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2")) return &detail::avx2_table();
#endif
      return nullptr;
    case Isa::Neon:
#if defined(CURVRAD_HAVE_NEON)
      return &detail::neon_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
    if (kernels_for(isa)) out.push_back(isa);
  return out;
}

namespace {

const KernelTable& select() {
  if (const char* env = std::getenv("CURVRAD_SIMD")) {
    const std::string want(env);
    for (Isa isa : available_isas())
      if (want == to_string(isa)) return *kernels_for(isa);
    // Unknown or unavailable request: fall through to auto-detection.
  }
  const auto isas = available_isas();
  return *kernels_for(isas.back());
}

}  // namespace

const KernelTable& kernels() {
  static const KernelTable& active = select();
  return active;
}

}  // namespace curvrad::simd

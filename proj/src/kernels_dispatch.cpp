#include "hcube/kernels.hpp"

namespace hcube::kern {

#if defined(HCUBE_HAVE_AVX2)
const Dispatch& avx2_kernels();
#endif

namespace {

const Dispatch* detect() {
#if defined(HCUBE_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return &avx2_kernels();
#endif
  return &scalar();
}

const Dispatch*& current() {
  static const Dispatch* d = detect();
  return d;
}

}  // namespace

const Dispatch& active() { return *current(); }

bool set_active(std::string_view name) {
  for (const auto& opt : available()) {
    if (opt != name) continue;
    if (opt == "scalar") current() = &scalar();
#if defined(HCUBE_HAVE_AVX2)
    else if (opt == "avx2") current() = &avx2_kernels();
#endif
    return true;
  }
  return false;
}

std::vector<std::string> available() {
  std::vector<std::string> out{"scalar"};
#if defined(HCUBE_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    out.emplace_back("avx2");
#endif
  return out;
}

}  // namespace hcube::kern

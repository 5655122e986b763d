#include "workbench/field_kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace wb::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Isa best_isa() {
  static const Isa isa = [] {
    if (const char* force = std::getenv("WORKBENCH_FORCE_SCALAR"); force && *force && *force != '0') {
      return Isa::scalar;
    }
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  }();
  return isa;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void eval_field(Isa isa, const FieldBatch& batch) {
  if (batch.ys.size() != batch.xs.size() || batch.re.size() < batch.xs.size() ||
      batch.im.size() < batch.xs.size() || batch.poles.size() != batch.coeffs.size()) {
    throw std::invalid_argument("eval_field: mismatched batch extents");
  }
  if (isa == Isa::avx2 && cpu_has_avx2()) {
    field_avx2(batch);
  } else {
    field_scalar(batch);
  }
}

void eval_field(const FieldBatch& batch) { eval_field(best_isa(), batch); }

}  // namespace wb::kernels

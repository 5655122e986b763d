#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace wb::kernels {

enum class Isa { scalar, avx2 };

// Evaluates sum_j coeffs[j] / (z - poles[j]) at z = xs[i] + i*ys[i].
struct FieldBatch {
  std::span<const double> xs;
  std::span<const double> ys;
  std::span<const double> coeffs;
  std::span<const double> poles;
  std::span<double> re;
  std::span<double> im;
};

void field_scalar(const FieldBatch& batch);
void field_avx2(const FieldBatch& batch);

bool cpu_has_avx2();
Isa best_isa();
std::string_view isa_name(Isa isa);

void eval_field(const FieldBatch& batch);
void eval_field(Isa isa, const FieldBatch& batch);

}  // namespace wb::kernels

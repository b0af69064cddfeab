#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qvariant/json_io.hpp"
#include "qvariant/qdiff.hpp"

namespace qvariant {

// Independent stream per draw, so results do not depend on scheduling.
std::uint64_t draw_stream_seed(std::uint64_t seed, std::uint64_t index);

class DrawRng {
 public:
  explicit DrawRng(std::uint64_t stream) : eng_(stream) {}
  // Uniform on {-4, -7/2, ..., 4}.
  HalfInt half_int();
  // +-a/b with 1 <= a, b <= 9.
  Scalar small_rational(Mode mode);
  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Exponents adjusted so that lambda (resp. nu) is a half-integer.
Params2 draw_params2(DrawRng& rng, Mode mode);
Params3 draw_params3(DrawRng& rng, Mode mode);

// One draw: computes a JSON record. Throwing DegenerateError rejects the
// sample; the same stream is then drawn from again.
using DrawFn = std::function<json(int index, DrawRng& rng)>;

inline constexpr int kMaxRejections = 1000;

// Record per draw, ordered by index. Records carry "draw" and "rejected";
// other errors become {"draw", "error"} records.
std::vector<json> run_sweep_serial(int draws, std::uint64_t seed, const DrawFn& fn);
std::vector<json> run_sweep_parallel(int draws, std::uint64_t seed, const DrawFn& fn);

}  // namespace qvariant

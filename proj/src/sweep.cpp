#include "qvariant/sweep.hpp"

#include "qvariant/errors.hpp"

namespace qvariant {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t draw_stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index + 1) * 0xd1342543de82ef95ULL);
}

int DrawRng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

HalfInt DrawRng::half_int() { return HalfInt::from_twice(uniform(-8, 8)); }

Scalar DrawRng::small_rational(Mode mode) {
  long a = uniform(1, 9), b = uniform(1, 9);
  if (uniform(0, 1)) a = -a;
  return Scalar(a, b).in_mode(mode);
}

namespace {
// Moves h by 1/2 towards the middle of [-4, 4].
void nudge(HalfInt& h) { h = h.twice() > 0 ? h - HalfInt::half : h + HalfInt::half; }
}  // namespace

Params2 draw_params2(DrawRng& rng, Mode mode) {
  Params2 p;
  p.h = {rng.half_int(), rng.half_int()};
  p.l = {rng.half_int(), rng.half_int()};
  p.alpha1 = rng.half_int();
  p.alpha2 = rng.half_int();
  p.t = {rng.small_rational(mode), rng.small_rational(mode)};
  long s = (p.h[0] + p.h[1] - p.l[0] - p.l[1] - p.alpha1 - p.alpha2).twice();
  if (s % 2 != 0) nudge(p.alpha2);
  return p;
}

Params3 draw_params3(DrawRng& rng, Mode mode) {
  Params3 p;
  p.h = {rng.half_int(), rng.half_int(), rng.half_int()};
  p.l = {rng.half_int(), rng.half_int(), rng.half_int()};
  p.alpha = rng.half_int();
  p.t = {rng.small_rational(mode), rng.small_rational(mode), rng.small_rational(mode)};
  long s = (p.h[0] + p.h[1] + p.h[2] - p.l[0] - p.l[1] - p.l[2]).twice();
  if (s % 2 != 0) nudge(p.l[2]);
  return p;
}

namespace {
json one_draw(int index, std::uint64_t seed, const DrawFn& fn) {
  DrawRng rng(draw_stream_seed(seed, static_cast<std::uint64_t>(index)));
  for (int rejected = 0; rejected < kMaxRejections; ++rejected) {
    try {
      json rec = fn(index, rng);
      json out;
      out["draw"] = index;
      out["rejected"] = rejected;
      for (auto it = rec.begin(); it != rec.end(); ++it) out[it.key()] = it.value();
      return out;
    } catch (const DegenerateError&) {
      continue;
    } catch (const std::exception& e) {
      json out;
      out["draw"] = index;
      out["error"] = e.what();
      out["pass"] = false;
      return out;
    }
  }
  json out;
  out["draw"] = index;
  out["error"] = "no admissible sample after " + std::to_string(kMaxRejections) + " rejections";
  out["pass"] = false;
  return out;
}
}  // namespace

std::vector<json> run_sweep_serial(int draws, std::uint64_t seed, const DrawFn& fn) {
  std::vector<json> out;
  out.reserve(static_cast<std::size_t>(std::max(draws, 0)));
  for (int i = 0; i < draws; ++i) out.push_back(one_draw(i, seed, fn));
  return out;
}

std::vector<json> run_sweep_parallel(int draws, std::uint64_t seed, const DrawFn& fn) {
  std::vector<json> out(static_cast<std::size_t>(std::max(draws, 0)));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < draws; ++i) out[static_cast<std::size_t>(i)] = one_draw(i, seed, fn);
  return out;
}

}  // namespace qvariant

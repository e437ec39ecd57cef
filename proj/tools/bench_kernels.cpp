// Compares the OpenMP kernels against their serial reference implementations:
// Cayley ball construction and the exhaustive classifier sweep.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gpa/classify.hpp"
#include "gpa/enumerate.hpp"
#include "gpa/oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

gpa::ProductGraph free_product_of_z2(int count) {
  std::vector<gpa::VertexGroupInfo> vs;
  auto table = std::make_shared<const gpa::FiniteGroupTable>(
      gpa::FiniteGroupTable::cyclic(2));
  for (int i = 0; i < count; ++i) {
    gpa::VertexGroupInfo v;
    v.name = std::string(1, char('a' + i));
    v.order = gpa::GroupOrder::finite(2);
    v.ends = gpa::VertexEnds::Zero;
    v.semistable = gpa::Tri::Yes;
    v.finitely_presented = true;
    v.table = table;
    vs.push_back(std::move(v));
  }
  return gpa::ProductGraph(std::move(vs), {});
}

void bench_ball(int vertices, int radius) {
  gpa::ProductGraph g = free_product_of_z2(vertices);

  auto t0 = Clock::now();
  gpa::CayleyBall serial = gpa::cayley_ball_serial(g, radius);
  double ts = seconds_since(t0);

  t0 = Clock::now();
  gpa::CayleyBall parallel = gpa::cayley_ball(g, radius);
  double tp = seconds_since(t0);

  bool equal = serial.elements == parallel.elements &&
               serial.distance == parallel.distance &&
               serial.edges == parallel.edges;
  std::printf(
      "cayley_ball  Z2^*%d r=%d   %8zu elements  serial %7.3fs  parallel "
      "%7.3fs  speedup %.2fx  %s\n",
      vertices, radius, serial.elements.size(), ts, tp, ts / tp,
      equal ? "outputs equal" : "OUTPUTS DIFFER");
}

void bench_sweep(int max_n) {
  auto body = [](const gpa::GraphClass&, const std::vector<gpa::Status>&,
                 const gpa::ProductGraph& g) -> std::optional<std::string> {
    gpa::SemistabilityVerdict v = gpa::semistability_of(g);
    gpa::EndsVerdict e = gpa::ends_of(g);
    if (v.kind == gpa::SsClass::Unknown || e.kind == gpa::EndsClass::Unknown)
      return "unexpected unknown";
    return std::nullopt;
  };

  auto t0 = Clock::now();
  gpa::SweepResult serial = gpa::run_sweep(max_n, /*parallel=*/false, body);
  double ts = seconds_since(t0);

  t0 = Clock::now();
  gpa::SweepResult parallel = gpa::run_sweep(max_n, /*parallel=*/true, body);
  double tp = seconds_since(t0);

  bool equal = serial.instances == parallel.instances &&
               serial.failures == parallel.failures &&
               serial.first_failure_index == parallel.first_failure_index;
  std::printf(
      "classify sweep n<=%d      %8llu instances  serial %7.3fs  parallel "
      "%7.3fs  speedup %.2fx  %s\n",
      max_n, static_cast<unsigned long long>(serial.instances), ts, tp,
      ts / tp, equal ? "outputs equal" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel paths run serially\n");
#endif
  bench_ball(3, 11);
  bench_ball(4, 9);
  bench_sweep(5);
  bench_sweep(6);
  return 0;
}

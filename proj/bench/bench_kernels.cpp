// Times every kernel on the serial reference path and the OpenMP path and
// checks that both produce the same result (exit status 1 otherwise).
//
//   bench_kernels [repetitions]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>

#include "apolar/apolarity.hpp"
#include "apolar/kernels.hpp"
#include "apolar/lefschetz.hpp"
#include "apolar/parse.hpp"
#include "apolar/random.hpp"

using namespace apolar;
using kernels::Exec;

namespace {

double best_ms(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool all_equal = true;

template <class F>
void compare(const char* name, int reps, F run) {
  std::optional<decltype(run(Exec::serial))> a, b;
  const double s = best_ms(reps, [&] { a = run(Exec::serial); });
  const double p = best_ms(reps, [&] { b = run(Exec::parallel); });
  all_equal = all_equal && *a == *b;
  std::printf("%-28s serial %10.2f ms   parallel %10.2f ms   speedup %5.2fx   %s\n", name, s, p, s / p,
              *a == *b ? "equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, repetitions: %d\n", kernels::thread_count(), reps);

  const VariableSplit pyr(8, 6);
  const auto f = parse_polynomial(
      "x0^2*u1*u2*u3 + x1^2*u1*u2*u4 + x2^2*u1*u4*u5 + x3^2*u1*u3*u5 + x4^2*u2*u3*u6 + "
      "x5^2*u2*u4*u6 + x6^2*u4*u5*u6 + x7^2*u3*u5*u6",
      pyr);

  const auto ops = monomial_basis(static_cast<std::size_t>(pyr.size()), 3);
  compare("apply_each (degree 3)", reps, [&](Exec e) { return kernels::apply_each(ops, f, e); });

  const GorensteinAlgebra A(f);
  const auto basis = A.coset_basis(2);
  compare("hessian_entries (sigma 44)", reps, [&](Exec e) { return kernels::hessian_entries(basis, f, e); });

  const auto entries = kernels::hessian_entries(basis, f);
  Rng rng(1);
  std::vector<Rational> point;
  for (int v = 0; v < pyr.size(); ++v) point.emplace_back(rng.uniform(-64, 64));
  compare("evaluate_each (44 x 44)", reps, [&](Exec e) { return kernels::evaluate_each(entries, point, e); });

  const auto g = parse_polynomial("x0^2*u1^3 + x1^2*u2^3 + x0*x1*u1*u2^2", VariableSplit(2, 2));
  const auto h = hessian_matrix(g, 2);
  compare("symbolic_determinant (6)", reps,
          [&](Exec e) { return kernels::symbolic_determinant(h.entries, h.size(), e); });

  compare("annihilator (two pyramids)", reps, [&](Exec e) {
    return GorensteinAlgebra(f, e).hilbert().h;
  });
  return all_equal ? 0 : 1;
}

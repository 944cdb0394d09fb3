#include "cycloknot/jones.hpp"

#include <stdexcept>

#include "cycloknot/habiro.hpp"
#include "cycloknot/qtools.hpp"

namespace cycloknot {

IntPoly colored_jones(const KnotSpec& k, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("colored_jones: N must be >= 1");
  IntPoly j(q_vars());
  for (std::int64_t n = 0; n < N; ++n) {
    j += habiro_c(k, n) * qpochhammer(1 + N, n) * qpochhammer(1 - N, n);
  }
  return j;
}

IntPoly colored_jones_hyper_t2(std::int64_t t, std::int64_t N) {
  if (t < 1) throw std::invalid_argument("colored_jones_hyper_t2: t must be >= 1");
  if (N < 1) throw std::invalid_argument("colored_jones_hyper_t2: N must be >= 1");
  IntPoly total(q_vars());
  // (q^{1-N}; q)_{k_t} vanishes once k_t >= N.
  for (std::int64_t top = 0; top < N; ++top) {
    const IntPoly head = qpochhammer(1 - N, top);
    for_each_chain(top, t, 0, [&](std::span<const std::int64_t> k) {
      std::int64_t e = -N * top;
      IntPoly term = head;
      for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        e += k[i] * (k[i] + 1) - 2 * N * k[i];
        term *= qbinomial(k[i + 1], k[i]);
      }
      total += term.shifted(Exponent{2 * e, 0});
    });
  }
  return total.shifted(Exponent{2 * t * (1 - N), 0});
}

IntPoly torus_recurrence_residual(std::int64_t s, std::int64_t t, std::int64_t N, const IntPoly& j_n,
                                  const IntPoly& j_n_minus_2) {
  if (N < 3) throw std::invalid_argument("torus recurrence: N must be >= 3");
  const Variables& q = q_vars();
  auto mono = [&](std::int64_t doubled) { return IntPoly::monomial(q, {}, Integer(1), Exponent{doubled, 0}); };
  const IntPoly one = int_constant(q, Integer(1));
  const IntPoly lhs = (one - mono(-2 * N)) * j_n;
  const IntPoly bracket =
      one - mono(2 * (s * (1 - N) - 1)) - mono(2 * (t * (1 - N) - 1)) + mono(2 * (s + t) * (1 - N));
  const IntPoly first = mono((s - 1) * (t - 1) * (1 - N)) * bracket;
  const IntPoly second = (one - mono(2 * (2 - N))) * mono(2 * (s * t * (1 - N) - 1)) * j_n_minus_2;
  return lhs - first - second;
}

bool check_torus_recurrence(std::int64_t s, std::int64_t t, std::int64_t N, const IntPoly& j_n,
                            const IntPoly& j_n_minus_2) {
  return torus_recurrence_residual(s, t, N, j_n, j_n_minus_2).is_zero();
}

}  // namespace cycloknot

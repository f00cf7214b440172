#include "polyrep/series.hpp"

namespace polyrep {

GradedSeries<SymElement> complete_series(int order) {
  auto out = GradedSeries<SymElement>::one(order, SymElement::one(SymBasis::X));
  for (int n = 1; n <= order; ++n) out.set(n, SymElement::generator(SymBasis::X, n));
  return out;
}

GradedSeries<SymElement> power_sum_log_series(int order) {
  GradedSeries<SymElement> out(order, SymElement::one(SymBasis::C));
  for (int n = 1; n <= order; ++n) out.set(n, SymElement::generator(SymBasis::C, n) * Rational(1, n));
  return out;
}

namespace {

// Ordered compositions of `remaining` into positive multiples of p, each
// contributing a factor -1 and one x-index.
void singular_tails(int remaining, int p, std::vector<int>& tail, int sign, const std::vector<int>& head,
                    SymElement& out) {
  if (remaining == 0) {
    std::vector<int> parts = head;
    parts.insert(parts.end(), tail.begin(), tail.end());
    out.add_term(Partition::from_unsorted(std::move(parts)), Rational(sign));
    return;
  }
  for (int part = p; part <= remaining; part += p) {
    tail.push_back(part);
    singular_tails(remaining - part, p, tail, -sign, head, out);
    tail.pop_back();
  }
}

}  // namespace

SymElement y_explicit(int n, int p) {
  if (n < 1) throw std::invalid_argument("y_explicit: n must be positive");
  if (p < 2) throw std::invalid_argument("y_explicit: p must be at least 2");
  SymElement out(SymBasis::X, n);
  std::vector<int> tail;
  for (int head = n; head >= 1; --head) {
    if (head % p == 0 || (n - head) % p != 0) continue;
    singular_tails(n - head, p, tail, 1, {head}, out);
  }
  return out;
}

std::vector<SymElement> y_series_generators(int order, int p) {
  return quotient_y(complete_series(order), p).coefficients();
}

}  // namespace polyrep

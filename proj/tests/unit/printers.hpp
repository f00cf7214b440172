#pragma once

// gtest printers so failures show values instead of bytes.

#include <ostream>

#include "polyrep/exactlin/cyclotomic.hpp"
#include "polyrep/exactlin/matrix.hpp"
#include "polyrep/partitions.hpp"
#include "polyrep/series.hpp"
#include "polyrep/symfunc.hpp"
#include "polyrep/wreath/wreath_element.hpp"

namespace polyrep {

inline void PrintTo(const IntMatrix& m, std::ostream* os) { *os << to_string(m); }
inline void PrintTo(const Cyclotomic& c, std::ostream* os) { *os << c.to_string(); }
inline void PrintTo(const Partition& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const MultiPartition& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const SymElement& a, std::ostream* os) { *os << to_string(a); }
inline void PrintTo(const WreathElement& a, std::ostream* os) { *os << to_string(a); }
inline void PrintTo(const ClassValues& v, std::ostream* os) {
  for (const auto& [mu, x] : v.values()) *os << mu.to_string() << ":" << x.get_str() << " ";
}
template <class T>
void PrintTo(const GradedSeries<T>& s, std::ostream* os) {
  for (int i = 0; i <= s.order(); ++i) {
    *os << "[" << i << "] ";
    PrintTo(s[i], os);
    *os << "; ";
  }
}
inline void PrintTo(const Rational& q, std::ostream* os) { *os << q.get_str(); }

}  // namespace polyrep

#include "wres/scalar/boundary_monomial.hpp"

#include <algorithm>
#include <sstream>

namespace wres {

namespace {
template <typename T>
void merge_sorted(std::vector<T>& a, const std::vector<T>& b) {
  if (b.empty()) return;
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
}
}  // namespace

BoundaryMonomial& BoundaryMonomial::operator*=(const BoundaryMonomial& o) {
  h_prime_degree += o.h_prime_degree;
  merge_sorted(x_indices, o.x_indices);
  merge_sorted(y_indices, o.y_indices);
  merge_sorted(dy_indices, o.dy_indices);
  return *this;
}

std::string BoundaryMonomial::to_string() const {
  if (is_one()) return "1";
  std::ostringstream os;
  const char* sep = "";
  if (h_prime_degree > 0) {
    os << "h'";
    if (h_prime_degree > 1) os << "^" << h_prime_degree;
    sep = "·";
  }
  for (int j : x_indices) {
    os << sep << "X" << j + 1;
    sep = "·";
  }
  for (int l : y_indices) {
    os << sep << "Y" << l + 1;
    sep = "·";
  }
  for (auto [d, l] : dy_indices) {
    os << sep << "dY" << l + 1 << "/dx" << d + 1;
    sep = "·";
  }
  return os.str();
}

}  // namespace wres

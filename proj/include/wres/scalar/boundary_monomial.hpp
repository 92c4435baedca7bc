#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace wres {

// Formal product h'(0)^d * prod X_j * prod Y_l * prod dY_l/dx_j at the boundary point.
// Frame indices are 0-based; index n-1 is the normal direction.
struct BoundaryMonomial {
  int h_prime_degree = 0;
  std::vector<int> x_indices;
  std::vector<int> y_indices;
  std::vector<std::pair<int, int>> dy_indices;  // (direction, component)

  static BoundaryMonomial one() { return {}; }
  static BoundaryMonomial h_prime() { return {1, {}, {}, {}}; }
  static BoundaryMonomial x(int j) { return {0, {j}, {}, {}}; }
  static BoundaryMonomial y(int l) { return {0, {}, {l}, {}}; }
  static BoundaryMonomial dy(int direction, int component) { return {0, {}, {}, {{direction, component}}}; }

  int degree() const {
    return h_prime_degree + int(x_indices.size() + y_indices.size() + dy_indices.size());
  }
  bool is_one() const { return degree() == 0; }

  BoundaryMonomial& operator*=(const BoundaryMonomial& o);
  friend BoundaryMonomial operator*(BoundaryMonomial a, const BoundaryMonomial& b) { return a *= b; }

  friend bool operator==(const BoundaryMonomial&, const BoundaryMonomial&) = default;
  friend auto operator<=>(const BoundaryMonomial&, const BoundaryMonomial&) = default;

  // e.g. "h'·X1·Y4·dY4/dx4", 1-based indices
  std::string to_string() const;
};

}  // namespace wres

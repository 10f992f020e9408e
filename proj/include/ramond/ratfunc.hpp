#pragma once

#include <vector>

#include "ramond/scalar_poly.hpp"

namespace ramond {

// Element of Q(c), reduced, denominator monic. Field arithmetic for the
// exact nullspace solver.
class RatFunc {
 public:
  RatFunc() : num_(), den_(ScalarPoly::one()) {}
  explicit RatFunc(const ScalarPoly& num) : num_(num), den_(ScalarPoly::one()) {}
  RatFunc(const ScalarPoly& num, const ScalarPoly& den);

  const ScalarPoly& num() const { return num_; }
  const ScalarPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& other) const;
  RatFunc operator-(const RatFunc& other) const;
  RatFunc operator*(const RatFunc& other) const;
  RatFunc operator/(const RatFunc& other) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& other) const { return num_ == other.num_ && den_ == other.den_; }

 private:
  void reduce();
  ScalarPoly num_, den_;
};

// Basis of the right nullspace of the rows-by-cols matrix, entries in Q(c).
std::vector<std::vector<RatFunc>> nullspace(std::vector<std::vector<RatFunc>> matrix,
                                            std::size_t cols);

}  // namespace ramond

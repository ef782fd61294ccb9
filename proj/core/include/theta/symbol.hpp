#pragma once

#include <compare>
#include <string>

#include "theta/error.hpp"

namespace theta::ring {

// Ring generators: six grade-0 scalars (s, t, b, y, u, v), graded theta
// generators θ_m, and numeric-evaluation placeholders z_i.  The ordering
// (scalars first, then θ by index, then z by index) fixes the canonical
// printing order for every polynomial.
class symbol {
 public:
  enum class category : unsigned char { scalar = 0, theta = 1, zvar = 2 };

  static symbol s() { return {category::scalar, 0}; }
  static symbol t() { return {category::scalar, 1}; }
  static symbol b() { return {category::scalar, 2}; }
  static symbol y() { return {category::scalar, 3}; }
  static symbol u() { return {category::scalar, 4}; }
  static symbol v() { return {category::scalar, 5}; }

  static symbol theta(unsigned m) {
    if (m < 1) throw precondition_error("symbol::theta: index must be >= 1");
    return {category::theta, m};
  }

  static symbol z(unsigned i) {
    if (i < 1) throw precondition_error("symbol::z: index must be >= 1");
    return {category::zvar, i};
  }

  category cat() const { return cat_; }
  unsigned index() const { return index_; }
  unsigned grade() const { return cat_ == category::theta ? index_ : 0; }

  std::string name() const {
    switch (cat_) {
      case category::theta:
        return "θ" + std::to_string(index_);
      case category::zvar:
        return "z" + std::to_string(index_);
      default:
        break;
    }
    static constexpr const char* scalar_names[6] = {"s", "t", "b",
                                                    "y", "u", "v"};
    return scalar_names[index_];
  }

  std::string latex() const {
    switch (cat_) {
      case category::theta:
        return "\\theta_{" + std::to_string(index_) + "}";
      case category::zvar:
        return "z_{" + std::to_string(index_) + "}";
      default:
        return name();
    }
  }

  friend auto operator<=>(const symbol&, const symbol&) = default;

 private:
  symbol(category c, unsigned i) : cat_(c), index_(i) {}

  category cat_;
  unsigned index_;
};

}  // namespace theta::ring

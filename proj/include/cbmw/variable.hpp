#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cbmw {

enum class VarKind : std::uint8_t { U = 0, Rho = 1, Q = 2 };

/// One of the ground-ring indeterminants u_1, ..., u_r, rho, q.
/// The global order is u_1 < u_2 < ... < rho < q; it drives the canonical
/// monomial order and the rendering of polynomials.
class Variable {
  public:
    static Variable u(int index);  // 1-based; throws std::invalid_argument if < 1
    static Variable rho() { return Variable(VarKind::Rho, 0); }
    static Variable q() { return Variable(VarKind::Q, 0); }

    VarKind kind() const { return kind_; }
    int index() const { return index_; }  // 0 unless kind is U

    std::string name() const;  // "u3", "rho", "q"

    auto operator<=>(const Variable&) const = default;

  private:
    Variable(VarKind k, int i) : kind_(k), index_(i) {}
    VarKind kind_;
    int index_;
};

std::ostream& operator<<(std::ostream& os, const Variable& v);

}  // namespace cbmw

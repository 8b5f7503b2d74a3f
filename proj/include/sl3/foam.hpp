#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace sl3 {

using Rational = boost::multiprecision::cpp_rational;

/// c0 + c1 X + c2 X^2 in Q[X]/(X^3).
struct FrobElement {
  std::array<Rational, 3> c{};

  static FrobElement x_power(int k);  // zero for k >= 3
  /// Grading: 1 has degree -2, X degree 0, X^2 degree 2.
  static int degree_of_power(int k) { return 2 * k - 2; }
  friend bool operator==(const FrobElement&, const FrobElement&) = default;
};

/// Element of A (x) A: entry [i][j] is the coefficient of X^i (x) X^j.
using FrobTensor2 = std::array<std::array<Rational, 3>, 3>;

FrobElement frob_add(const FrobElement& a, const FrobElement& b);
FrobElement frob_mul(const FrobElement& a, const FrobElement& b);
/// tau(X^2) = -1, tau(1) = tau(X) = 0.
Rational frob_trace(const FrobElement& a);
/// Delta(X^m) = -sum of X^a (x) X^b over a + b = m + 2.
FrobTensor2 frob_comul(const FrobElement& a);
/// m(Delta(1)) = -3 X^2: the effect of one handle.
FrobElement handle_element();

/// Value of the theta foam whose three disks carry d1, d2, d3 dots, in the
/// cyclic order of the singular circle. +1 on cyclic rotations of (0,1,2),
/// -1 on the other orderings of {0,1,2}, 0 otherwise.
int theta_value(int d1, int d2, int d3);

struct PreFoam {
  struct Facet {
    std::string id;
    int genus = 0;
    int dots = 0;
    int slots = 0;
    int line = 0;
  };
  struct Attachment {
    int facet = -1;  // index into facets
    int slot = -1;
  };
  struct Singular {
    std::string id;
    std::array<Attachment, 3> legs;  // in cyclic order
    int line = 0;
  };

  std::string name;
  std::vector<Facet> facets;
  std::vector<Singular> circles;
};

/// Throws NOT_CLOSED for a free facet boundary and MALFORMED for a slot used
/// twice or out of range.
void check_prefoam(const PreFoam& f);

/// -2 chi of the surface punctured at the dots.
int degree(const PreFoam& f);

/// Facet tensors contracted through the theta form. Circles are contracted
/// in the given order (default: declaration order).
Rational evaluate(const PreFoam& f);
Rational evaluate(const PreFoam& f, const std::vector<int>& circle_order);

/// Both foams side by side.
PreFoam disjoint_union(const PreFoam& a, const PreFoam& b);

/// Reads every `foam` block of a text.
std::vector<PreFoam> parse_foams(std::string_view text);
std::vector<PreFoam> parse_foam_file(const std::string& path);
std::string to_text(const PreFoam& f);

}  // namespace sl3

#ifndef HK_POLYNOMIAL_HPP_
#define HK_POLYNOMIAL_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hk {

using bigint = boost::multiprecision::cpp_int;

// Univariate polynomial over the integers, exact arithmetic throughout.
// Coefficients are stored constant term first with no trailing zeros; the
// zero polynomial has an empty coefficient vector.
class int_polynomial {
 public:
  int_polynomial() = default;
  explicit int_polynomial(std::vector<bigint> coeffs);

  static int_polynomial constant(bigint c);
  static int_polynomial monomial(bigint c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bigint coefficient(int k) const;
  std::vector<bigint> const& coefficients() const { return coeffs_; }

  friend int_polynomial operator+(int_polynomial const&,
                                  int_polynomial const&);
  friend int_polynomial operator-(int_polynomial const&,
                                  int_polynomial const&);
  friend int_polynomial operator*(int_polynomial const&,
                                  int_polynomial const&);
  friend bool operator==(int_polynomial const&, int_polynomial const&);

  int_polynomial negated() const;

  // Exact quotient; throws internal_error if the division leaves a
  // remainder (callers use this only where exactness is guaranteed).
  int_polynomial divide_exact(int_polynomial const& divisor) const;

  bigint evaluate(bigint const& x) const;

  // Human form in the given variable name, e.g. "-s^2 + 2s - 1".
  std::string to_string(std::string const& var = "s") const;

 private:
  void trim();
  std::vector<bigint> coeffs_;
};

// Exact determinant by Bareiss fraction-free elimination; all intermediate
// divisions are exact in Z[s]. The matrix is consumed.
int_polynomial determinant(std::vector<std::vector<int_polynomial>> m);

// Cofactor expansion, exponential in the size; retained as an independent
// route for cross-checking the elimination on small matrices.
int_polynomial determinant_cofactor(
    std::vector<std::vector<int_polynomial>> const& m);

}  // namespace hk

#endif  // HK_POLYNOMIAL_HPP_

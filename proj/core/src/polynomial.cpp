#include "hk/polynomial.hpp"

#include <sstream>
#include <utility>

#include "hk/error.hpp"

namespace hk {

int_polynomial::int_polynomial(std::vector<bigint> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

int_polynomial int_polynomial::constant(bigint c) {
  return int_polynomial(std::vector<bigint>{std::move(c)});
}

int_polynomial int_polynomial::monomial(bigint c, int degree) {
  if (degree < 0) {
    detail::throw_invalid("monomial degree must be nonnegative");
  }
  std::vector<bigint> coeffs(static_cast<std::size_t>(degree) + 1, bigint(0));
  coeffs.back() = std::move(c);
  return int_polynomial(std::move(coeffs));
}

bigint int_polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
    return bigint(0);
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

void int_polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

int_polynomial operator+(int_polynomial const& a, int_polynomial const& b) {
  std::vector<bigint> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          bigint(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    out[k] += a.coeffs_[k];
  }
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
    out[k] += b.coeffs_[k];
  }
  return int_polynomial(std::move(out));
}

int_polynomial operator-(int_polynomial const& a, int_polynomial const& b) {
  std::vector<bigint> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          bigint(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    out[k] += a.coeffs_[k];
  }
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
    out[k] -= b.coeffs_[k];
  }
  return int_polynomial(std::move(out));
}

int_polynomial operator*(int_polynomial const& a, int_polynomial const& b) {
  if (a.is_zero() || b.is_zero()) {
    return int_polynomial();
  }
  std::vector<bigint> out(a.coeffs_.size() + b.coeffs_.size() - 1, bigint(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return int_polynomial(std::move(out));
}

bool operator==(int_polynomial const& a, int_polynomial const& b) {
  return a.coeffs_ == b.coeffs_;
}

int_polynomial int_polynomial::negated() const {
  std::vector<bigint> out = coeffs_;
  for (auto& c : out) {
    c = -c;
  }
  return int_polynomial(std::move(out));
}

int_polynomial int_polynomial::divide_exact(
    int_polynomial const& divisor) const {
  if (divisor.is_zero()) {
    detail::throw_internal("exact division by the zero polynomial");
  }
  if (is_zero()) {
    return int_polynomial();
  }
  std::vector<bigint> rem = coeffs_;
  int const dq = degree() - divisor.degree();
  if (dq < 0) {
    detail::throw_internal("inexact polynomial division (degree)");
  }
  std::vector<bigint> quot(static_cast<std::size_t>(dq) + 1, bigint(0));
  bigint const& lead = divisor.coeffs_.back();
  for (int k = dq; k >= 0; --k) {
    bigint const& top = rem[static_cast<std::size_t>(k + divisor.degree())];
    if (top == 0) {
      continue;
    }
    if (top % lead != 0) {
      detail::throw_internal("inexact polynomial division (leading term)");
    }
    bigint q = top / lead;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
      rem[static_cast<std::size_t>(k) + j] -= q * divisor.coeffs_[j];
    }
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (auto const& c : rem) {
    if (c != 0) {
      detail::throw_internal("inexact polynomial division (remainder)");
    }
  }
  return int_polynomial(std::move(quot));
}

bigint int_polynomial::evaluate(bigint const& x) const {
  bigint acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::string int_polynomial::to_string(std::string const& var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    bigint const c = coefficient(k);
    if (c == 0) {
      continue;
    }
    bigint const mag = abs(c);
    if (first) {
      if (c < 0) {
        out << "-";
      }
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) {
      out << mag.str();
    }
    if (k >= 1) {
      out << var;
      if (k >= 2) {
        out << "^" << k;
      }
    }
  }
  return out.str();
}

int_polynomial determinant(std::vector<std::vector<int_polynomial>> m) {
  std::size_t const size = m.size();
  for (auto const& row : m) {
    if (row.size() != size) {
      detail::throw_invalid("determinant of a non-square matrix");
    }
  }
  if (size == 0) {
    return int_polynomial::constant(1);
  }
  int sign = 1;
  int_polynomial prev = int_polynomial::constant(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < size && m[pivot][k].is_zero()) {
        ++pivot;
      }
      if (pivot == size) {
        return int_polynomial();
      }
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < size; ++r) {
      for (std::size_t c = k + 1; c < size; ++c) {
        m[r][c] = (m[k][k] * m[r][c] - m[r][k] * m[k][c]).divide_exact(prev);
      }
      m[r][k] = int_polynomial();
    }
    prev = m[k][k];
  }
  int_polynomial det = m[size - 1][size - 1];
  return sign < 0 ? det.negated() : det;
}

int_polynomial determinant_cofactor(
    std::vector<std::vector<int_polynomial>> const& m) {
  std::size_t const size = m.size();
  for (auto const& row : m) {
    if (row.size() != size) {
      detail::throw_invalid("determinant of a non-square matrix");
    }
  }
  if (size == 0) {
    return int_polynomial::constant(1);
  }
  if (size == 1) {
    return m[0][0];
  }
  int_polynomial det;
  for (std::size_t c = 0; c < size; ++c) {
    if (m[0][c].is_zero()) {
      continue;
    }
    std::vector<std::vector<int_polynomial>> minor;
    minor.reserve(size - 1);
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<int_polynomial> row;
      row.reserve(size - 1);
      for (std::size_t cc = 0; cc < size; ++cc) {
        if (cc != c) {
          row.push_back(m[r][cc]);
        }
      }
      minor.push_back(std::move(row));
    }
    int_polynomial term = m[0][c] * determinant_cofactor(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace hk

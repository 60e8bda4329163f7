#include "apw/monomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "apw/errors.hpp"

namespace apw {

Monomial Monomial::unit(int num_vars, int var, int power) {
  if (var < 0 || var >= num_vars) throw input_error("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  e[static_cast<std::size_t>(var)] = power;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps.size() != other.exps.size()) return false;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_internal(exps.size() == other.exps.size(), "monomial var count mismatch");
  std::vector<int> e(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) e[i] = exps[i] + other.exps[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  check_internal(divisor.divides(*this), "monomial quotient undefined");
  std::vector<int> e(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) e[i] = exps[i] - divisor.exps[i];
  return Monomial(std::move(e));
}

bool operator<(const Monomial& a, const Monomial& b) {
  check_internal(a.exps.size() == b.exps.size(), "comparing monomials of different rings");
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // inside a degree block the lexicographically larger exponent vector
  // (x0-dominant) is listed first, hence compares smaller
  return std::lexicographical_compare(b.exps.begin(), b.exps.end(),
                                      a.exps.begin(), a.exps.end());
}

namespace {

void enumerate_rec(int remaining_vars, int remaining_degree,
                   std::vector<int>& cur, std::vector<Monomial>& out) {
  if (remaining_vars == 1) {
    cur.push_back(remaining_degree);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = remaining_degree; e >= 0; --e) {
    cur.push_back(e);
    enumerate_rec(remaining_vars - 1, remaining_degree - e, cur, out);
    cur.pop_back();
  }
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::unique_ptr<GradedBasis>> basis_cache;
std::map<std::tuple<int, int, int>, std::unique_ptr<std::vector<std::size_t>>>
    mul_cache;

}  // namespace

std::size_t GradedBasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
  if (it == monomials.end() || !(*it == m))
    throw internal_error("monomial not in graded basis");
  return static_cast<std::size_t>(it - monomials.begin());
}

const GradedBasis& graded_basis(int num_vars, int degree) {
  if (num_vars < 1) throw input_error("graded_basis: need at least one variable");
  if (degree < 0) throw input_error("graded_basis: negative degree");
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = basis_cache[{num_vars, degree}];
  if (!slot) {
    auto b = std::make_unique<GradedBasis>();
    b->num_vars = num_vars;
    b->degree = degree;
    std::vector<int> cur;
    enumerate_rec(num_vars, degree, cur, b->monomials);
    slot = std::move(b);
  }
  return *slot;
}

const std::vector<std::size_t>& variable_mul_table(int num_vars, int degree,
                                                   int var) {
  const GradedBasis& from = graded_basis(num_vars, degree);
  const GradedBasis& to = graded_basis(num_vars, degree + 1);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = mul_cache[{num_vars, degree, var}];
  if (!slot) {
    auto t = std::make_unique<std::vector<std::size_t>>(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
      Monomial m = from.monomials[i];
      m.exps[static_cast<std::size_t>(var)] += 1;
      (*t)[i] = to.index_of(m);
    }
    slot = std::move(t);
  }
  return *slot;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  check_internal(n >= 0, "factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer multi_factorial(const Monomial& m) {
  Integer r = 1;
  for (int e : m.exps) r *= factorial(e);
  return r;
}

}  // namespace apw

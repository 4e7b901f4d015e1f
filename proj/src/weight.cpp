#include "endolie/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace endolie {

static void check_same(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
}

Weight weight_add(const Weight& a, const Weight& b) {
  check_same(a, b);
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  check_same(a, b);
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight weight_scale(i64 c, const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Weight weight_neg(const Weight& a) { return weight_scale(-1, a); }

std::string weight_str(const Weight& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << a[i] << (i + 1 < a.size() ? "," : "");
  os << ")";
  return os.str();
}

RootData::RootData(int r) : rank(r) {
  if (r != 1 && r != 2) throw std::invalid_argument("rank must be 1 or 2");
}

Weight RootData::simple_root(int i) const {
  if (i < 0 || i >= rank) throw std::out_of_range("simple root index");
  if (rank == 1) return {2};
  return i == 0 ? Weight{2, -1} : Weight{-1, 2};
}

Weight RootData::rho() const { return Weight(rank, 1); }

i64 RootData::pairing(const Weight& lambda, int i) const {
  if (static_cast<int>(lambda.size()) != rank)
    throw std::invalid_argument("weight rank mismatch");
  return lambda[i];
}

Weight RootData::reflect(int i, const Weight& lambda) const {
  return weight_sub(lambda, weight_scale(pairing(lambda, i), simple_root(i)));
}

Weight RootData::dot_action(int i, const Weight& lambda) const {
  return weight_sub(reflect(i, weight_add(lambda, rho())), rho());
}

RootData::RootCoords RootData::to_root_basis(const Weight& lambda) const {
  if (static_cast<int>(lambda.size()) != rank)
    throw std::invalid_argument("weight rank mismatch");
  RootCoords rc;
  if (rank == 1) {
    // alpha = 2 omega, so lambda = (lambda_1/2) alpha.
    rc.num = {lambda[0]};
    rc.den = 2;
  } else {
    // Inverse Cartan of A2 is (1/3) [[2,1],[1,2]].
    rc.num = {2 * lambda[0] + lambda[1], lambda[0] + 2 * lambda[1]};
    rc.den = 3;
  }
  return rc;
}

}  // namespace endolie

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bohrlab {

/// No sign change of the residual inside the valid domain.
class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The radius equation families. th1..th4 are the six inequality radii
/// (th6 is the refined sum with the area term, th5 the finite derivative
/// sum); aux_rmp, aux_r2mp and aux_rk are the companion domain radii, and
/// thmb_quartic is the independent quartic 1-2r-r^2-r^3-r^4 = 0 whose root
/// must coincide with th2(1,1,1).
enum class Family {
  th1,
  th2,
  th6,
  th3,
  th5,
  th4,
  aux_rmp,
  aux_r2mp,
  aux_rk,
  thmb_quartic,
};

const char* family_name(Family f);
/// Parses the CLI spelling ("th1", "aux-rk", ...); throws on unknown names.
Family family_from_name(const std::string& name);

struct RadiusProblem {
  Family family = Family::th1;
  int m = 1;
  int p = 1;
  int k = 1;
  int n = 1;  // derivative count for th5
};

struct RadiusResult {
  double radius = 0.0;
  double residual = 0.0;     // signed residual at radius
  double bracket_lo = 0.0;   // sign change certified inside [lo, hi]
  double bracket_hi = 0.0;
  int iterations = 0;
};

/// Signed residual of the family's radius equation, normalized so that the
/// residual tends to -1 as r -> 0+ for every family. Throws std::domain_error
/// outside the family's positivity domain.
double residual(const RadiusProblem& problem, double r);

/// Supremum of the valid scan domain: the root of r^k + r^m = 1 for the
/// derivative-series families (th3/th5/th4), 1 otherwise.
double domain_ceiling(const RadiusProblem& problem);

/// Scans upward from 1e-6 in steps of 1e-3 for the first sign change, then
/// bisects to a bracket of width <= min(tol, 1e-12). tol must be >= 1e-14.
RadiusResult smallest_positive_root(const RadiusProblem& problem, double tol = 1e-12);

/// 3^(-1/k), the root of 3r^k - 1 = 0.
double rk_closed_form(int k);

/// (1 - rk^(2m))^2 / (8 rk^(2m)) with rk = 3^(-1/k); equals 8/9 whenever
/// k = m.
double lambda_coeff(int m, int k);

/// One computed cell of a reproduction table, paired with the published
/// reference value.
struct TableRow {
  std::string quantity;  // e.g. "R_mpk", "r_mp", "r_k", "lambda", "R3", "R5"
  int m = 0;             // 0 marks a parameter the table does not use
  int p = 0;
  int k = 0;
  double value = 0.0;
  double reference = 0.0;
  double abs_diff = 0.0;
};

/// Reproduction tables. Ids: 1 (R_mpk and r_mp), 2 (R2_mpk and r2_mp),
/// 3 (r_k and lambda), 4 (R3_mk), 5 (R5_mk).
std::vector<TableRow> make_table(int id);

}  // namespace bohrlab

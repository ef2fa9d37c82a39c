#pragma once

#include "upmax/weights.hpp"

namespace upmax {

struct Check {
  std::string name;
  double lhs = 0, rhs = 0;
  bool pass = true;
};

struct VerificationResult {
  std::string theorem;
  std::string digest;
  int grid = 0;
  double lhs = 0, rhs = 0;
  double margin = 0;  // rhs / lhs, inf when lhs == 0
  bool pass = true;
  bool vacuous = false;  // an infinite characteristic made the bound empty
  std::string note;
  std::vector<std::pair<std::string, double>> breakdown;
  std::vector<Check> checks;

  void add(const std::string& name, double l, double r, double tol = 1e-9);
  void finish(double l, double r);
  std::string to_json_line() const;
  std::string to_csv_line() const;
};

// lambda list empty: thresholds are derived from the observed maximum.
VerificationResult verify_weak_type(const Workspace& ws, int grid,
                                    std::vector<Rat> lambdas = {});
VerificationResult verify_ap_duality(const Workspace& ws);
VerificationResult verify_strong_c0(const Workspace& ws, int grid);
VerificationResult verify_strong_cinf(const Workspace& ws, int grid);
VerificationResult verify_sawyer(const Workspace& ws, int grid);
VerificationResult verify_bprime(const Workspace& ws, int grid);
VerificationResult verify_aprime_winfty(const Workspace& ws, int grid);

struct CarlesonEntry {
  Cube cube;
  double value = 0;  // a_Q >= 0
};

// entries empty: a_Q is taken from the decomposition of f sigma as in the
// Sawyer route. The hypothesis constant A is the best one over the
// enumerated R; tightness re-runs the hypothesis with A/2 and must fail.
VerificationResult verify_carleson(const Workspace& ws, int grid,
                                   std::vector<CarlesonEntry> entries = {},
                                   bool tightness = true);

VerificationResult verify_theorem(const Workspace& ws, const std::string& id,
                                  int grid);
std::vector<VerificationResult> verify_all(const Workspace& ws, int grid);

const std::vector<std::string>& theorem_ids();

// Shared pieces, exposed for tests.
double lp_norm(const Field<Rat>& f, const Field<Rat>& weight, double p);
double mu_lp_integral(const Workspace& ws, const GridFamily& fm, int grid,
                      const FieldVec& F, double p);

}  // namespace upmax

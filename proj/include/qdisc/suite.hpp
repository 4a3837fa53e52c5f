#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qdisc/report.hpp"

namespace qdisc {

struct SuiteOptions {
  // Monomial range for the integral, its vanishing and the derivation grids.
  int max_k = 8;
  int max_l = 8;
  // The d^2 = 0 grid: k <= 12, |l| <= 6 (169 monomials).
  int d2_max_k = 12;
  int d2_max_l = 6;
  std::vector<int> cones = {2, 3, 4, 5, 6};
  // The no-solution criterion for cone orders 2..crit_max.
  int crit_max = 10;
  std::vector<mpq_class> q_samples = {mpq_class(1, 3), mpq_class(1, 2), mpq_class(2, 3)};
  std::uint64_t seed = 20240601;
  // Number of random monomial pairs in the Leibniz and star batteries.
  int random_pairs = 200;
  // Test-harness hook, see Report::set_corruption.
  std::optional<std::string> corrupt;
};

// Every relation, property battery, cone certificate and integral check,
// followed by one numeric cross-check per q sample.
Report verify_suite(const SuiteOptions& options = {});

// The parts of verify_suite, each appending to `report`.
void verify_d_squared(int max_k, int max_l, Report& report);
void verify_leibniz(std::uint64_t seed, int pairs, int max_k, int max_l, Report& report);
void verify_q_derivations(int max_k, int max_l, Report& report);
void verify_star(std::uint64_t seed, int samples, int max_k, int max_l, Report& report);
void verify_torsion(std::uint64_t seed, int samples, Report& report);
void verify_numeric(const std::vector<mpq_class>& samples, Report& report);

}  // namespace qdisc

// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief Line-oriented text formats for states and operators.
 *
 * State file:
 *
 *     basis 8
 *     state psi
 *       1 [1 2]
 *       -0.5+2e-3i [3 4]
 *     end
 *     mixture rho
 *       0.25 psi
 *       0.75 phi
 *     end
 *     group G = psi phi
 *
 * Operator file:
 *
 *     rank 1
 *     hermitian auto      # or strict
 *     [1] [3] 0.5+0.1i
 *
 * `#` starts a comment. Complex numbers are written `a`, `bi` or `a+bi`.
 */

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pgrade/density.hpp"
#include "pgrade/groupfn.hpp"
#include "pgrade/qoperator.hpp"

namespace pgrade {

struct StateFile {
  struct Mixture {
    std::vector<std::pair<double, std::string>> members;  ///< (weight, state name)
    bool operator==(const Mixture&) const = default;
  };

  int dim = 0;
  std::map<std::string, StateVector> states;
  std::map<std::string, Mixture> mixtures;
  std::map<std::string, std::vector<std::string>> groups;

  bool operator==(const StateFile&) const = default;

  /// Named state or mixture. States are normalized; mixture weights are rescaled to sum to 1.
  MixedState mixed(const std::string& name) const;
  const StateVector& state(const std::string& name) const;
  GroupProduct group(const std::string& name) const;
};

/// Throws ParseError with the offending line.
StateFile parse_state_file(std::istream& in);
StateFile read_state_file(const std::string& path);
/// Coefficients use 17 significant digits, so parsing the output reproduces every value.
std::string write_state_file(const StateFile& file);

/// Duplicate (I, J) keys and Hermiticity violations beyond 1e-12 raise ParseError.
QOperator parse_operator_file(std::istream& in);
QOperator read_operator_file(const std::string& path);

Complex parse_complex(const std::string& text);
std::string format_complex(Complex c);

}  // namespace pgrade

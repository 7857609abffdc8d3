#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "uclab/construction.hpp"
#include "uclab/family.hpp"

namespace uclab::cli {

enum class CellStatus { Pass, Fail, Skip };

struct CellResult {
  BlockParams params;
  std::string total;  // |F| from the count formula, decimal
  CellStatus status = CellStatus::Pass;
  std::string detail;  // first mismatch for Fail, reason for Skip
};

/// Hook applied to the materialized family before it is compared; used to
/// check that the harness actually notices a corrupted build.
using FamilyFault = std::function<Family(const Family&)>;

/// Compares the structured representation against the union-closure oracle
/// and the class-counting metrics against direct computation on one cell.
CellResult check_cell(const BlockParams& params, std::size_t cap, const FamilyFault& fault = {});

/// Drops the largest member.
Family drop_last_member(const Family& f);

}  // namespace uclab::cli

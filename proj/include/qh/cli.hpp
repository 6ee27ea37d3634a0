#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qh/cyclotomic.hpp"

namespace qh {

/// A scalar token: "p/q" (rational) or "zN^k" / "zN" (the root of unity exp(2 pi i k / N)).
struct ScalarToken {
  int root_order = 1;  // N, 1 for rationals
  long exponent = 0;
  mpq_class rational;
  bool is_root = false;

  Cyc at(int conductor) const;
};

ScalarToken parse_scalar(const std::string& text);

/// Runs the command line; exit codes: 0 all checks passed, 1 a check failed, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qh

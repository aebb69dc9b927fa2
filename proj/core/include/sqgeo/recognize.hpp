#pragma once

#include "sqgeo/certificate.hpp"
#include "sqgeo/oracle.hpp"
#include "sqgeo/partition.hpp"

namespace sqgeo {

struct RecognizeOptions {
  /// Let the exhaustive search decide instances the theory leaves open.
  bool allow_oracle = false;
  int oracle_bound = kDefaultOracleBound;
};

/// Standing-assumption audit, then the necessary conditions (NO on
/// failure), then the sufficient conditions and order construction (YES).
/// Anything in between is UNDECIDED unless the oracle may decide it.
/// A constructed order pair that fails verification throws InternalError.
Certificate recognize(const Graph& g, const BabPartition& p, const RecognizeOptions& options = {});

/// YES certificate (orders, completions, embedding) for a verified pair.
Certificate certify_orders(const Graph& g, const LinearOrder& o1, const LinearOrder& o2,
                           std::string source);

}  // namespace sqgeo

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqgeo/verify.hpp"

namespace sqgeo {

enum class Verdict { Yes, No, Undecided };

const char* to_string(Verdict v);

/// Outcome of recognition in a self-contained, re-checkable form.
///
/// YES carries both orders, both completions and exact coordinates; NO the
/// failed condition plus witness lines; UNDECIDED the clause that blocked a
/// decision.
struct Certificate {
  Verdict verdict = Verdict::Undecided;
  std::string source;     // "theory" or "oracle"
  std::string condition;  // failed or blocking condition; empty for YES
  std::vector<std::string> witness;

  std::optional<LinearOrder> order1;
  std::optional<LinearOrder> order2;
  std::vector<Edge> completion1;
  std::vector<Edge> completion2;
  std::optional<Embedding> embedding;

  bool operator==(const Certificate&) const;
};

/// Text form; fractions are written as p/q, never as decimals.
///
///   sqgeo-certificate 1
///   verdict YES|NO|UNDECIDED
///   source theory|oracle
///   condition <name>             (NO / UNDECIDED)
///   witness <text>               (zero or more)
///   order1 <ids...>              (YES)
///   order2 <ids...>
///   completion1 <k>  then k lines "<u> <v>"
///   completion2 <k>  then k lines
///   coordinates <n>  then n lines "<v> <x> <y>"
///   end
std::string emit_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

/// Same content as JSON (fractions kept as "p/q" strings).
std::string certificate_to_json(const Certificate& c);

struct CertificateCheck {
  bool ok = true;
  std::string message;
};

/// Re-checks a YES certificate against `g` from its own content: the listed
/// completions must equal those recomputed from the orders and be disjoint,
/// and the coordinates must pass the exact L∞ test. NO and UNDECIDED
/// certificates carry nothing checkable and pass trivially.
CertificateCheck reverify_certificate(const Graph& g, const Certificate& c);

}  // namespace sqgeo

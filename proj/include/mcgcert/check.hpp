#ifndef MCGCERT_CHECK_HPP
#define MCGCERT_CHECK_HPP

#include <string>

namespace mcgcert {

enum class Rep { homology, permutation, both, symbolic };
enum class Verdict { pass, fail, skipped };

std::string rep_name(Rep r);
std::string verdict_name(Verdict v);

// One verified statement.  `anchor` ties the check to a named construction
// rule (R1..R12, a curve-action label, ...) or is "plumbing".  Definitional
// checks hold by construction of the default chart data and are excluded
// from the substantive pass count.
struct CheckResult {
  std::string id;
  std::string description;
  std::string anchor;
  Rep rep = Rep::symbolic;
  Verdict verdict = Verdict::pass;
  bool definitional = false;
  std::string detail;  // failure context, empty on pass
};

// Orders ids with numeric segments compared as numbers ("c2" < "c10").
bool check_id_less(const std::string& a, const std::string& b);

}  // namespace mcgcert

#endif

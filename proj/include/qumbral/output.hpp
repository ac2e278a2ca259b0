#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qumbral/families.hpp"
#include "qumbral/identities.hpp"

namespace qumbral {

enum class OutputFormat { json, csv, latex };

OutputFormat output_format_from_string(const std::string& name);  // OutOfRange

// A rendered command result plus the process exit status the CLI should
// return (0 success, 1 identity failure, 2 usage/parse error — parse errors
// surface as exceptions before a document exists).
struct OutputDocument {
  OutputFormat format = OutputFormat::json;
  std::string body;
  int exit_code = 0;
};

// `table`: numbers and polynomials of one family.  order_r is the family
// order (1 = plain); at_q, when set, evaluates every entry at that rational.
OutputDocument cmd_table(FamilyKind kind, int n_max, int order_r,
                         OutputFormat format,
                         const std::optional<BigRat>& at_q);

// `expand`: parses `expression` and expands it in the q-Euler basis (r = 1)
// or the order-r basis (r >= 2); the reconstruction sum is re-evaluated
// exactly and reported.
OutputDocument cmd_expand(const std::string& expression, int r,
                          OutputFormat format);

// `eval`: parses `expression`, optionally substitutes x then q.
OutputDocument cmd_eval(const std::string& expression,
                        const std::optional<BigRat>& at_x,
                        const std::optional<BigRat>& at_q,
                        OutputFormat format);

// `verify`: runs catalog entries ("all" or one id) at the given bounds.
// numeric_points adds the q-specialization cross-check; corruption, when
// present, is planted before checking (diagnostic path for exercising
// failures end to end).  include_timings controls whether measured times
// appear in the document; by default elapsed_ms renders as 0 so identical
// invocations stay byte-identical.
OutputDocument cmd_verify(const std::string& id, int n_max, int r_max,
                          OutputFormat format, int jobs,
                          const std::vector<BigRat>& numeric_points,
                          const std::optional<Corruption>& corruption,
                          bool include_timings);

}  // namespace qumbral

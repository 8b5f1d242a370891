#ifndef MONODROMY_CHECKS_HPP
#define MONODROMY_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monodromy/constants.hpp"
#include "monodromy/int_matrix.hpp"
#include "monodromy/symplectic.hpp"

namespace monodromy {

// One named check: pass/fail, a human-readable summary with exact counts,
// and (on failure, always) a JSON witness pinpointing the offender.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string details;
  std::optional<nlohmann::ordered_json> witness;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::string version;
  std::vector<CheckResult> results;
  std::vector<double> timings_ms;  // parallel to results; not in the JSON

  bool all_passed() const;
};

struct CheckParams {
  std::uint64_t seed = 0;
  std::size_t census_samples = 1000;     // charpoly census words
  std::size_t order_samples = 1000;      // order-classification words
  std::size_t display_samples = 500;     // conjugation-display words
  std::size_t transvection_samples = 100;
  unsigned max_len = 12;                 // letters per sampled word
  unsigned apow_max = 25;                // verify A~^n for n in [0, apow_max]
  std::uint64_t closure_cap = 10'000;
};

// Level-(5,5) residue pattern alone: diagonal = 1 and entries
// (2,1),(3,1),(3,2),(3,4),(4,1),(4,2) = 0 mod 5 (1-based positions).
bool gamma55_residue_pattern(const IntMatrix& x);

// Gamma(5,5): symplectic for the given form AND the residue pattern.
bool gamma55_member(const IntMatrix& x, const SymplecticForm& form);

// Gamma~(5,5): Gamma(5,5) plus, writing (3,1) = 5*x31, (3,2) = 5*x32 and
// x12 for entry (1,2): x31 = 3*x12 and x32 = 4*x12^2 + 4*x12, mod 5.
bool gamma55_tilde_member(const IntMatrix& x, const SymplecticForm& form);

// The named checks, in canonical report order.
CheckResult check_symplectic_form(const MonodromyConstants& k);
CheckResult check_lemma1(const MonodromyConstants& k);
CheckResult check_lemma1_with(const IntMatrix& p, const IntMatrix& a,
                              const IntMatrix& t);
CheckResult check_apow_formula(const MonodromyConstants& k,
                               unsigned n_max = 25);
CheckResult check_theorem(const MonodromyConstants& k,
                          std::uint64_t cap = 10'000);
CheckResult check_charpoly_census(const MonodromyConstants& k,
                                  std::size_t samples, unsigned max_len,
                                  std::uint64_t seed);
CheckResult check_order_classification(const MonodromyConstants& k,
                                       std::size_t samples, unsigned max_len,
                                       std::uint64_t seed);
CheckResult check_conjugation_display(const MonodromyConstants& k,
                                      std::size_t samples, unsigned max_len,
                                      std::uint64_t seed);
CheckResult check_cor52(const MonodromyConstants& k, std::size_t samples,
                        std::uint64_t seed);
CheckResult check_sp_order_formula();

// The canonical check-name list, in report order.
const std::vector<std::string>& all_check_names();

// Runs the named subset (canonical order, regardless of request order).
// Unknown names throw std::invalid_argument.
VerificationReport run_checks(const MonodromyConstants& k,
                              const CheckParams& params,
                              const std::vector<std::string>& names);
VerificationReport run_all(const MonodromyConstants& k,
                           const CheckParams& params = {});

// {"seed":…, "version":…, "checks":[…], "all_passed":…} — timings are
// deliberately absent so identical seeds give byte-identical JSON.
nlohmann::ordered_json report_to_json(const VerificationReport& r);

// Aligned plain text, one line per check, timings appended.
std::string report_to_text(const VerificationReport& r);

}  // namespace monodromy

#endif

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tautcalc/loci.hpp"
#include "tautcalc/pairing.hpp"

namespace tautcalc {

struct VerificationReport {
  std::string name;
  bool pass = false;
  std::vector<std::string> witnesses;  // nonzero pairings or mismatched numbers; never empty on failure
  std::size_t spanning_size = 0;       // test strata used (0 where no pairing is involved)
  long milliseconds = 0;
};

/// Deliberate defects used to show that a check can fail.
enum class Mutation {
  Lemma41DropGamma,        // leave gamma_{1:} out of the right-hand side
  Delta2PsiGenusZeroSide,  // put psi on the genus-zero branch of delta_{2,psi}
  FamilyPerturb27,         // add one to the computed family product
};

struct CheckOptions {
  loci::Transcription transcription;
  int jobs = 0;  // 0: hardware concurrency
  std::set<Mutation> mutations;
};

/// Runs the named class identities. Intermediate classes and pairing vectors are
/// cached per instance; an instance is not meant to be shared between threads.
class Verifier {
 public:
  explicit Verifier(CheckOptions options = {});
  ~Verifier();
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  /// eq1-forms, eq2-eq3, eq2-eq4, lemma41, xi-theta-sym, thm2-prop51, thm2-s3,
  /// thm2-push, delta2psi, sign-cert, testfamily.
  static const std::vector<std::string>& check_names();
  static bool known(const std::string& name);

  /// Throws std::invalid_argument for an unknown name.
  VerificationReport run(const std::string& name);
  std::vector<VerificationReport> run_all();

 private:
  struct Cache;
  bool mutated(Mutation m) const { return options_.mutations.count(m) > 0; }
  int jobs() const;

  VerificationReport eq1_forms();
  VerificationReport eq2_eq3();
  VerificationReport eq2_eq4();
  VerificationReport lemma41();
  VerificationReport xi_theta_sym();
  VerificationReport thm2_prop51();
  VerificationReport thm2_s3();
  VerificationReport thm2_push();
  VerificationReport delta2psi();
  VerificationReport sign_cert();
  VerificationReport testfamily();

  CheckOptions options_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace tautcalc

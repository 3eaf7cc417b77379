#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zfr/interval.hpp"

namespace zfr {

enum class Status { proved, failed, inconclusive };

std::string to_string(Status s);
std::optional<Status> status_from_string(const std::string& s);

// Outcome record of one verified inequality.
struct Certificate {
  std::string id;
  Status status = Status::inconclusive;
  XInterval lhs;
  XInterval rhs;
  std::string range_note;  // quantifier domain covered
  int precision_bits = 0;
  std::string note;

  // String forms used for serialization; populated on first serialization
  // (or by the parser) so that parse -> print is a fixpoint.
  mutable std::string lhs_str, rhs_str;

  std::string line() const;
};

// Parses a "CHECK ..." line; returns nullopt for malformed input.
std::optional<Certificate> parse_certificate_line(const std::string& line,
                                                  mpfr_prec_t prec = current_prec());

struct CertificateFile {
  std::vector<Certificate> checks;
  size_t total = 0, proved = 0, failed = 0, inconclusive = 0;
};

std::string serialize_certificates(const std::vector<Certificate>& certs);
CertificateFile parse_certificates(const std::string& text, mpfr_prec_t prec = current_prec());

// Count-based exit code: 0 all proved, 1 any failed, 2 inconclusive only.
int exit_code_for(const std::vector<Certificate>& certs);

// Registry of the paper's printed constants, keyed by their printed decimal.
// `--perturb NAME=VALUE` rebinds a name; every certifier comparison reads
// through this registry so perturbations flip the affected certificates.
class PaperConstants {
 public:
  static PaperConstants& instance();

  XInterval get(const std::string& name, mpfr_prec_t prec = current_prec()) const;
  std::string get_string(const std::string& name) const;
  bool is_perturbed(const std::string& name) const;

  void perturb(const std::string& name, const std::string& value);
  void clear_perturbations();

 private:
  PaperConstants();
  std::map<std::string, std::string> defaults_;
  std::map<std::string, std::string> overrides_;
};

}  // namespace zfr

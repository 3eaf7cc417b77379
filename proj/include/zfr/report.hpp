#pragma once

#include <string>
#include <vector>

#include "zfr/certify.hpp"

namespace zfr {

enum class ReportFormat { text, tsv, records };

struct ConstantRow {
  std::string name;
  XInterval value;
  std::string provenance;  // "paper-printed" or "derived"
  std::string printed;     // the paper's print when one exists
};

// Every certified constant surfaced by the constants command.
std::vector<ConstantRow> constants_table(mpfr_prec_t prec = current_prec());

std::string format_constants(const std::vector<ConstantRow>& rows, size_t digits,
                             ReportFormat fmt);
// Parses a tsv constants report back into rows (values re-enclosed outward).
std::vector<ConstantRow> parse_constants_tsv(const std::string& text,
                                             mpfr_prec_t prec = current_prec());

// Accepts plain decimals, scientific notation, and "e^<decimal>".
XInterval parse_t(const std::string& text, mpfr_prec_t prec = current_prec());

}  // namespace zfr

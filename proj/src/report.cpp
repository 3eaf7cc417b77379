#include "zfr/report.hpp"

#include <sstream>

#include "zfr/arith.hpp"
#include "zfr/zero_counts.hpp"
#include "zfr/zeta.hpp"

namespace zfr {

std::vector<ConstantRow> constants_table(mpfr_prec_t prec) {
  PrecGuard pg(prec);
  std::vector<ConstantRow> rows;
  KernelSystem ks = build_kernel_system(paper_poly(), 197, prec);
  const CosinePolynomial& p = ks.poly;
  auto add = [&](const std::string& n, const XInterval& v, const std::string& prov,
                 const std::string& printed = "") {
    rows.push_back({n, v, prov, printed});
  };
  add("theta", ks.theta, "paper-printed", "1.152214629976363048877");
  add("w0", ks.w0, "paper-printed", "6.82602968445295450905");
  add("W0", ks.W0, "derived");
  add("Wm1", ks.Wm1, "derived");
  add("c0", ks.c0, "paper-printed", "16.2983216223932350562");
  add("c1", ks.c1, "paper-printed", "19.9352005926244107856");
  add("c2", ks.c2, "paper-printed", "9.4813169452950521682");
  add("c3", ks.c3, "paper-printed", "3.945405755634895592");
  add("H197", ks.H_R, "paper-printed", "66.3307 (misprint of 67.3307)");
  add("c4", ks.c4, "paper-printed", "1.055656");
  add("c5", ks.c5, "derived");
  for (int j = 0; j <= 5; ++j)
    add("b" + std::to_string(j), p.b(j, prec), "paper-printed", p.b_rat(j).str());
  {
    MaxResult mr = sup_exp_w(ks, 1e-8);
    add("sup_exp_w", mr.value, "paper-printed", "7.23 (upper bound)");
  }
  add("mertens_E", mertens_E(prec), "derived");
  {
    ZeroCountConstants zc = zerocount_constants(XInterval::from_decimal("0.00019", prec), prec);
    add("C1", zc.C1, "paper-printed", "0.2297 (upper bound)");
    add("C2", zc.C2, "paper-printed", "24.77 (upper bound)");
  }
  {
    XInterval b0 = p.b(0, prec), b5 = p.b(5, prec);
    XInterval lead = b5 / b0 * pow13(1 + b0 / b5) * pow13(XInterval::exact(9, prec) / 16);
    add("leading_constant", lead, "paper-printed", "2.99968 (upper bound)");
    XInterval C = XInterval::exact(4, prec) / 3;
    add("lazymainterm", (b5 * (XInterval::exact(1, prec) / 3 + C / 2) + b0 / 3) / pow23(C),
        "paper-printed", "30.26576 (upper bound)");
  }
  {
    HypothesisAB h = ford_hypothesis(prec);
    SupXResult sx = sup_X(h, XInterval::exact(1944, prec), prec);
    add("supX", sx.sup, "paper-printed", "5.61718 (upper bound)");
    XInterval m1 = M1_of(XInterval::exact(1944, prec), h,
                         PaperConstants::instance().get("5.61718", prec), prec);
    add("B23_over_M1", pow23(h.B) / m1, "paper-printed", "61.306");
  }
  return rows;
}

std::string format_constants(const std::vector<ConstantRow>& rows, size_t digits,
                             ReportFormat fmt) {
  std::ostringstream out;
  if (fmt == ReportFormat::tsv) {
    out << "name\tlo\thi\tprovenance\tprinted\n";
    for (const auto& r : rows)
      out << r.name << "\t" << r.value.lo().str(digits, MPFR_RNDD) << "\t"
          << r.value.hi().str(digits, MPFR_RNDU) << "\t" << r.provenance << "\t"
          << (r.printed.empty() ? "-" : r.printed) << "\n";
    return out.str();
  }
  if (fmt == ReportFormat::records) {
    for (const auto& r : rows)
      out << "CONST " << r.name << " value=[" << r.value.lo().str(digits, MPFR_RNDD) << ","
          << r.value.hi().str(digits, MPFR_RNDU) << "] prov=" << r.provenance
          << " printed=" << (r.printed.empty() ? "-" : r.printed) << "\n";
    return out.str();
  }
  for (const auto& r : rows) {
    out << r.name << " = " << r.value.str(digits) << "  [" << r.provenance << "]";
    if (!r.printed.empty()) out << "  paper: " << r.printed;
    out << "\n";
  }
  return out.str();
}

std::vector<ConstantRow> parse_constants_tsv(const std::string& text, mpfr_prec_t prec) {
  std::vector<ConstantRow> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, '\t')) f.push_back(tok);
    if (f.size() < 5) continue;
    ConstantRow r;
    r.name = f[0];
    r.value = XInterval(XReal::from_decimal(f[1], MPFR_RNDD, prec),
                        XReal::from_decimal(f[2], MPFR_RNDU, prec));
    r.provenance = f[3];
    r.printed = f[4] == "-" ? "" : f[4];
    rows.push_back(std::move(r));
  }
  return rows;
}

XInterval parse_t(const std::string& text, mpfr_prec_t prec) {
  if (text.rfind("e^", 0) == 0) {
    XInterval ex = XInterval::from_decimal(text.substr(2), prec);
    if (ex.hi().cmp_si(1000000000000L) > 0)
      throw DomainError("t exponent too large to represent");
    return exp(ex);
  }
  return XInterval::from_decimal(text, prec);
}

}  // namespace zfr

#include "zfr/certificate.hpp"

#include <sstream>

namespace zfr {

std::string to_string(Status s) {
  switch (s) {
    case Status::proved: return "proved";
    case Status::failed: return "failed";
    case Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::optional<Status> status_from_string(const std::string& s) {
  if (s == "proved") return Status::proved;
  if (s == "failed") return Status::failed;
  if (s == "inconclusive") return Status::inconclusive;
  return std::nullopt;
}

namespace {
constexpr size_t kSerDigits = 30;
}

std::string Certificate::line() const {
  if (lhs_str.empty())
    lhs_str = "[" + lhs.lo().str(kSerDigits, MPFR_RNDD) + "," +
              lhs.hi().str(kSerDigits, MPFR_RNDU) + "]";
  if (rhs_str.empty())
    rhs_str = "[" + rhs.lo().str(kSerDigits, MPFR_RNDD) + "," +
              rhs.hi().str(kSerDigits, MPFR_RNDU) + "]";
  std::string text = range_note;
  if (!note.empty()) {
    if (!text.empty()) text += " | ";
    text += note;
  }
  if (text.empty()) text = "-";
  return "CHECK " + id + " " + to_string(status) + " lhs=" + lhs_str + " rhs=" + rhs_str +
         " bits=" + std::to_string(precision_bits) + " note=" + text;
}

namespace {

std::optional<XInterval> parse_bracketed(const std::string& tok, mpfr_prec_t prec,
                                         std::string* raw) {
  if (tok.size() < 5 || tok.front() != '[' || tok.back() != ']') return std::nullopt;
  auto comma = tok.find(',');
  if (comma == std::string::npos) return std::nullopt;
  std::string lo = tok.substr(1, comma - 1);
  std::string hi = tok.substr(comma + 1, tok.size() - comma - 2);
  *raw = tok;
  try {
    return XInterval(XReal::from_decimal(lo, MPFR_RNDD, prec),
                     XReal::from_decimal(hi, MPFR_RNDU, prec));
  } catch (const ZfrError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<Certificate> parse_certificate_line(const std::string& text, mpfr_prec_t prec) {
  std::istringstream in(text);
  std::string kw, id, status_s, lhs_tok, rhs_tok, bits_tok;
  if (!(in >> kw >> id >> status_s >> lhs_tok >> rhs_tok >> bits_tok)) return std::nullopt;
  if (kw != "CHECK") return std::nullopt;
  auto st = status_from_string(status_s);
  if (!st) return std::nullopt;
  if (lhs_tok.rfind("lhs=", 0) != 0 || rhs_tok.rfind("rhs=", 0) != 0 ||
      bits_tok.rfind("bits=", 0) != 0)
    return std::nullopt;
  Certificate c;
  c.id = id;
  c.status = *st;
  auto lhs = parse_bracketed(lhs_tok.substr(4), prec, &c.lhs_str);
  auto rhs = parse_bracketed(rhs_tok.substr(4), prec, &c.rhs_str);
  if (!lhs || !rhs) return std::nullopt;
  c.lhs = *lhs;
  c.rhs = *rhs;
  c.precision_bits = std::stoi(bits_tok.substr(5));
  std::string rest;
  std::getline(in, rest);
  auto pos = rest.find("note=");
  if (pos == std::string::npos) return std::nullopt;
  std::string note = rest.substr(pos + 5);
  auto bar = note.find(" | ");
  if (bar != std::string::npos) {
    c.range_note = note.substr(0, bar);
    c.note = note.substr(bar + 3);
  } else if (note != "-") {
    c.range_note = note;
  }
  return c;
}

std::string serialize_certificates(const std::vector<Certificate>& certs) {
  std::ostringstream out;
  size_t proved = 0, failed = 0, inconclusive = 0;
  for (const auto& c : certs) {
    out << c.line() << "\n";
    switch (c.status) {
      case Status::proved: ++proved; break;
      case Status::failed: ++failed; break;
      case Status::inconclusive: ++inconclusive; break;
    }
  }
  out << "SUMMARY total=" << certs.size() << " proved=" << proved << " failed=" << failed
      << " inconclusive=" << inconclusive << "\n";
  return out.str();
}

CertificateFile parse_certificates(const std::string& text, mpfr_prec_t prec) {
  CertificateFile f;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("SUMMARY", 0) == 0) {
      std::istringstream s(line);
      std::string kw, tok;
      s >> kw;
      while (s >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        size_t v = std::stoul(tok.substr(eq + 1));
        std::string k = tok.substr(0, eq);
        if (k == "total") f.total = v;
        else if (k == "proved") f.proved = v;
        else if (k == "failed") f.failed = v;
        else if (k == "inconclusive") f.inconclusive = v;
      }
      continue;
    }
    auto c = parse_certificate_line(line, prec);
    if (c) f.checks.push_back(std::move(*c));
  }
  return f;
}

int exit_code_for(const std::vector<Certificate>& certs) {
  bool any_failed = false, any_inconclusive = false;
  for (const auto& c : certs) {
    if (c.status == Status::failed) any_failed = true;
    if (c.status == Status::inconclusive) any_inconclusive = true;
  }
  if (any_failed) return 1;
  if (any_inconclusive) return 2;
  return 0;
}

PaperConstants::PaperConstants() {
  const char* pairs[][2] = {
      {"2.99968", "2.99968"},   {"0.16521", "0.16521"},   {"0.184833", "0.184833"},
      {"0.1651146", "0.1651146"}, {"0.1876", "0.1876"},   {"3.5146", "3.5146"},
      {"1.471", "1.471"},       {"66.3307", "66.3307"},   {"67.3307", "67.3307"},
      {"1.055656", "1.055656"}, {"7.23", "7.23"},         {"2.06", "2.06"},
      {"61.306", "61.306"},     {"5.61718", "5.61718"},   {"10.3", "10.3"},
      {"0.2297", "0.2297"},     {"24.77", "24.77"},       {"0.13861", "0.13861"},
      {"0.194", "0.194"},       {"1.66462", "1.66462"},   {"1.6166", "1.6166"},
      {"0.009783", "0.009783"}, {"0.00181", "0.00181"},   {"0.265271", "0.265271"},
      {"0.197312", "0.197312"}, {"0.98525", "0.98525"},   {"0.0389", "0.0389"},
      {"0.00514", "0.00514"},   {"30.26576", "30.26576"}, {"0.953", "0.953"},
      {"0.010122", "0.010122"}, {"0.99988", "0.99988"},   {"86", "86"},
      {"104", "104"},           {"59.8", "59.8"},         {"31.76", "31.76"},
      {"1.1534", "1.1534"},     {"0.124193", "0.124193"}, {"0.23096", "0.23096"},
      {"0.954863", "0.954863"}, {"0.006534", "0.006534"}, {"0.0043556", "0.0043556"},
      {"0.1529", "0.1529"},     {"0.134", "0.134"},       {"8.21", "8.21"},
      {"1.505236", "1.505236"}, {"0.1313", "0.1313"},     {"0.06456", "0.06456"},
      {"0.66", "0.66"},         {"9.64590880", "9.64590880"}, {"0.055071", "0.055071"},
      {"2.9997", "2.9997"},     {"0.0084", "0.0084"},     {"0.014", "0.014"},
      {"1139", "1139"},         {"5110.6", "5110.6"},     {"183", "183"},
      {"17.49", "17.49"},       {"13.75563", "13.75563"}, {"2.7545", "2.7545"},
      {"3.33", "3.33"},         {"14.435", "14.435"},     {"3.495", "3.495"},
      {"14.44", "14.44"},       {"3.59", "3.59"},         {"6.238712", "6.238712"},
      {"522.75", "522.75"},     {"0.26974", "0.26974"},   {"8.47801", "8.47801"},
  };
  for (auto& p : pairs) defaults_[p[0]] = p[1];
}

PaperConstants& PaperConstants::instance() {
  static PaperConstants pc;
  return pc;
}

XInterval PaperConstants::get(const std::string& name, mpfr_prec_t prec) const {
  return XInterval::from_decimal(get_string(name), prec);
}

std::string PaperConstants::get_string(const std::string& name) const {
  auto o = overrides_.find(name);
  if (o != overrides_.end()) return o->second;
  auto d = defaults_.find(name);
  if (d != defaults_.end()) return d->second;
  throw DomainError("unknown paper constant: " + name);
}

bool PaperConstants::is_perturbed(const std::string& name) const {
  return overrides_.count(name) != 0;
}

void PaperConstants::perturb(const std::string& name, const std::string& value) {
  if (!defaults_.count(name)) throw DomainError("unknown paper constant: " + name);
  overrides_[name] = value;
}

void PaperConstants::clear_perturbations() { overrides_.clear(); }

}  // namespace zfr

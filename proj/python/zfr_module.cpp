#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zfr/arith.hpp"
#include "zfr/report.hpp"
#include "zfr/zeta.hpp"

namespace py = pybind11;

namespace {

using zfr::XInterval;

std::pair<std::string, std::string> iv(const XInterval& x, size_t digits = 30) {
  return {x.lo().str(digits, MPFR_RNDD), x.hi().str(digits, MPFR_RNDU)};
}

XInterval from_str(const std::string& s, mpfr_prec_t prec) {
  return XInterval::from_decimal(s, prec);
}

}  // namespace

PYBIND11_MODULE(_zfr, m) {
  m.doc() = "certified evaluation of an explicit Vinogradov-Korobov zero-free region";

  m.def(
      "zeta",
      [](const std::string& sigma, long bits) {
        return iv(zfr::zeta_real(from_str(sigma, bits), bits));
      },
      py::arg("sigma"), py::arg("bits") = 256,
      "enclosure of zeta(sigma) for real sigma > 1, as decimal strings (lo, hi)");

  m.def(
      "hurwitz_zeta",
      [](const std::string& sigma, const std::string& t, const std::string& u, long bits) {
        auto z = zfr::hurwitz_zeta(from_str(sigma, bits), from_str(t, bits), from_str(u, bits),
                                   bits);
        return std::make_pair(iv(z.re), iv(z.im));
      },
      py::arg("sigma"), py::arg("t"), py::arg("u"), py::arg("bits") = 256,
      "enclosure of zeta(sigma + i t, u) as ((re_lo, re_hi), (im_lo, im_hi))");

  m.def(
      "cosine_poly",
      [](const std::string& a1, const std::string& a2) {
        auto p = zfr::coefficients_from(a1, a2);
        std::map<std::string, std::string> out;
        for (int j = 0; j <= 5; ++j) out["b" + std::to_string(j)] = p.b_rat(j).str();
        return out;
      },
      py::arg("a1") = "0.225", py::arg("a2") = "0.9",
      "exact rational coefficients b0..b5 of the nonnegative cosine polynomial");

  m.def(
      "kernel_constants",
      [](long bits) {
        auto ks = zfr::build_kernel_system(zfr::paper_poly(), 197, bits);
        std::map<std::string, std::pair<std::string, std::string>> out;
        out["theta"] = iv(ks.theta);
        out["w0"] = iv(ks.w0);
        out["W0"] = iv(ks.W0);
        out["Wm1"] = iv(ks.Wm1);
        out["c0"] = iv(ks.c0);
        out["c1"] = iv(ks.c1);
        out["c2"] = iv(ks.c2);
        out["c3"] = iv(ks.c3);
        out["H197"] = iv(ks.H_R);
        out["c4"] = iv(ks.c4);
        out["c5"] = iv(ks.c5);
        return out;
      },
      py::arg("bits") = 256, "the theta/w/W/c constants of the smoothing kernel");

  m.def(
      "region_width",
      [](const std::string& profile, long q, const std::string& t, long bits) {
        XInterval ti = zfr::parse_t(t, bits);
        if (profile == "mccurley") return iv(zfr::width_mccurley(q, ti, bits));
        for (const auto& p : zfr::region_profiles(bits))
          if (p.name == profile) return iv(zfr::width(p, q, ti, bits));
        throw zfr::DomainError("unknown profile: " + profile);
      },
      py::arg("profile"), py::arg("q"), py::arg("t"), py::arg("bits") = 256,
      "1 - sigma width of a named zero-free region; t accepts 'e^N'");

  m.def(
      "best_width",
      [](long q, const std::string& t, long bits) {
        auto bw = zfr::best_width(q, zfr::parse_t(t, bits), bits);
        return std::make_tuple(bw.profile, iv(bw.width).first, iv(bw.width).second);
      },
      py::arg("q"), py::arg("t"), py::arg("bits") = 256,
      "(profile, width_lo, width_hi) of the widest applicable region");

  m.def(
      "mertens_E", [](long bits) { return iv(zfr::mertens_E(bits)); }, py::arg("bits") = 256,
      "the Mertens-type constant E = -gamma - sum_p sum_{n>=2} log p / p^n");

  m.def(
      "corollary_sweep",
      [](long limit, long bits) {
        auto r = zfr::corollary_last_check(limit, bits);
        return std::make_tuple(r.all_hold, r.min_margin_q, iv(r.min_margin).first);
      },
      py::arg("limit") = 2310, py::arg("bits") = 256,
      "(all_hold, argmin q, min margin) of sum_{p|q} log p/(p-1) < loglog q + 0.66");

  m.def(
      "verify",
      [](const std::vector<std::string>& suites, long bits,
         const std::map<std::string, std::string>& perturb) {
        auto& pc = zfr::PaperConstants::instance();
        pc.clear_perturbations();
        for (const auto& [k, v] : perturb) pc.perturb(k, v);
        auto certs = zfr::run_suites(suites.empty() ? std::vector<std::string>{"all"} : suites,
                                     bits);
        pc.clear_perturbations();
        py::list out;
        for (const auto& c : certs) {
          py::dict d;
          d["id"] = c.id;
          d["status"] = zfr::to_string(c.status);
          d["lhs"] = iv(c.lhs);
          d["rhs"] = iv(c.rhs);
          d["bits"] = c.precision_bits;
          d["range"] = c.range_note;
          d["note"] = c.note;
          out.append(std::move(d));
        }
        return py::make_tuple(zfr::exit_code_for(certs), out);
      },
      py::arg("suites") = std::vector<std::string>{}, py::arg("bits") = 256,
      py::arg("perturb") = std::map<std::string, std::string>{},
      "(exit_code, certificates) from the certification suites");

  m.def("suite_names", [] { return zfr::all_suite_names(); });

  m.attr("__version__") = "1.0.0";
}

#include "zfr/quadrature.hpp"

#include <deque>
#include <vector>

namespace zfr {

namespace {

struct Panel {
  XInterval mid;
  XReal half;
  XInterval value;  // integral enclosure over the panel
  bool valid = true;
};

Panel eval_panel(const SeriesFn& f, const XInterval& mid, const XReal& half, size_t order,
                 mpfr_prec_t prec) {
  // wide panels can push composed models outside their convergence
  // region; such panels are flagged and split
  try {
    TSeries x = TSeries::var(mid, half, order, prec);
    TSeries y = f(x);
    return Panel{mid, half, y.integral(), true};
  } catch (const DomainError&) {
    return Panel{mid, half, XInterval(prec), false};
  }
}

}  // namespace

XInterval integrate(const SeriesFn& f, const XInterval& a, const XInterval& b,
                    const QuadOptions& opt) {
  const mpfr_prec_t prec = opt.prec ? opt.prec : current_prec();
  if (!(a.lo() <= b.hi())) throw DomainError("integrate: a > b");
  XInterval len = b - a;
  if (len.hi().sign() <= 0) return XInterval(prec);

  XReal tol(prec);
  mpfr_set_ui_2exp(tol.get(), 1, static_cast<mpfr_exp_t>(opt.tol_log2), MPFR_RNDN);

  XInterval mid0 = (a + b) / 2;
  XReal half0(prec);
  mpfr_div_2ui(half0.get(), len.hi().get(), 1, MPFR_RNDU);

  std::deque<Panel> work{eval_panel(f, mid0, half0, opt.order, prec)};
  std::vector<Panel> done;
  size_t evals = 1;

  while (!work.empty()) {
    Panel p = std::move(work.front());
    work.pop_front();
    // target width per panel, proportional to its share of the length
    XReal share(prec);
    mpfr_div(share.get(), p.half.get(), len.hi().get(), MPFR_RNDN);
    mpfr_mul(share.get(), share.get(), tol.get(), MPFR_RNDN);
    mpfr_mul_2ui(share.get(), share.get(), 1, MPFR_RNDN);
    if (p.valid && (p.value.width() <= share || evals >= opt.max_panels)) {
      done.push_back(std::move(p));
      continue;
    }
    if (!p.valid && evals >= opt.max_panels)
      throw DomainError("integrate: integrand model not evaluable at panel limit");
    XReal h2(prec);
    mpfr_div_2ui(h2.get(), p.half.get(), 1, MPFR_RNDU);
    XInterval hw = XInterval::point(h2);
    work.push_back(eval_panel(f, p.mid - hw, h2, opt.order, prec));
    work.push_back(eval_panel(f, p.mid + hw, h2, opt.order, prec));
    evals += 2;
  }

  XInterval total(prec);
  for (const auto& p : done) total = total + p.value;
  return total;
}

MaxResult maximize_1d(const IntervalFn& f, const XInterval& a, const XInterval& b,
                      const MaxOptions& opt) {
  const mpfr_prec_t prec = opt.prec ? opt.prec : current_prec();
  if (!(a.lo() <= b.hi())) throw DomainError("maximize_1d: a > b");

  struct Box {
    XInterval x;
    XInterval fx;
    double key;  // fx.hi as double, heap priority
  };
  auto mk = [&](XInterval x) {
    XInterval fx = f(x);
    double key = fx.hi().to_double();
    return Box{std::move(x), std::move(fx), key};
  };
  auto cmp = [](const Box& p, const Box& q) { return p.key < q.key; };
  XInterval domain(a.lo(), b.hi());
  std::vector<Box> heap{mk(domain)};

  // certified lower bound from point evaluations
  auto point_val = [&](const XReal& x) { return f(XInterval::point(x)); };
  XInterval best_lb = point_val(domain.mid());
  XInterval best_arg = domain;

  XReal tol(prec);
  mpfr_set_d(tol.get(), opt.tol, MPFR_RNDU);

  std::vector<Box> rest;  // boxes already within tolerance of the bound
  size_t evals = 1;
  while (!heap.empty() && evals < opt.max_boxes) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    Box top = std::move(heap.back());
    heap.pop_back();
    if (top.fx.hi() < best_lb.lo()) continue;  // pruned late
    XReal gap(prec);
    mpfr_sub(gap.get(), top.fx.hi().get(), best_lb.lo().get(), MPFR_RNDU);
    if (gap <= tol) {
      rest.push_back(std::move(top));
      break;  // heap order: every other box is within tolerance too
    }
    auto [l, r] = bisect(top.x);
    for (auto& half : {l, r}) {
      Box nb = mk(half);
      XInterval pv = point_val(half.mid());
      if (pv.lo() > best_lb.lo()) {
        best_lb = pv;
        best_arg = half;
      }
      evals += 2;
      if (nb.fx.hi() >= best_lb.lo()) {
        heap.push_back(std::move(nb));
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
  }
  for (auto& bx : heap) rest.push_back(std::move(bx));

  XReal ub(prec);
  mpfr_set(ub.get(), best_lb.hi().get(), MPFR_RNDU);
  for (const auto& bx : rest)
    if (mpfr_cmp(bx.fx.hi().get(), ub.get()) > 0) mpfr_set(ub.get(), bx.fx.hi().get(), MPFR_RNDU);
  // the maximizer lies in the hull of surviving boxes; pruned boxes are
  // certified to stay below the best lower bound
  bool have_hull = false;
  XInterval arg_hull(prec);
  for (const auto& bx : rest) {
    if (bx.fx.hi() < best_lb.lo()) continue;
    arg_hull = have_hull ? XInterval::hull(arg_hull, bx.x) : bx.x;
    have_hull = true;
  }
  if (!have_hull) arg_hull = best_arg;
  return MaxResult{XInterval(best_lb.lo(), ub), arg_hull};
}

XInterval find_root(const IntervalFn& f, const XInterval& a, const XInterval& b,
                    long tol_bits, mpfr_prec_t prec) {
  if (prec == 0) prec = current_prec();
  if (tol_bits == 0) tol_bits = static_cast<long>(prec) - 8;
  XInterval fa = f(XInterval::point(a.lo()));
  XInterval fb = f(XInterval::point(b.hi()));
  int sa = fa.certainly_positive() ? 1 : (fa.certainly_negative() ? -1 : 0);
  int sb = fb.certainly_positive() ? 1 : (fb.certainly_negative() ? -1 : 0);
  if (sa == 0 || sb == 0 || sa == sb)
    throw BracketError("find_root: no certified sign change on bracket");

  XReal lo = a.lo(), hi = b.hi();
  XReal w(prec), scale(prec);
  for (long it = 0; it < 4 * static_cast<long>(prec); ++it) {
    mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
    // tolerance relative to max(1, |endpoint|)
    mpfr_abs(scale.get(), hi.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
    mpfr_div_2ui(scale.get(), scale.get(), static_cast<unsigned long>(tol_bits), MPFR_RNDN);
    if (mpfr_cmp(w.get(), scale.get()) <= 0) break;
    XReal m(prec);
    mpfr_add(m.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    XInterval fm = f(XInterval::point(m));
    int sm = fm.certainly_positive() ? 1 : (fm.certainly_negative() ? -1 : 0);
    if (sm == 0) {
      // cannot certify the sign at the midpoint: nudge the midpoint
      XReal m2(prec);
      mpfr_sub(m2.get(), m.get(), scale.get(), MPFR_RNDD);
      XInterval fm2 = f(XInterval::point(m2));
      int sm2 = fm2.certainly_positive() ? 1 : (fm2.certainly_negative() ? -1 : 0);
      if (sm2 == 0) break;  // give up refining; bracket is still valid
      m = m2;
      sm = sm2;
    }
    if (sm == sa)
      lo = m;
    else
      hi = m;
  }
  return XInterval(lo, hi);
}

}  // namespace zfr

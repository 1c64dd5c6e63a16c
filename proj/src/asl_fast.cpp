#include "dinv/asl_fast.hpp"

#include <algorithm>
#include <stdexcept>

namespace dinv {

std::string to_string(Method m) {
  switch (m) {
    case Method::EvenP: return "EvenP";
    case Method::LatticeScan: return "LatticeScan";
    case Method::Oracle: return "Oracle";
  }
  return "?";
}

Int f_eval(const Triplet& t, int64_t x, int64_t y) {
  Int X(x), Y(y);
  return -Int(t.q + t.r) * X * X + 4 * Int(t.q) * X * Y - 4 * Int(t.q - t.p) * Y * Y - 4 * Y;
}

Int delta(const Triplet& t, int64_t m) {
  Int b = 2 * Int(m) - Int(t.q + t.r);
  return 4 * b * b - 16 * Int(t.q + t.r) * Int(t.p - 1);
}

std::pair<int64_t, bool> nearest_odd(const Rat& c) {
  Int fl = rat_floor(c);
  int64_t lo = checked_int64(fl);
  if (lo % 2 == 0) --lo;  // largest odd <= floor(c)
  // Compare c against the even midpoint lo+1.
  Rat mid(lo + 1);
  if (c < mid) return {lo, false};
  if (c > mid) return {lo + 2, false};
  return {lo + 2, true};
}

namespace {

int64_t clamp_to_lattice(int64_t a, int64_t p) {
  int64_t bound = (p % 2 != 0) ? p : p - 1;  // the extreme odd values
  return std::clamp(a, -bound, bound);
}

}  // namespace

RegionSlice region_slice(const Triplet& t, int64_t m) {
  if (m < 0 || m > (t.p - 1) / 2)
    throw std::invalid_argument("region_slice: m outside 0..(p-1)/2");
  RegionSlice s;
  s.m = m;
  s.delta = delta(t, m);
  s.center = Rat(2 * Int(t.q) * m, Int(t.q + t.r));
  s.radius_sq = Rat(s.delta, 4 * Int(t.q + t.r) * Int(t.q + t.r));
  auto [a, tie] = nearest_odd(s.center);
  s.nearest_odd = clamp_to_lattice(a, t.p);
  s.tie = tie;
  Rat gap = Rat(s.nearest_odd) - s.center;
  s.dist_to_odd_sq = gap * gap;
  s.f_at_best = f_eval(t, s.nearest_odd, m);
  s.in_region = s.f_at_best >= f_eval(t, 1, 1);
  return s;
}

DInvariantResult d_invariant(const Triplet& t) {
  DInvariantResult res;
  res.triplet = t;
  res.pretzel_note = "K(-" + std::to_string(t.p) + "," + std::to_string(t.q) + "," +
                     std::to_string(t.r) + ") not rationally slice";
  if (t.p % 2 == 0) {
    int64_t s = t.q + t.r;
    if (s % 4 != 0) throw std::logic_error("d_invariant: q+r not divisible by 4");
    res.d = s / 4;
    res.method = Method::EvenP;
    res.qhb_obstructed = res.d != 0;
    return res;
  }
  Int best;
  LatticePoint at;
  bool have = false;
  for (int64_t m = 0; m <= (t.p - 1) / 2; ++m) {
    Rat c(2 * Int(t.q) * m, Int(t.q + t.r));
    auto [a, tie] = nearest_odd(c);
    int64_t cand[2] = {clamp_to_lattice(a, t.p), clamp_to_lattice(a - 2, t.p)};
    int ncand = tie ? 2 : 1;
    for (int i = 0; i < ncand; ++i) {
      Int v = f_eval(t, cand[i], m);
      if (!have || v > best) {
        have = true;
        best = v;
        at = LatticePoint{cand[i], m};
      }
    }
  }
  Int num = best + t.q + t.r;
  if (num % 4 != 0) throw std::logic_error("d_invariant: max f + q + r not divisible by 4");
  res.d = checked_int64(num / 4);
  res.max_f = best;
  res.argmax = at;
  res.method = Method::LatticeScan;
  res.qhb_obstructed = res.d != 0;
  return res;
}

std::vector<RegionSlice> region_dump(const Triplet& t) {
  if (t.p % 2 == 0) throw std::invalid_argument("region_dump: odd p required");
  std::vector<RegionSlice> out;
  out.reserve(std::size_t((t.p - 1) / 2 + 1));
  for (int64_t m = 0; m <= (t.p - 1) / 2; ++m) out.push_back(region_slice(t, m));
  return out;
}

}  // namespace dinv

#include "dinv/families.hpp"

#include <stdexcept>

#include "json.hpp"

namespace dinv {

namespace {

using ordered_json = nlohmann::ordered_json;

FamilySpec poly_family(std::string name, std::array<int64_t, 3> p, std::array<int64_t, 3> q,
                       std::array<int64_t, 3> r, std::optional<std::array<int64_t, 3>> d,
                       int64_t n_min) {
  FamilySpec s;
  s.name = std::move(name);
  s.p = p;
  s.q = q;
  s.r = r;
  s.expected_d = d;
  s.n_min = n_min;
  return s;
}

int64_t fibonacci(int64_t k) {
  Int a(0), b(1);  // F(0), F(1)
  for (int64_t i = 0; i < k; ++i) {
    Int c = a + b;
    a = b;
    b = c;
  }
  return checked_int64(a);
}

}  // namespace

std::vector<FamilySpec> builtin_families() {
  std::vector<FamilySpec> out;
  out.push_back(poly_family("1", {1, 2, 0}, {1, 4, 0}, {3, 4, 0}, {{{0, 2, 0}}}, 1));
  out.push_back(poly_family("2", {1, 2, 0}, {2, 3, 0}, {1, 6, 0}, {{{0, 2, 0}}}, 1));
  out.push_back(poly_family("3", {1, 2, 0}, {1, 3, 0}, {5, 6, 0}, {{{0, 2, 0}}}, 1));
  out.push_back(poly_family("4", {3, 4, 0}, {4, 5, 0}, {11, 20, 0}, {{{2, 6, 0}}}, 1));
  out.push_back(poly_family("5", {1, 2, 0}, {2, 2, 0}, {1, 6, 4}, {{{0, 1, 1}}}, 1));
  out.push_back(poly_family("consecutive", {0, 1, 0}, {1, 1, 0}, {-1, 1, 1}, std::nullopt, 2));
  FamilySpec fib;
  fib.name = "fibonacci";
  fib.kind = FamilySpec::Kind::Fibonacci;
  fib.n_min = 1;
  out.push_back(fib);
  return out;
}

std::optional<FamilySpec> find_family(const std::string& name) {
  for (auto& s : builtin_families())
    if (s.name == name) return s;
  return std::nullopt;
}

int64_t eval_poly(const std::array<int64_t, 3>& c, int64_t n) {
  Int v = Int(c[0]) + Int(c[1]) * n + Int(c[2]) * n * n;
  return checked_int64(v);
}

Triplet family_triplet(const FamilySpec& spec, int64_t n) {
  if (n < spec.n_min)
    throw std::invalid_argument("family " + spec.name + ": n below n_min");
  if (spec.kind == FamilySpec::Kind::Fibonacci)
    return make_triplet(fibonacci(2 * n + 1), fibonacci(2 * n + 2), fibonacci(2 * n + 3));
  return make_triplet(eval_poly(spec.p, n), eval_poly(spec.q, n), eval_poly(spec.r, n));
}

std::vector<Triplet> enumerate_triplets(int64_t p) {
  if (p < 2) throw std::invalid_argument("enumerate_triplets: p >= 2 required");
  Int nn = Int(p) * p - 1;
  int64_t n = checked_int64(nn);
  std::vector<Triplet> out;
  for (auto [s, t] : divisor_pairs(n))
    if (s < t) out.push_back(make_triplet(p, p + s, p + t));
  return out;
}

FamilyReport verify_family(const FamilySpec& spec, int64_t n_lo, int64_t n_hi) {
  if (n_lo < spec.n_min)
    throw std::invalid_argument("verify_family: range starts below n_min");
  if (n_hi < n_lo) throw std::invalid_argument("verify_family: empty range");
  FamilyReport rep;
  rep.family_name = spec.name;
  rep.has_expected = spec.expected_d.has_value();
  for (int64_t n = n_lo; n <= n_hi; ++n) {
    FamilyRow row;
    row.n = n;
    row.triplet = family_triplet(spec, n);
    DInvariantResult res = d_invariant(row.triplet);
    row.d_computed = res.d;
    row.argmax = res.argmax;
    row.qhb_obstructed = res.qhb_obstructed;
    if (spec.expected_d) {
      row.d_expected = eval_poly(*spec.expected_d, n);
      row.match = (row.d_computed == *row.d_expected);
    } else {
      row.match = row.d_computed > 0;
    }
    if (!row.match) ++rep.mismatches;
    if (res.d <= 0 || res.d % 2 != 0)
      throw std::logic_error("verify_family: d must be a positive even integer");
    if (row.triplet.p % 2 != 0 && res.d < row.triplet.p - 1)
      throw std::logic_error("verify_family: d < p-1 on an odd-p triple");
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string family_spec_to_json(const FamilySpec& spec) {
  ordered_json j;
  j["name"] = spec.name;
  j["p"] = spec.p;
  j["q"] = spec.q;
  j["r"] = spec.r;
  if (spec.expected_d)
    j["expected_d"] = *spec.expected_d;
  else
    j["expected_d"] = nullptr;
  j["n_min"] = spec.n_min;
  if (spec.kind == FamilySpec::Kind::Fibonacci) j["kind"] = "fibonacci";
  return j.dump(2) + "\n";
}

namespace {

std::array<int64_t, 3> parse_poly(const ordered_json& j, const char* key) {
  const auto& arr = j.at(key);
  if (!arr.is_array() || arr.empty() || arr.size() > 3)
    throw std::invalid_argument(std::string("family config: ") + key +
                                " must be 1..3 coefficients");
  std::array<int64_t, 3> c{};
  for (std::size_t i = 0; i < arr.size(); ++i) c[i] = arr[i].get<int64_t>();
  return c;
}

}  // namespace

FamilySpec family_spec_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("family config: ") + e.what());
  }
  FamilySpec s;
  try {
    s.name = j.at("name").get<std::string>();
    if (j.contains("kind") && j["kind"].get<std::string>() == "fibonacci")
      s.kind = FamilySpec::Kind::Fibonacci;
    if (s.kind == FamilySpec::Kind::Polynomial || j.contains("p")) {
      s.p = parse_poly(j, "p");
      s.q = parse_poly(j, "q");
      s.r = parse_poly(j, "r");
    }
    if (j.contains("expected_d") && !j["expected_d"].is_null())
      s.expected_d = parse_poly(j, "expected_d");
    if (j.contains("n_min")) s.n_min = j["n_min"].get<int64_t>();
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("family config: ") + e.what());
  }
  return s;
}

}  // namespace dinv

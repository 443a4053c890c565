#include "cyclo/exact.hpp"

#include <mutex>
#include <numeric>

namespace cyclo {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Accuracy: return "accuracy";
    case ErrorKind::UnsupportedDepth: return "unsupported-depth";
    case ErrorKind::PoleCollision: return "pole-collision";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

RootOfUnity root_normalize(std::int64_t k, std::int64_t n) {
  if (n <= 0) fail(ErrorKind::InvalidOrder, "root order must be positive, got " + std::to_string(n));
  k %= n;
  if (k < 0) k += n;
  std::int64_t g = std::gcd(k, n);
  RootOfUnity r;
  r.k_ = k / g;
  r.n_ = n / g;
  return r;
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  std::int64_t l = std::lcm(a.n_, b.n_);
  return root_normalize(a.k_ * (l / a.n_) + b.k_ * (l / b.n_), l);
}

RootOfUnity RootOfUnity::inverse() const { return root_normalize(-k_, n_); }

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
  std::int64_t m = e % n_;
  if (m < 0) m += n_;
  return root_normalize((k_ * m) % n_, n_);
}

RootOfUnity RootOfUnity::sqrt(bool other_branch) const {
  return root_normalize(other_branch ? k_ + n_ : k_, 2 * n_);
}

std::string RootOfUnity::str() const { return std::to_string(k_) + "/" + std::to_string(n_); }

namespace {

std::string trimmed(std::string_view text) {
  std::string out;
  for (char c : text)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

std::int64_t parse_int64(const std::string& s, std::string_view context) {
  if (s.empty()) fail(ErrorKind::Parse, "empty integer in '" + std::string(context) + "'");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad integer '" + s + "' in '" + std::string(context) + "'");
  }
  if (pos != s.size()) fail(ErrorKind::Parse, "bad integer '" + s + "' in '" + std::string(context) + "'");
  return v;
}

}  // namespace

RootOfUnity RootOfUnity::parse(std::string_view text) {
  std::string s = trimmed(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (s == "1") return RootOfUnity{};
    if (s == "-1") return minus_one();
    fail(ErrorKind::Parse, "root must be written k/N, got '" + s + "'");
  }
  std::int64_t k = parse_int64(s.substr(0, slash), text);
  std::int64_t n = parse_int64(s.substr(slash + 1), text);
  return root_normalize(k, n);
}

std::vector<RootOfUnity> roots_up_to_order(std::int64_t max_order) {
  std::vector<RootOfUnity> out;
  for (std::int64_t n = 1; n <= max_order; ++n)
    for (std::int64_t k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1) out.push_back(root_normalize(k, n));
  return out;
}

std::int64_t lcm_of_orders(const std::vector<RootOfUnity>& roots) {
  std::int64_t l = 1;
  for (const auto& r : roots) l = std::lcm(l, r.order());
  return l;
}

Rational parse_rational(std::string_view text) {
  std::string s = trimmed(text);
  if (s.empty()) fail(ErrorKind::Parse, "empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad rational '" + s + "'");
  }
}

std::string rational_str(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string GaussianRational::str() const {
  std::string out = rational_str(re);
  out += (im < 0) ? "-" : "+";
  out += rational_str(im < 0 ? Rational(-im) : im);
  out += "i";
  return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s = trimmed(text);
  if (s.empty()) fail(ErrorKind::Parse, "empty Gaussian rational");
  GaussianRational g;
  if (s.back() != 'i') {
    g.re = parse_rational(s);
    return g;
  }
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string imag_part = split == std::string::npos ? s : s.substr(split);
  if (!real_part.empty()) g.re = parse_rational(real_part);
  if (imag_part.empty() || imag_part == "+") {
    g.im = 1;
  } else if (imag_part == "-") {
    g.im = -1;
  } else {
    if (imag_part[0] == '+') imag_part.erase(0, 1);
    g.im = parse_rational(imag_part);
  }
  return g;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  Rational d = b.re * b.re + b.im * b.im;
  if (d == 0) fail(ErrorKind::Domain, "division by zero Gaussian rational");
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    unsigned m = static_cast<unsigned>(table.size());
    if (m > 1 && m % 2 == 1) {
      table.push_back(Rational(0));
      continue;
    }
    // sum_{j<=m} C(m+1, j) B_j = 0
    Rational acc = 0;
    Integer c = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      acc += Rational(c) * table[j];
      c = c * (m + 1 - j) / (j + 1);
    }
    table.push_back(-acc / Rational(m + 1));
  }
  return table[n];
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace cyclo

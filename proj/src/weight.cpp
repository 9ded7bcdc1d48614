#include "chev/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace chev {

Weight Weight::from(const std::vector<int>& xs) {
  if (xs.size() > static_cast<size_t>(kMaxRank)) throw std::invalid_argument("weight rank exceeds limit");
  Weight w(static_cast<int>(xs.size()));
  for (size_t i = 0; i < xs.size(); ++i) w.c[i] = xs[i];
  return w;
}

bool Weight::is_zero() const {
  for (int i = 0; i < n; ++i)
    if (c[i] != 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  r += o;
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  r -= o;
  return r;
}

Weight Weight::operator-() const {
  Weight r(n);
  for (int i = 0; i < n; ++i) r.c[i] = -c[i];
  return r;
}

Weight Weight::operator*(int k) const {
  Weight r(n);
  for (int i = 0; i < n; ++i) r.c[i] = c[i] * k;
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  if (n == 0) n = o.n;
  for (int i = 0; i < n; ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (n == 0) n = o.n;
  for (int i = 0; i < n; ++i) c[i] -= o.c[i];
  return *this;
}

bool Weight::divisible_by(int k) const {
  for (int i = 0; i < n; ++i)
    if (c[i] % k != 0) return false;
  return true;
}

Weight Weight::divided_by(int k) const {
  if (!divisible_by(k)) throw std::logic_error("weight not divisible");
  Weight r(n);
  for (int i = 0; i < n; ++i) r.c[i] = c[i] / k;
  return r;
}

std::vector<int> Weight::to_vector() const { return std::vector<int>(c.begin(), c.begin() + n); }

std::string Weight::str() const {
  std::ostringstream os;
  for (int i = 0; i < n; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

Weight parse_weight(const std::string& s, int rank) {
  std::vector<int> xs;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight component '" + tok + "'");
    }
    while (pos < tok.size() && tok[pos] == ' ') ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad weight component '" + tok + "'");
    xs.push_back(x);
  }
  if (static_cast<int>(xs.size()) != rank)
    throw std::invalid_argument("weight '" + s + "' has " + std::to_string(xs.size()) + " coordinates, expected " +
                                std::to_string(rank));
  return Weight::from(xs);
}

}  // namespace chev

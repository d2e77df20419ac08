#include "topo/numeric.hpp"

#include <cctype>

namespace topo {

Rat rat_from_double(double x) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);  // exact for finite doubles
  return q;
}

namespace {

bool parse_int(const std::string& s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = Int(s, 10);
  return true;
}

}  // namespace

std::optional<Rat> rat_from_string(const std::string& s) {
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Int p, q;
    if (!parse_int(s.substr(0, slash), p) || !parse_int(s.substr(slash + 1), q)) return std::nullopt;
    if (q == 0) return std::nullopt;
    Rat r(p, q);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty()) return std::nullopt;
    for (char c : tail)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    Int ip;
    if (head.empty() || head == "-" || head == "+") {
      ip = 0;
    } else if (!parse_int(head, ip)) {
      return std::nullopt;
    }
    Int scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    Int frac(tail, 10);
    bool neg = !head.empty() && head[0] == '-';
    Int num = ip * scale + (neg ? -frac : frac);
    Rat r(num, scale);
    r.canonicalize();
    return r;
  }
  Int p;
  if (!parse_int(s, p)) return std::nullopt;
  return Rat(p);
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace topo

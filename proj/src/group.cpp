#include "maxclass/group.hpp"

#include <cctype>

namespace maxclass {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::spec_mismatch: return "SpecMismatch";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::wrong_family: return "WrongFamily";
    case Errc::not_in_h: return "NotInH";
    case Errc::not_self_conjugated: return "NotSelfConjugated";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::closure_cap: return "ClosureCap";
    case Errc::not_normal: return "NotNormal";
    case Errc::size_cap: return "SizeCap";
    case Errc::unsupported_range: return "UnsupportedRange";
    case Errc::unknown_check: return "UnknownCheck";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

const char* family_name(Family f) {
  switch (f) {
    case Family::dihedral: return "dihedral";
    case Family::semidihedral: return "semidihedral";
    case Family::quaternion: return "quaternion";
  }
  return "?";
}

char family_letter(Family f) {
  switch (f) {
    case Family::dihedral: return 'd';
    case Family::semidihedral: return 's';
    case Family::quaternion: return 'q';
  }
  return '?';
}

Family family_from_string(const std::string& s) {
  if (s == "d" || s == "dihedral") return Family::dihedral;
  if (s == "s" || s == "semidihedral") return Family::semidihedral;
  if (s == "q" || s == "quaternion") return Family::quaternion;
  raise(Errc::invalid_parameter, "unknown family '" + s + "'");
}

GroupSpec make_group(Family family, int n) {
  if (n < 3)
    raise(Errc::invalid_parameter,
          "group order 2^n needs n >= 3, got n = " + std::to_string(n));
  if (n > 8)
    raise(Errc::invalid_parameter,
          "n = " + std::to_string(n) + " exceeds the supported range (n <= 8)");
  if (family == Family::semidihedral && n == 3)
    raise(Errc::invalid_parameter,
          "semidihedral requires n >= 4 (n = 3 coincides with dihedral)");

  GroupSpec s;
  s.family = family;
  s.n = n;
  s.a_order = uint32_t{1} << (n - 1);
  s.group_order = uint32_t{1} << n;
  s.alpha_exp = family == Family::quaternion ? (uint32_t{1} << (n - 2)) : 0;
  // -1 mod 2^{n-1}, shifted by 2^{n-2} for the semidihedral twist
  s.conj_exp = s.a_order - 1;
  if (family == Family::semidihedral)
    s.conj_exp = (s.conj_exp + (uint32_t{1} << (n - 2))) % s.a_order;
  return s;
}

GroupElement g_make(const GroupSpec& s, uint64_t i, uint64_t j) {
  GroupElement g;
  g.i = static_cast<uint32_t>(i % s.a_order);
  g.j = static_cast<uint32_t>(j % 2);
  return g;
}

GroupElement g_mul(const GroupSpec& s, GroupElement x, GroupElement y) {
  // b a^i = a^{conj_exp * i} b, and b^2 = a^{alpha_exp}
  uint64_t yi = x.j ? (uint64_t{s.conj_exp} * y.i) : uint64_t{y.i};
  uint64_t i = x.i + yi;
  uint32_t j = x.j + y.j;
  if (j == 2) {
    i += s.alpha_exp;
    j = 0;
  }
  return g_make(s, i, j);
}

GroupElement g_inv(const GroupSpec& s, GroupElement x) {
  if (x.j == 0) return g_make(s, uint64_t{s.a_order} - x.i, 0);
  // (a^i b)^{-1} = b^{-1} a^{-i} = a^{alpha - conj_exp * i ... } b; solve directly:
  // want y with x*y = 1; y = a^k b, then x*y = a^{i + e*k + alpha} so
  // k = -e^{-1} (i + alpha) = -e (i + alpha) since e^2 = 1.
  uint64_t e = s.conj_exp;
  uint64_t t = (uint64_t{x.i} + s.alpha_exp) % s.a_order;
  uint64_t k = (e * (s.a_order - t)) % s.a_order;
  GroupElement y = g_make(s, k, 1);
  return y;
}

GroupElement g_pow(const GroupSpec& s, GroupElement x, uint64_t e) {
  GroupElement r = g_make(s, 0, 0);
  GroupElement base = x;
  while (e) {
    if (e & 1) r = g_mul(s, r, base);
    base = g_mul(s, base, base);
    e >>= 1;
  }
  return r;
}

uint64_t g_order(const GroupSpec& s, GroupElement x) {
  GroupElement cur = x;
  uint64_t ord = 1;
  GroupElement id = g_make(s, 0, 0);
  while (!(cur == id)) {
    cur = g_mul(s, cur, x);
    ++ord;
    if (ord > s.group_order)
      raise(Errc::cap_exceeded, "element order exceeds the group order");
  }
  return ord;
}

std::vector<GroupElement> commutator_subgroup(const GroupSpec& s) {
  std::vector<GroupElement> out;
  out.reserve(s.a_order / 2);
  for (uint32_t i = 0; i < s.a_order; i += 2) out.push_back({i, 0});
  return out;
}

std::string format_element(const GroupSpec&, GroupElement g) {
  std::string s;
  if (g.i == 0) {
    s = g.j ? "b" : "1";
    return s;
  }
  s = g.i == 1 ? "a" : "a^" + std::to_string(g.i);
  if (g.j) s += "*b";
  return s;
}

GroupElement parse_element(const GroupSpec& spec, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) raise(Errc::parse_error, "empty monomial");
  if (t == "1") return {0, 0};
  if (t == "b") return {0, 1};

  uint32_t j = 0;
  if (t.size() >= 2 && t.substr(t.size() - 2) == "*b") {
    j = 1;
    t = t.substr(0, t.size() - 2);
  }
  if (t == "a") return {1, j};
  if (t.size() < 3 || t[0] != 'a' || t[1] != '^')
    raise(Errc::parse_error, "bad monomial '" + text + "'");
  uint64_t i = 0;
  for (size_t p = 2; p < t.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(t[p])))
      raise(Errc::parse_error, "bad exponent in '" + text + "'");
    i = i * 10 + (t[p] - '0');
    if (i >= (uint64_t{1} << 32)) raise(Errc::parse_error, "exponent overflow");
  }
  if (i >= spec.a_order)
    raise(Errc::out_of_range, "exponent " + std::to_string(i) +
                                  " out of range for order " +
                                  std::to_string(spec.a_order));
  return {static_cast<uint32_t>(i), j};
}

}  // namespace maxclass

#include "cuspidal/singularity.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cusp {

namespace {

std::string join(Int p, std::span<const Int> q) {
  std::ostringstream os;
  os << p << ';';
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) os << ',';
    os << q[i];
  }
  return os.str();
}

Int parse_int(std::string_view token, std::string_view whole) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(token) + "' in cusp spec '" +
                                           std::string(whole) + "'");
  }
  return value;
}

}  // namespace

CharSequence CharSequence::validate(Int p, std::vector<Int> q) {
  if (p < 2) {
    throw Error(ErrorCode::MultiplicityTooSmall, "multiplicity " + std::to_string(p) + " < 2");
  }
  Int prev = p;
  for (Int qi : q) {
    if (qi <= prev) {
      throw Error(ErrorCode::NotIncreasing, "(" + join(p, q) + ") is not strictly increasing");
    }
    prev = qi;
  }
  std::vector<Int> gcds;
  gcds.reserve(q.size());
  Int d = p;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] % d == 0) {
      throw Error(ErrorCode::DivisibilityViolation,
                  "D_" + std::to_string(i) + " = " + std::to_string(d) + " divides q_" +
                      std::to_string(i + 1) + " = " + std::to_string(q[i]));
    }
    d = std::gcd(d, q[i]);
    gcds.push_back(d);
  }
  if (d != 1) {
    throw Error(ErrorCode::NotCoprime,
                "D_n = " + std::to_string(d) + " != 1 for (" + join(p, q) + ")");
  }
  return CharSequence(p, std::move(q), std::move(gcds));
}

CharSequence CharSequence::parse(std::string_view spec) {
  std::string_view s = spec;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);

  const auto semi = s.find(';');
  if (semi == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "cusp spec '" + std::string(spec) + "' has no ';'");
  }
  const Int p = parse_int(s.substr(0, semi), spec);
  std::vector<Int> q;
  std::string_view rest = s.substr(semi + 1);
  while (true) {
    const auto comma = rest.find(',');
    q.push_back(parse_int(rest.substr(0, comma), spec));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return validate(p, std::move(q));
}

std::string CharSequence::to_string() const { return "(" + join(p_, q_) + ")"; }

std::string CharSequence::to_spec() const { return join(p_, q_); }

std::strong_ordering operator<=>(const CharSequence& a, const CharSequence& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.q_.begin(), a.q_.end(), b.q_.begin(), b.q_.end());
}

Int milnor_number(const CharSequence& cs) {
  const auto q = cs.terms();
  const auto gcds = cs.gcd_chain();
  Int mu = (cs.multiplicity() - 1) * (q[0] - 1);
  for (std::size_t i = 1; i < q.size(); ++i) mu += (gcds[i - 1] - 1) * (q[i] - q[i - 1]);
  return mu;
}

std::vector<Int> semigroup_generators(const CharSequence& cs) {
  const auto q = cs.terms();
  const auto gcds = cs.gcd_chain();
  std::vector<Int> gens{cs.multiplicity(), q[0]};
  Int prev_gcd = cs.multiplicity();
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    gens.push_back((prev_gcd / gcds[i]) * gens.back() + q[i + 1] - q[i]);
    prev_gcd = gcds[i];
  }
  return gens;
}

std::vector<char> semigroup_membership(std::span<const Int> generators, Int limit) {
  std::vector<char> member(static_cast<std::size_t>(std::max<Int>(limit, 0) + 1), 0);
  member[0] = 1;
  for (Int x = 1; x <= limit; ++x) {
    for (Int g : generators) {
      if (g <= x && member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return member;
}

SemigroupData semigroup(const CharSequence& cs) {
  SemigroupData out;
  out.generators = semigroup_generators(cs);
  const Int mu = milnor_number(cs);
  const auto member = semigroup_membership(out.generators, mu);
  for (Int x = 1; x < mu; ++x) {
    if (!member[static_cast<std::size_t>(x)]) out.gaps.push_back(x);
  }
  out.genus = static_cast<Int>(out.gaps.size());
  out.milnor = 2 * out.genus;
  const bool max_ok = out.gaps.empty() || out.gaps.back() == mu - 1;
  if (mu % 2 != 0 || out.milnor != mu || !member[static_cast<std::size_t>(mu)] || !max_ok) {
    throw Error(ErrorCode::InternalInconsistency,
                cs.to_string() + ": sieved " + std::to_string(out.genus) +
                    " gaps but the Milnor formula gives " + std::to_string(mu));
  }
  return out;
}

Int max_multiplicity_for_milnor(Int mu) {
  // q1 >= p + 1, so mu >= (p-1)p.
  Int p = 1;
  while ((p) * (p + 1) <= mu) ++p;
  return p;
}

namespace {

struct Enumerator {
  Int p;
  std::size_t max_terms;
  const std::function<void(const CharSequence&)>& visit;
  std::vector<Int> terms;

  void emit() {
    visit(CharSequence::validate(p, terms));
  }

  // The next term q adds (D - 1)(q - last) to the Milnor number.
  void extend(Int gcd, Int last, Int remaining) {
    if (max_terms != 0 && terms.size() >= max_terms) return;
    for (Int q = last + 1; (gcd - 1) * (q - last) <= remaining; ++q) {
      if (q % gcd == 0) continue;
      const Int added = (gcd - 1) * (q - last);
      const Int next = std::gcd(gcd, q);
      terms.push_back(q);
      if (next == 1) {
        if (added == remaining) emit();
      } else if (added < remaining) {
        extend(next, q, remaining - added);
      }
      terms.pop_back();
    }
  }

  void run(Int mu) {
    for (Int q1 = p + 1; (p - 1) * (q1 - 1) <= mu; ++q1) {
      if (q1 % p == 0) continue;
      const Int base = (p - 1) * (q1 - 1);
      const Int d1 = std::gcd(p, q1);
      terms.assign(1, q1);
      if (d1 == 1) {
        if (base == mu) emit();
      } else if (base < mu) {
        extend(d1, q1, mu - base);
      }
    }
  }
};

}  // namespace

void for_each_char_sequence_with_multiplicity(
    Int mu, Int p, std::size_t max_terms, const std::function<void(const CharSequence&)>& visit) {
  if (p < 2 || mu <= 0) return;
  Enumerator e{p, max_terms, visit, {}};
  e.run(mu);
}

std::vector<CharSequence> enumerate_char_sequences(Int mu, std::size_t max_terms) {
  if (mu % 2 != 0) throw Error(ErrorCode::OddMilnor, "Milnor number " + std::to_string(mu) + " is odd");
  std::vector<CharSequence> out;
  if (mu <= 0) return out;
  const Int pmax = max_multiplicity_for_milnor(mu);
  for (Int p = 2; p <= pmax; ++p) {
    for_each_char_sequence_with_multiplicity(mu, p, max_terms,
                                             [&](const CharSequence& cs) { out.push_back(cs); });
  }
  return out;
}

}  // namespace cusp

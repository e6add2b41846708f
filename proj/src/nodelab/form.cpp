#include "cicy/nodelab/form.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cicy/nodelab/errors.hpp"
#include "cicy/nodelab/random.hpp"

namespace cicy::nodelab {

int monomial_count(int e) { return e < 0 ? 0 : (e + 1) * (e + 2) / 2; }

std::vector<Monomial> monomials(int e) {
  std::vector<Monomial> out;
  out.reserve(monomial_count(e));
  for (int i = e; i >= 0; --i) {
    for (int j = e - i; j >= 0; --j) out.push_back({i, j, e - i - j});
  }
  return out;
}

HomogeneousForm::HomogeneousForm(PrimeField fp, int degree)
    : fp_(fp), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("form degree must be >= 0");
}

HomogeneousForm::HomogeneousForm(PrimeField fp, int degree, const Terms& terms)
    : HomogeneousForm(fp, degree) {
  for (const auto& [m, v] : terms) set(m, v);
}

std::uint32_t HomogeneousForm::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void HomogeneousForm::set(const Monomial& m, std::uint32_t value) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0 || m[0] + m[1] + m[2] != degree_) {
    throw NodeLabError(ErrorKind::kBadInput, "monomial degree does not match form");
  }
  value %= fp_.characteristic();
  if (value == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = value;
  }
}

std::vector<std::uint32_t> HomogeneousForm::coefficient_vector() const {
  std::vector<std::uint32_t> out;
  for (const auto& m : monomials(degree_)) out.push_back(coefficient(m));
  return out;
}

std::uint32_t HomogeneousForm::evaluate(
    const std::array<std::uint32_t, 3>& point) const {
  std::uint32_t acc = 0;
  for (const auto& [m, v] : terms_) {
    std::uint32_t term = v;
    for (int i = 0; i < 3; ++i) term = fp_.mul(term, fp_.pow(point[i], m[i]));
    acc = fp_.add(acc, term);
  }
  return acc;
}

Element HomogeneousForm::evaluate(const FieldContext& ctx,
                                  const std::array<Element, 3>& point) const {
  std::array<std::vector<Element>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].push_back(ctx.one());
    for (int e = 1; e <= degree_; ++e) {
      powers[i].push_back(ctx.mul(powers[i].back(), point[i]));
    }
  }
  Element acc = ctx.zero();
  for (const auto& [m, v] : terms_) {
    Element term = ctx.mul(ctx.mul(powers[0][m[0]], powers[1][m[1]]),
                           powers[2][m[2]]);
    acc = ctx.add(acc, ctx.scale(term, v));
  }
  return acc;
}

HomogeneousForm HomogeneousForm::substitute(
    const std::array<std::array<std::uint32_t, 3>, 3>& b) const {
  // Variable i becomes sum_j b[i][j] * var_j.
  std::array<std::vector<HomogeneousForm>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    HomogeneousForm lin(fp_, 1);
    lin.set({1, 0, 0}, b[i][0]);
    lin.set({0, 1, 0}, b[i][1]);
    lin.set({0, 0, 1}, b[i][2]);
    HomogeneousForm one(fp_, 0);
    one.set({0, 0, 0}, 1);
    powers[i].push_back(one);
    for (int e = 1; e <= degree_; ++e) powers[i].push_back(powers[i].back() * lin);
  }
  HomogeneousForm out(fp_, degree_);
  for (const auto& [m, v] : terms_) {
    out = out + scale(powers[0][m[0]] * powers[1][m[1]] * powers[2][m[2]], v);
  }
  return out;
}

namespace {

HomogeneousForm combine(const HomogeneousForm& a, const HomogeneousForm& b,
                        bool subtract) {
  if (!(a.field() == b.field())) {
    throw NodeLabError(ErrorKind::kBadInput, "forms over different fields");
  }
  if (b.is_zero()) return a;
  if (a.is_zero() && !subtract) return b;
  if (!a.is_zero() && a.degree() != b.degree()) {
    throw NodeLabError(ErrorKind::kBadInput, "adding forms of different degrees");
  }
  const auto& fp = a.field();
  HomogeneousForm out = a.is_zero() ? HomogeneousForm(fp, b.degree()) : a;
  for (const auto& [m, v] : b.terms()) {
    const auto cur = out.coefficient(m);
    out.set(m, subtract ? fp.sub(cur, v) : fp.add(cur, v));
  }
  return out;
}

}  // namespace

HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b) {
  return combine(a, b, false);
}

HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) {
  return combine(a, b, true);
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (!(a.field() == b.field())) {
    throw NodeLabError(ErrorKind::kBadInput, "forms over different fields");
  }
  const auto& fp = a.field();
  HomogeneousForm out(fp, a.degree() + b.degree());
  HomogeneousForm::Terms acc;
  for (const auto& [ma, va] : a.terms()) {
    for (const auto& [mb, vb] : b.terms()) {
      const Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      auto& slot = acc[m];
      slot = fp.add(slot, fp.mul(va, vb));
    }
  }
  for (const auto& [m, v] : acc) out.set(m, v);
  return out;
}

HomogeneousForm scale(const HomogeneousForm& a, std::uint32_t s) {
  HomogeneousForm out(a.field(), a.degree());
  for (const auto& [m, v] : a.terms()) out.set(m, a.field().mul(v, s));
  return out;
}

HomogeneousForm variable(PrimeField fp, int index) {
  HomogeneousForm out(fp, 1);
  Monomial m{0, 0, 0};
  m.at(index) = 1;
  out.set(m, 1);
  return out;
}

HomogeneousForm random_form(const PrimeField& fp, int degree, std::uint64_t seed) {
  if (degree < 0) throw std::invalid_argument("form degree must be >= 0");
  Rng rng(seed);
  HomogeneousForm out(fp, degree);
  for (const auto& m : monomials(degree)) {
    out.set(m, static_cast<std::uint32_t>(rng.below(fp.characteristic())));
  }
  return out;
}

std::string format_form(const HomogeneousForm& form) {
  if (form.is_zero()) return "0";
  static constexpr char kVars[3] = {'x', 'y', 'z'};
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, v] : form.terms()) {
    if (!first) out << " + ";
    first = false;
    const bool constant = m[0] + m[1] + m[2] == 0;
    if (v != 1 || constant) out << v;
    bool need_star = v != 1;
    for (int i = 0; i < 3; ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << '*';
      out << kVars[i];
      if (m[i] > 1) out << '^' << m[i];
      need_star = true;
    }
  }
  return out.str();
}

void write_form(const HomogeneousForm& form, std::ostream& out) {
  out << "p=" << form.field().characteristic() << " deg=" << form.degree() << '\n';
  for (const auto& [m, v] : form.terms()) {
    out << m[0] << ' ' << m[1] << ' ' << m[2] << ' ' << v << '\n';
  }
}

HomogeneousForm read_form(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw NodeLabError(ErrorKind::kBadInput, "empty form file");
  unsigned long long p = 0;
  int degree = -1;
  {
    std::istringstream header(line);
    std::string ptok, dtok;
    header >> ptok >> dtok;
    try {
      if (ptok.rfind("p=", 0) != 0 || dtok.rfind("deg=", 0) != 0) throw 0;
      p = std::stoull(ptok.substr(2));
      degree = std::stoi(dtok.substr(4));
    } catch (...) {
      throw NodeLabError(ErrorKind::kBadInput, "bad form header: '" + line + "'");
    }
  }
  if (degree < 0) throw NodeLabError(ErrorKind::kBadInput, "negative degree");
  HomogeneousForm form(PrimeField(p), degree);
  while (next_line()) {
    std::istringstream rec(line);
    Monomial m{};
    long long coeff = 0;
    std::string extra;
    if (!(rec >> m[0] >> m[1] >> m[2] >> coeff) || (rec >> extra)) {
      throw NodeLabError(ErrorKind::kBadInput, "bad monomial line: '" + line + "'");
    }
    if (form.coefficient(m) != 0) {
      throw NodeLabError(ErrorKind::kBadInput, "duplicate monomial: '" + line + "'");
    }
    form.set(m, form.field().from_int(coeff));
  }
  return form;
}

}  // namespace cicy::nodelab

#include "ramond/bmodule.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ramond/normal_form.hpp"

namespace ramond {

BModuleElement::BModuleElement(const BasisLabel& u, const ScalarPoly& coeff) {
  add(u, coeff);
}

void BModuleElement::add(const BasisLabel& u, const ScalarPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(u);
  if (it == terms_.end()) {
    terms_.emplace(u, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

BModuleElement& BModuleElement::operator+=(const BModuleElement& other) {
  for (const auto& [u, s] : other.terms_) add(u, s);
  return *this;
}

BModuleElement BModuleElement::operator-(const BModuleElement& other) const {
  BModuleElement out = *this;
  for (const auto& [u, s] : other.terms_) out.add(u, -s);
  return out;
}

BModuleElement BModuleElement::operator*(const ScalarPoly& s) const {
  BModuleElement out;
  for (const auto& [u, v] : terms_) out.add(u, v * s);
  return out;
}

BModuleElement BModule::act(const Generator& g, const BModuleElement& e) const {
  BModuleElement out;
  for (const auto& [u, s] : e.terms()) out += act(g, u) * s;
  return out;
}

namespace {

void require_in_B(const Generator& g) {
  if (!in_B(g)) throw std::domain_error("generator not in B: " + format_generator(g));
}

// Coefficients of (L_0 - m)^a as a map exponent -> binom(a,j) * (-m)^(a-j).
std::map<int, Rational> shifted_power(int a, long m) {
  std::map<int, Rational> out;
  Rational binom(1);
  // j descending so binom(a, j) updates by *(j)/(a-j) steps; simpler ascending:
  for (int j = 0; j <= a; ++j) {
    Rational term = binom;
    Rational pw(1);
    for (int t = 0; t < a - j; ++t) pw *= Rational(-m);
    term *= pw;
    if (term != 0) out[j] = term;
    binom = binom * Rational(a - j) / Rational(j + 1);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Classical Whittaker module
// ---------------------------------------------------------------------------

WhittakerModule::WhittakerModule(const Rational& phi_L1, const Rational& phi_L2) {
  if (phi_L1 != 0) phi_L_[1] = phi_L1;
  if (phi_L2 != 0) phi_L_[2] = phi_L2;
}

WhittakerModule WhittakerModule::unchecked(std::map<long, Rational> phi_L) {
  WhittakerModule mod;
  for (const auto& [m, v] : phi_L) {
    if (m < 1) throw std::invalid_argument("phi index must be >= 1");
    if (v != 0) mod.phi_L_[m] = v;
  }
  return mod;
}

Rational WhittakerModule::phi(long m) const {
  auto it = phi_L_.find(m);
  return it == phi_L_.end() ? Rational(0) : it->second;
}

BModuleElement WhittakerModule::act(const Generator& g, const BasisLabel& u) const {
  require_in_B(g);
  const auto* lab = std::get_if<WhittakerLabel>(&u);
  if (!lab) throw std::domain_error("label is not a whittaker label");
  BModuleElement out;
  if (g.family == Family::L) {
    if (g.index == 0) {
      out.add(WhittakerLabel{lab->a + 1, lab->tau}, ScalarPoly::one());
      return out;
    }
    const Rational scale = phi(g.index);
    if (scale == 0) return out;
    for (const auto& [j, coeff] : shifted_power(lab->a, g.index))
      out.add(WhittakerLabel{j, lab->tau}, ScalarPoly(coeff * scale));
    return out;
  }
  // G_n, n >= 1
  if (g.index == 1) {
    const Rational scale = lab->tau == 0 ? Rational(1) : -phi(2);
    if (scale == 0) return out;
    for (const auto& [j, coeff] : shifted_power(lab->a, 1))
      out.add(WhittakerLabel{j, 1 - lab->tau}, ScalarPoly(coeff * scale));
    return out;
  }
  if (lab->tau == 0) return out;  // G_n v0 = 0 for n >= 2
  const Rational scale = Rational(-2) * phi(g.index + 1);
  if (scale == 0) return out;
  for (const auto& [j, coeff] : shifted_power(lab->a, g.index))
    out.add(WhittakerLabel{j, 0}, ScalarPoly(coeff * scale));
  return out;
}

int WhittakerModule::label_parity(const BasisLabel& u) const {
  return std::get<WhittakerLabel>(u).tau & 1;
}

std::vector<BasisLabel> WhittakerModule::enumerate_labels(int cap) const {
  std::vector<BasisLabel> out;
  for (int a = 0; a <= cap; ++a)
    for (int tau = 0; tau <= 1; ++tau) out.push_back(WhittakerLabel{a, tau});
  return out;
}

std::string WhittakerModule::format_label(const BasisLabel& u) const {
  const auto& lab = std::get<WhittakerLabel>(u);
  std::ostringstream out;
  if (lab.a == 1)
    out << "L0 ";
  else if (lab.a > 1)
    out << "L0^" << lab.a << " ";
  out << "v" << lab.tau;
  return out.str();
}

BasisLabel WhittakerModule::parse_label(const std::string& text) const {
  std::istringstream in(text);
  std::string tok;
  WhittakerLabel lab;
  bool saw_v = false;
  while (in >> tok) {
    if (saw_v) throw std::invalid_argument("trailing token in label: " + text);
    if (tok == "v0" || tok == "v1") {
      lab.tau = tok[1] - '0';
      saw_v = true;
    } else if (tok.rfind("L0", 0) == 0) {
      if (tok == "L0")
        lab.a += 1;
      else if (tok.size() > 3 && tok[2] == '^')
        lab.a += std::stoi(tok.substr(3));
      else
        throw std::invalid_argument("bad label token: " + tok);
    } else {
      throw std::invalid_argument("bad label token: " + tok);
    }
  }
  if (!saw_v) throw std::invalid_argument("label missing v0/v1: " + text);
  if (lab.a < 0) throw std::invalid_argument("negative exponent in label: " + text);
  return lab;
}

// ---------------------------------------------------------------------------
// High-order Whittaker module (free over L_0..L_{s-1}, G_1..G_{s-1} on the
// 2-dimensional graded Gamma(s)-seed {v0, v1 = G_s v0}).
// ---------------------------------------------------------------------------

HighOrderModule::HighOrderModule(int s, std::map<long, Rational> phi_L) : s_(s) {
  if (s < 1) throw std::invalid_argument("high-order parameter s must be >= 1");
  for (const auto& [m, v] : phi_L) {
    if (m < s || m > 2 * s)
      throw std::invalid_argument("phi_s must be supported on L_s..L_{2s}");
    if (v != 0) phi_L_[m] = v;
  }
}

Rational HighOrderModule::phi(long m) const {
  auto it = phi_L_.find(m);
  return it == phi_L_.end() ? Rational(0) : it->second;
}

BModuleElement HighOrderModule::seed_act(const Generator& g, int tau) const {
  HighOrderLabel base{std::vector<int>(s_, 0), std::vector<int>(s_ - 1, 0), 0};
  BModuleElement out;
  if (g.family == Family::L) {
    if (g.index < s_) throw std::logic_error("free letter reached the seed");
    if (g.index > 2 * s_) return out;
    base.tau = tau;
    out.add(base, ScalarPoly(phi(g.index)));
    return out;
  }
  if (g.index < s_) throw std::logic_error("free letter reached the seed");
  if (g.index > s_) return out;
  // G_s: v0 -> v1, v1 -> -phi(L_{2s}) v0
  if (tau == 0) {
    base.tau = 1;
    out.add(base, ScalarPoly::one());
  } else {
    base.tau = 0;
    out.add(base, ScalarPoly(-phi(2 * s_)));
  }
  return out;
}

BModuleElement HighOrderModule::act(const Generator& g, const BasisLabel& u) const {
  require_in_B(g);
  const auto* lab = std::get_if<HighOrderLabel>(&u);
  if (!lab) throw std::domain_error("label is not a high-order label");
  if (static_cast<int>(lab->l_exp.size()) != s_ ||
      static_cast<int>(lab->g_flags.size()) != s_ - 1)
    throw std::domain_error("inadmissible high-order label");
  // Canonical word of the free part in U(B) rank order (L_m -> 2m, G_n -> 2n+1).
  std::vector<Generator> letters{g};
  for (int m = 0; m < s_; ++m) {
    for (int t = 0; t < lab->l_exp[m]; ++t) letters.push_back(Lgen(m));
    if (m >= 1 && lab->g_flags[m - 1]) letters.push_back(Ggen(m));
  }
  auto ub_rank = [](const Generator& x) { return 2 * x.index + (x.family == Family::G ? 1 : 0); };
  BModuleElement out;
  for (const auto& [word, coeff] : straighten_by_rank(letters, ScalarPoly::one(), ub_rank)) {
    // Split free prefix (index < s) from the Gamma(s) suffix (index >= s).
    std::size_t split = 0;
    while (split < word.size() && word[split].index < s_) ++split;
    // Apply the suffix to the seed, rightmost letter first.
    BModuleElement head;
    head.add(HighOrderLabel{std::vector<int>(s_, 0), std::vector<int>(s_ - 1, 0), lab->tau},
             ScalarPoly::one());
    for (std::size_t k = word.size(); k > split; --k) {
      BModuleElement next;
      for (const auto& [hu, hs] : head.terms())
        next += seed_act(word[k - 1], std::get<HighOrderLabel>(hu).tau) * hs;
      head = std::move(next);
      if (head.is_zero()) break;
    }
    if (head.is_zero()) continue;
    // Record the free prefix into the label exponents.
    HighOrderLabel prefix{std::vector<int>(s_, 0), std::vector<int>(s_ - 1, 0), 0};
    for (std::size_t k = 0; k < split; ++k) {
      const Generator& x = word[k];
      if (x.family == Family::L) {
        prefix.l_exp[x.index] += 1;
      } else {
        if (x.index < 1 || prefix.g_flags[x.index - 1])
          throw std::logic_error("non-canonical straightened word");
        prefix.g_flags[x.index - 1] = 1;
      }
    }
    for (const auto& [hu, hs] : head.terms()) {
      HighOrderLabel full = prefix;
      full.tau = std::get<HighOrderLabel>(hu).tau;
      out.add(full, hs * coeff);
    }
  }
  return out;
}

int HighOrderModule::label_parity(const BasisLabel& u) const {
  const auto& lab = std::get<HighOrderLabel>(u);
  int p = lab.tau;
  for (int f : lab.g_flags) p ^= (f & 1);
  return p & 1;
}

std::vector<BasisLabel> HighOrderModule::enumerate_labels(int cap) const {
  std::vector<BasisLabel> out;
  HighOrderLabel lab{std::vector<int>(s_, 0), std::vector<int>(s_ - 1, 0), 0};
  // Odometer over l_exp entries in 0..cap, g_flags in 0..1, tau in 0..1.
  const int n_l = s_, n_g = s_ - 1;
  std::vector<int> state(n_l + n_g + 1, 0);
  auto limit = [&](int k) { return k < n_l ? cap : 1; };
  while (true) {
    for (int k = 0; k < n_l; ++k) lab.l_exp[k] = state[k];
    for (int k = 0; k < n_g; ++k) lab.g_flags[k] = state[n_l + k];
    lab.tau = state[n_l + n_g];
    out.push_back(lab);
    int k = 0;
    while (k < static_cast<int>(state.size()) && state[k] == limit(k)) state[k++] = 0;
    if (k == static_cast<int>(state.size())) break;
    ++state[k];
  }
  return out;
}

std::string HighOrderModule::format_label(const BasisLabel& u) const {
  const auto& lab = std::get<HighOrderLabel>(u);
  std::ostringstream out;
  for (int m = 0; m < s_; ++m) {
    if (lab.l_exp[m] == 1)
      out << "L" << m << " ";
    else if (lab.l_exp[m] > 1)
      out << "L" << m << "^" << lab.l_exp[m] << " ";
  }
  for (int n = 1; n < s_; ++n)
    if (lab.g_flags[n - 1]) out << "G" << n << " ";
  out << "v" << lab.tau;
  return out.str();
}

BasisLabel HighOrderModule::parse_label(const std::string& text) const {
  HighOrderLabel lab{std::vector<int>(s_, 0), std::vector<int>(s_ - 1, 0), 0};
  std::istringstream in(text);
  std::string tok;
  bool saw_v = false;
  while (in >> tok) {
    if (saw_v) throw std::invalid_argument("trailing token in label: " + text);
    if (tok == "v0" || tok == "v1") {
      lab.tau = tok[1] - '0';
      saw_v = true;
      continue;
    }
    if (tok.empty() || (tok[0] != 'L' && tok[0] != 'G'))
      throw std::invalid_argument("bad label token: " + tok);
    std::string body = tok.substr(1);
    int exp = 1;
    if (auto caret = body.find('^'); caret != std::string::npos) {
      exp = std::stoi(body.substr(caret + 1));
      body = body.substr(0, caret);
    }
    int idx = std::stoi(body);
    if (tok[0] == 'L') {
      if (idx < 0 || idx >= s_ || exp < 0)
        throw std::invalid_argument("inadmissible label token: " + tok);
      lab.l_exp[idx] += exp;
    } else {
      if (idx < 1 || idx >= s_ || exp != 1 || lab.g_flags[idx - 1])
        throw std::invalid_argument("inadmissible label token: " + tok);
      lab.g_flags[idx - 1] = 1;
    }
  }
  if (!saw_v) throw std::invalid_argument("label missing v0/v1: " + text);
  return lab;
}

// ---------------------------------------------------------------------------
// Solvable (Laurent) module
// ---------------------------------------------------------------------------

LaurentFraction solvable_to_fraction(const BModuleElement& e, int partner) {
  LaurentFraction f;
  for (const auto& [u, s] : e.terms()) {
    const auto& lab = std::get<SolvableLabel>(u);
    if (lab.partner != partner) continue;
    if (!s.is_constant())
      throw std::domain_error("solvable coefficient depends on c");
    f.add(lab.n, s.coeff(0));
  }
  return f;
}

BModuleElement solvable_from_fraction(const LaurentFraction& f, int partner) {
  BModuleElement out;
  for (const auto& [n, v] : f.numerator())
    out.add(SolvableLabel{n, partner}, ScalarPoly(v));
  return out;
}

BModuleElement SolvableModule::act(const Generator& g, const BasisLabel& u) const {
  require_in_B(g);
  const auto* lab = std::get_if<SolvableLabel>(&u);
  if (!lab) throw std::domain_error("label is not a solvable label");
  const LaurentFraction f = LaurentFraction::monomial(lab->n);
  BModuleElement zero;
  if (g.family == Family::L) {
    if (g.index == 0) {
      LaurentFraction r = solvable_xy(SolvableGen::X, f) * Rational(2);
      if (lab->partner) r = r + f;  // L_0 (G_1 f) = G_1 (2x f + f)
      return solvable_from_fraction(r, lab->partner);
    }
    if (g.index == 2)
      return solvable_from_fraction(solvable_xy(SolvableGen::Y, f), lab->partner);
    return zero;  // L_1 and L_{>=3} annihilate
  }
  if (g.index >= 2) return zero;
  // G_1
  if (lab->partner == 0) return solvable_from_fraction(f, 1);
  return solvable_from_fraction(solvable_xy(SolvableGen::Y, f) * Rational(-1), 0);
}

int SolvableModule::label_parity(const BasisLabel& u) const {
  return std::get<SolvableLabel>(u).partner & 1;
}

std::vector<BasisLabel> SolvableModule::enumerate_labels(int cap) const {
  std::vector<BasisLabel> out;
  for (int n = -cap; n <= cap; ++n)
    for (int partner = 0; partner <= 1; ++partner) out.push_back(SolvableLabel{n, partner});
  return out;
}

std::string SolvableModule::format_label(const BasisLabel& u) const {
  const auto& lab = std::get<SolvableLabel>(u);
  std::ostringstream out;
  if (lab.partner) out << "G1 ";
  out << "d^" << lab.n;
  return out.str();
}

BasisLabel SolvableModule::parse_label(const std::string& text) const {
  std::istringstream in(text);
  std::string tok;
  SolvableLabel lab;
  bool saw_d = false;
  while (in >> tok) {
    if (saw_d) throw std::invalid_argument("trailing token in label: " + text);
    if (tok == "G1") {
      if (lab.partner) throw std::invalid_argument("duplicate G1 in label: " + text);
      lab.partner = 1;
    } else if (tok == "d") {
      lab.n = 1;
      saw_d = true;
    } else if (tok.rfind("d^", 0) == 0) {
      lab.n = std::stoi(tok.substr(2));
      saw_d = true;
    } else {
      throw std::invalid_argument("bad label token: " + tok);
    }
  }
  if (!saw_d) throw std::invalid_argument("label missing d^n: " + text);
  return lab;
}

// ---------------------------------------------------------------------------
// Axiom checker
// ---------------------------------------------------------------------------

AxiomReport bmodule_axiom_check(const BModule& module, long index_bound,
                                int sample_size, unsigned seed) {
  AxiomReport report;
  const AlgebraSpec alg = AlgebraSpec::ramond();
  std::vector<Generator> gens;
  for (long m = 0; m <= index_bound; ++m) gens.push_back(Lgen(m));
  for (long n = 1; n <= index_bound; ++n) gens.push_back(Ggen(n));
  std::vector<BasisLabel> labels = module.enumerate_labels(4);
  std::mt19937 rng(seed);
  std::shuffle(labels.begin(), labels.end(), rng);
  if (static_cast<int>(labels.size()) > sample_size) labels.resize(sample_size);
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      const LinearCombo br = alg.bracket(x, y);
      const bool both_odd = parity(x) && parity(y);
      for (const auto& u : labels) {
        ++report.cases_checked;
        BModuleElement lhs = module.act(x, module.act(y, BModuleElement(u)));
        BModuleElement yx = module.act(y, module.act(x, BModuleElement(u)));
        if (!both_odd) yx = yx * ScalarPoly(Rational(-1));
        lhs += yx;
        BModuleElement rhs;
        for (const auto& [g, s] : br.terms) rhs += module.act(g, u) * s;
        if (!br.central.is_zero())
          rhs += BModuleElement(u) * (br.central * ScalarPoly::c());
        if (!(lhs - rhs).is_zero()) {
          report.failures.push_back(
              {"[" + format_generator(x) + "," + format_generator(y) + "]",
               module.format_label(u), "module axiom violated"});
        }
      }
    }
  }
  return report;
}

}  // namespace ramond

#include "ramond/induced.hpp"

#include <sstream>
#include <stdexcept>

#include "ramond/ratfunc.hpp"

namespace ramond {

InducedElement::InducedElement(const SVector& sv, const BasisLabel& u,
                               const ScalarPoly& coeff) {
  add(InducedKey{sv, u}, coeff);
}

void InducedElement::add(const InducedKey& key, const ScalarPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

InducedElement& InducedElement::operator+=(const InducedElement& other) {
  for (const auto& [k, s] : other.terms_) add(k, s);
  return *this;
}

InducedElement InducedElement::operator-(const InducedElement& other) const {
  InducedElement out = *this;
  for (const auto& [k, s] : other.terms_) out.add(k, -s);
  return out;
}

InducedElement InducedElement::operator*(const ScalarPoly& s) const {
  InducedElement out;
  for (const auto& [k, v] : terms_) out.add(k, v * s);
  return out;
}

InducedElement induced_act(const Generator& g, const InducedElement& w, const BModule& V) {
  InducedElement out;
  for (const auto& [key, coeff] : w.terms()) {
    Word word;
    word.letters.push_back(g);
    const Word mono = monomial_of(key.sv);
    word.letters.insert(word.letters.end(), mono.letters.begin(), mono.letters.end());
    const NormalElement ne = normal_order(word, coeff);
    for (const auto& [nk, co] : ne.terms()) {
      // Push the raising suffix into V, rightmost letter first.
      BModuleElement e{key.label};
      for (auto it = nk.raising.rbegin(); it != nk.raising.rend() && !e.is_zero(); ++it)
        e = V.act(*it, e);
      for (const auto& [u, s] : e.terms()) out.add(InducedKey{nk.lowering, u}, co * s);
    }
  }
  return out;
}

InducedElement induced_act(const LinearCombo& lc, const InducedElement& w, const BModule& V) {
  InducedElement out;
  for (const auto& [g, s] : lc.terms) out += induced_act(g, w, V) * s;
  if (!lc.central.is_zero()) out += w * (lc.central * ScalarPoly::c());
  return out;
}

std::set<SVector> supp(const InducedElement& w) {
  std::set<SVector> out;
  for (const auto& [key, s] : w.terms()) out.insert(key.sv);
  return out;
}

std::set<SVector> supp_m(const InducedElement& w, long m) {
  std::set<SVector> out;
  for (const auto& [key, s] : w.terms())
    if (key.sv.weight_W() == m) out.insert(key.sv);
  return out;
}

SVector deg(const InducedElement& w) {
  if (w.is_zero()) throw std::domain_error("deg(w) is defined only for w != 0");
  bool first = true;
  SVector best;
  for (const auto& [key, s] : w.terms()) {
    if (first || cmp_principal(key.sv, best) > 0) {
      best = key.sv;
      first = false;
    }
  }
  return best;
}

long weight_W(const InducedElement& w) { return deg(w).weight_W(); }

ProbeTrace simplicity_probe(InducedElement w, int r, const BModule& V) {
  ProbeTrace trace;
  if (w.is_zero()) {
    trace.falsified = true;
    trace.falsified_detail = "probe input is zero";
    return trace;
  }
  SVector d = deg(w);
  while (!d.is_zero()) {
    const int khat = d.min_nonzero_pos();
    const Generator g = khat % 2 == 1 ? Lgen(r + (khat + 1) / 2)   // khat = 2k-1
                                      : Ggen(r + khat / 2 - 1);    // khat = 2k
    w = induced_act(g, w, V);
    if (w.is_zero()) {
      trace.falsified = true;
      trace.falsified_detail = "step " + format_generator(g) + " yielded zero";
      return trace;
    }
    const SVector next = deg(w);
    if (cmp_principal(next, d) >= 0) {
      trace.falsified = true;
      trace.falsified_detail = "step " + format_generator(g) +
                               " did not strictly lower deg in the principal order";
      return trace;
    }
    trace.steps.push_back(ProbeStep{g, next});
    d = next;
  }
  trace.terminal = std::move(w);
  return trace;
}

std::vector<InducedElement> annihilator_space(const BModule& V, int b, long weight_cap,
                                              int index_window, int label_cap) {
  const std::vector<BasisLabel> labels = V.enumerate_labels(label_cap);
  if (labels.empty()) throw std::invalid_argument("empty label truncation");
  // Column basis: the slice spanned by W(sv) <= weight_cap and the label set.
  std::vector<InducedKey> columns;
  for (const auto& sv : enumerate_svectors(weight_cap))
    for (const auto& u : labels) columns.push_back(InducedKey{sv, u});
  // Constraint operators.
  std::vector<Generator> ops;
  for (int m = b + 1; m <= b + index_window; ++m) ops.push_back(Lgen(m));
  for (int n = b; n <= b - 1 + index_window; ++n) ops.push_back(Ggen(n));
  // Images of the basis vectors; rows indexed by (operator slot, image key).
  std::map<std::pair<std::size_t, InducedKey>, std::size_t> row_of;
  std::vector<std::vector<RatFunc>> matrix;
  for (std::size_t col = 0; col < columns.size(); ++col) {
    const InducedElement basis_vec(columns[col].sv, columns[col].label);
    for (std::size_t op = 0; op < ops.size(); ++op) {
      const InducedElement image = induced_act(ops[op], basis_vec, V);
      for (const auto& [key, s] : image.terms()) {
        auto [it, inserted] = row_of.emplace(std::make_pair(op, key), matrix.size());
        if (inserted) matrix.emplace_back(columns.size());
        matrix[it->second][col] = RatFunc(s);
      }
    }
  }
  std::vector<InducedElement> out;
  for (const auto& vec : nullspace(std::move(matrix), columns.size())) {
    // Clear denominators: multiply by the lcm of all entry denominators.
    ScalarPoly lcm = ScalarPoly::one();
    for (const auto& entry : vec) {
      if (entry.is_zero()) continue;
      const ScalarPoly g = poly_gcd(lcm, entry.den());
      lcm = lcm * poly_divmod(entry.den(), g).first;
    }
    InducedElement e;
    for (std::size_t col = 0; col < vec.size(); ++col) {
      if (vec[col].is_zero()) continue;
      const ScalarPoly factor = poly_divmod(lcm, vec[col].den()).first;
      e.add(columns[col], vec[col].num() * factor);
    }
    out.push_back(std::move(e));
  }
  return out;
}

RestrictedBound restricted_bound(const InducedElement& w, const BModule& V, int r,
                                 int index_window) {
  RestrictedBound out;
  out.k = (w.is_zero() ? 0 : weight_W(w)) + r;
  out.verified = true;
  for (long m = out.k + 1; m <= out.k + index_window; ++m) {
    if (!induced_act(Lgen(m), w, V).is_zero()) {
      out.verified = false;
      out.detail = "L(" + std::to_string(m) + ") does not annihilate";
      return out;
    }
    if (!induced_act(Ggen(m), w, V).is_zero()) {
      out.verified = false;
      out.detail = "G(" + std::to_string(m) + ") does not annihilate";
      return out;
    }
  }
  out.detail = "annihilation verified over (" + std::to_string(out.k) + ", " +
               std::to_string(out.k + index_window) + "]";
  return out;
}

int nilpotency_probe(const Generator& g, InducedElement w, const BModule& V, int r) {
  const long m = g.index;
  if (g.family == Family::L ? m <= r : m <= r - 1)
    throw std::invalid_argument("nilpotency probe requires index beyond r");
  long bound;
  const long W = w.is_zero() ? 0 : weight_W(w);
  if (g.family == Family::L)
    bound = (W + (m - r) - 1) / (m - r) + 2;  // ceil(W/(m-r)) + 2, Lemma 3.2(ii)
  else
    bound = 2 * (W + 4);  // safety cap; the G-case drop is at least m-r per step too
  int n = 0;
  while (!w.is_zero()) {
    if (n >= bound)
      throw std::runtime_error("nilpotency bound exceeded (falsifies Lemma 3.2)");
    w = induced_act(g, w, V);
    ++n;
  }
  return n;
}

std::string format_induced(const InducedElement& w, const BModule& V) {
  if (w.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, s] : w.terms()) {
    if (!first) out << " + ";
    if (s.coeffs().size() > 1)
      out << "(" << format_scalar_poly(s) << ")";
    else
      out << format_scalar_poly(s);
    out << "*" << format_svector(key.sv) << " " << V.format_label(key.label);
    first = false;
  }
  return out.str();
}

namespace {

std::vector<std::string> split_top_level_plus(const std::string& text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

InducedElement parse_induced(const std::string& text, const BModule& V) {
  InducedElement out;
  const std::string trimmed = trim(text);
  if (trimmed == "0" || trimmed.empty()) return out;
  for (const std::string& part : split_top_level_plus(trimmed)) {
    const std::size_t lb = part.find('[');
    const std::size_t rb = part.find(']', lb);
    if (lb == std::string::npos || rb == std::string::npos)
      throw std::invalid_argument("induced term missing [svector]: " + part);
    std::string coeff_str = trim(part.substr(0, lb));
    if (!coeff_str.empty() && coeff_str.back() == '*')
      coeff_str = trim(coeff_str.substr(0, coeff_str.size() - 1));
    if (coeff_str.size() >= 2 && coeff_str.front() == '(' && coeff_str.back() == ')')
      coeff_str = trim(coeff_str.substr(1, coeff_str.size() - 2));
    const ScalarPoly coeff =
        coeff_str.empty() ? ScalarPoly::one() : parse_scalar_poly(coeff_str);
    const SVector sv = parse_svector(part.substr(lb, rb - lb + 1));
    const std::string label_str = trim(part.substr(rb + 1));
    if (label_str.empty())
      throw std::invalid_argument("induced term missing label: " + part);
    out.add(InducedKey{sv, V.parse_label(label_str)}, coeff);
  }
  return out;
}

}  // namespace ramond

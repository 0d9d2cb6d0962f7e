#include "excalc/printer.hpp"

#include <ostream>
#include <sstream>

namespace excalc {

std::string to_text(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

namespace {

// "3/2*i", "i", "-i", "1-2*i"; never parenthesized here
std::string gauss_body(const GaussRat& c) {
  std::string out;
  if (c.im == 0) return to_text(c.re);
  if (c.re != 0) {
    out += to_text(c.re);
    out += c.im > 0 ? "+" : "-";
  } else if (c.im < 0) {
    out += "-";
  }
  const Rat mag = abs(c.im);
  if (mag != 1) {
    out += to_text(mag);
    out += "*";
  }
  out += "i";
  return out;
}

}  // namespace

std::string to_text(const GaussRat& c) { return gauss_body(c); }

std::string label_name(Mode mode, int dim, Label slot) {
  if (mode == Mode::Real) return "x" + std::to_string(slot + 1);
  return slot < dim ? "z" + std::to_string(slot + 1) : "zb" + std::to_string(slot - dim + 1);
}

std::string diff_label_name(Mode mode, int dim, Label slot) {
  return "d" + label_name(mode, dim, slot);
}

std::string shifted_var_name(Mode mode, int dim, Label slot) {
  if (mode == Mode::Real) return "u" + std::to_string(slot + 1);
  return slot < dim ? "v" + std::to_string(slot + 1) : "vb" + std::to_string(slot - dim + 1);
}

namespace {

GaussRat slot_base_value(const Form& w, Label slot) {
  if (w.mode() == Mode::Real) return w.base()[slot];
  return slot < w.dim() ? w.base()[slot] : w.base()[slot - w.dim()].conj();
}

// One shifted coordinate in standard coordinates: "x1", "(x1-1)", "(z1-(1+2*i))".
std::string var_factor(const Form& w, Label slot) {
  const std::string name = label_name(w.mode(), w.dim(), slot);
  const GaussRat b = slot_base_value(w, slot);
  if (b.is_zero()) return name;
  if (b.is_real()) {
    return "(" + name + (b.re > 0 ? "-" + to_text(b.re) : "+" + to_text(-b.re)) + ")";
  }
  return "(" + name + "-(" + gauss_body(b) + "))";
}

struct Piece {
  bool negative = false;
  std::string body;
};

Piece monomial_piece(const Form& w, const BasisTerm& t, const Exponents& e, const GaussRat& c) {
  Piece piece;
  std::vector<std::string> factors;
  GaussRat coeff = c;
  if (coeff.is_real()) {
    if (coeff.re < 0) {
      piece.negative = true;
      coeff.re = -coeff.re;
    }
    if (coeff.re != 1) factors.push_back(to_text(coeff.re));
  } else if (coeff.re == 0) {
    if (coeff.im < 0) {
      piece.negative = true;
      coeff.im = -coeff.im;
    }
    factors.push_back(coeff.im == 1 ? "i" : to_text(coeff.im) + "*i");
  } else {
    factors.push_back("(" + gauss_body(coeff) + ")");
  }
  for (std::size_t s = 0; s < e.size(); ++s) {
    if (e[s] == 0) continue;
    std::string f = var_factor(w, static_cast<Label>(s));
    if (e[s] > 1) f += "^" + std::to_string(e[s]);
    factors.push_back(std::move(f));
  }
  for (Label l : t.labels) factors.push_back(diff_label_name(w.mode(), w.dim(), l));
  if (factors.empty()) factors.push_back("1");
  // "*" everywhere except between two differentials, which wedge
  std::string body = factors[0];
  for (std::size_t k = 1; k < factors.size(); ++k) {
    body += !t.labels.empty() && k > factors.size() - t.labels.size() ? "/\\" : "*";
    body += factors[k];
  }
  piece.body = std::move(body);
  return piece;
}

}  // namespace

std::string to_text(const Form& w) {
  if (w.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, p] : w.terms()) {
    for (const auto& [e, c] : p.monomials()) {
      Piece piece = monomial_piece(w, t, e, c);
      if (first) {
        if (piece.negative) out += "-";
        first = false;
      } else {
        out += piece.negative ? "-" : "+";
      }
      out += piece.body;
    }
  }
  return out;
}

namespace {

nlohmann::json scalar_json(const GaussRat& c, Mode mode) {
  if (mode == Mode::Real && c.is_real()) return to_text(c.re);
  return nlohmann::json{{"re", to_text(c.re)}, {"im", to_text(c.im)}};
}

}  // namespace

nlohmann::json to_json(const Form& w) {
  nlohmann::json j;
  j["mode"] = w.mode() == Mode::Real ? "real" : "complex";
  j["dim"] = w.dim();
  nlohmann::json base = nlohmann::json::array();
  for (const auto& b : w.base()) base.push_back(scalar_json(b, w.mode()));
  j["base"] = std::move(base);
  j["degree"] = w.degree();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, p] : w.terms()) {
    nlohmann::json jterm;
    nlohmann::json basis = nlohmann::json::array();
    for (Label l : t.labels) basis.push_back(diff_label_name(w.mode(), w.dim(), l));
    jterm["basis"] = std::move(basis);
    nlohmann::json coeff = nlohmann::json::array();
    for (const auto& [e, c] : p.monomials()) {
      nlohmann::json monomial = nlohmann::json::object();
      for (std::size_t s = 0; s < e.size(); ++s) {
        if (e[s] > 0) monomial[shifted_var_name(w.mode(), w.dim(), static_cast<Label>(s))] = e[s];
      }
      coeff.push_back({{"monomial", std::move(monomial)}, {"value", scalar_json(c, w.mode())}});
    }
    jterm["coeff"] = std::move(coeff);
    terms.push_back(std::move(jterm));
  }
  j["terms"] = std::move(terms);
  return j;
}

std::ostream& operator<<(std::ostream& os, const Form& w) { return os << to_text(w); }

}  // namespace excalc

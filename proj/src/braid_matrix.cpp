#include "positroid/braid_matrix.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace positroid {

BraidMatrix::BraidMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
}

BraidMatrix BraidMatrix::identity(int n) {
  BraidMatrix m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = Polynomial::constant(1);
  return m;
}

BraidMatrix BraidMatrix::operator*(const BraidMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  BraidMatrix r(n_);
  for (int i = 1; i <= n_; ++i)
    for (int k = 1; k <= n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 1; j <= n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return r;
}

BraidMatrix generator_matrix(int i, const Polynomial& z, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  BraidMatrix m = BraidMatrix::identity(n);
  m.at(i, i) = Polynomial::zero();
  m.at(i, i + 1) = Polynomial::constant(1);
  m.at(i + 1, i) = Polynomial::constant(1);
  m.at(i + 1, i + 1) = z;
  return m;
}

BraidMatrix word_matrix(const BraidWord& beta) {
  BraidMatrix m = BraidMatrix::identity(beta.strands);
  int zcount = 0;
  for (const auto& l : beta.letters) {
    Polynomial z = l.positive ? Polynomial::variable(zvar(++zcount)) : Polynomial::zero();
    m = m * generator_matrix(l.index, z, beta.strands);
  }
  return m;
}

std::vector<std::pair<Path, Polynomial>> paths_of_entry(const BraidWord& beta, int i, int j) {
  std::vector<std::pair<Path, Polynomial>> out;
  std::vector<int> jumps;
  int zcount_total = 0;
  std::vector<int> zindex(beta.length() + 1, 0);
  for (std::size_t p = 0; p < beta.length(); ++p)
    if (beta.letters[p].positive) zindex[p + 1] = ++zcount_total;

  std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int level) {
    if (pos == beta.length()) {
      if (level == j) {
        Polynomial mono = Polynomial::constant(1);
        for (int p : jumps) mono = mono * Polynomial::variable(zvar(zindex[p]));
        out.push_back({Path{i, j, jumps}, mono});
      }
      return;
    }
    const Letter& l = beta.letters[pos];
    if (level == l.index + 1 && l.positive) {
      // jump above the crossing, staying on the same strand level
      jumps.push_back(static_cast<int>(pos) + 1);
      walk(pos + 1, level);
      jumps.pop_back();
      walk(pos + 1, l.index);
      return;
    }
    int next = level;
    if (level == l.index) next = l.index + 1;
    else if (level == l.index + 1) next = l.index;  // negative crossing
    walk(pos + 1, next);
  };
  walk(0, i);
  return out;
}

bool VarietyPresentation::uses_ground_ring() const {
  for (const auto& e : equations)
    for (const auto& v : e.variables())
      if (v.family == Variable::Family::T) return true;
  return false;
}

std::string VarietyPresentation::to_json() const {
  std::ostringstream os;
  os << "{\"vars\":[";
  for (std::size_t i = 0; i < ambient.size(); ++i)
    os << (i ? "," : "") << "\"" << positroid::to_string(ambient[i]) << "\"";
  os << "],\"equations\":[";
  for (std::size_t i = 0; i < equations.size(); ++i)
    os << (i ? "," : "") << "\"" << equations[i].to_string() << "\"";
  os << "],\"label\":\"" << label << "\"}";
  return os.str();
}

namespace {

std::vector<Variable> z_variables_of(const BraidWord& beta) {
  std::vector<Variable> vars;
  int zcount = 0;
  for (const auto& l : beta.letters)
    if (l.positive) vars.push_back(zvar(++zcount));
  return vars;
}

}  // namespace

VarietyPresentation variety_upper_triangular(const BraidWord& beta, const Permutation& pi) {
  if (!beta.is_positive())
    throw std::invalid_argument("variety_upper_triangular requires a positive word");
  if (pi.size() != beta.strands) throw std::invalid_argument("pi size mismatch");
  BraidMatrix m = word_matrix(beta);
  VarietyPresentation v;
  v.ambient = z_variables_of(beta);
  for (int col = 1; col <= beta.strands; ++col)
    for (int row = col + 1; row <= beta.strands; ++row)
      v.equations.push_back(m.at(row, pi(col)));
  v.label = render_braid(beta) + " ; pi=" + pi.to_string();
  return v;
}

VarietyPresentation variety_braid_pair(const BraidWord& eta) {
  BraidWord beta = eta.concat(half_twist(eta.strands));
  BraidMatrix m = word_matrix(beta);
  int n = beta.strands;
  VarietyPresentation v;
  v.ambient = z_variables_of(beta);
  for (int row = 1; row <= n; ++row)
    for (int col = 1; col <= n; ++col) {
      Polynomial e = m.at(row, col);
      if (row == col) e += Polynomial::variable(tvar(row));
      v.equations.push_back(e);
    }
  v.label = "braid pair " + render_braid(eta);
  return v;
}

}  // namespace positroid

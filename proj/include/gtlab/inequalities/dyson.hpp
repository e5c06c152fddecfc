#pragma once

#include <string>
#include <vector>

#include "gtlab/core.hpp"
#include "gtlab/inequalities/gap_report.hpp"

namespace gtlab {

enum class Letter { x, x_dagger };

/// A product of 2n factors, each X or X^dagger.
class WordSpec {
 public:
  explicit WordSpec(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty() || letters_.size() % 2 != 0) {
      throw DomainError("WordSpec: word length must be even and positive");
    }
  }

  /// Parses a string over {'X', 'D'} (D for X^dagger).
  static WordSpec parse(const std::string& s) {
    std::vector<Letter> l;
    for (char c : s) {
      if (c == 'X') l.push_back(Letter::x);
      else if (c == 'D') l.push_back(Letter::x_dagger);
      else throw DomainError("WordSpec::parse: unexpected letter");
    }
    return WordSpec(std::move(l));
  }

  /// X X^dagger X X^dagger ... of length 2n.
  static WordSpec alternating(int n) {
    std::vector<Letter> l;
    for (int i = 0; i < n; ++i) {
      l.push_back(Letter::x);
      l.push_back(Letter::x_dagger);
    }
    return WordSpec(std::move(l));
  }

  /// Word number `code` in binary among all 2^{2n} words of length 2n.
  static WordSpec from_code(unsigned code, int n) {
    std::vector<Letter> l;
    for (int i = 0; i < 2 * n; ++i) l.push_back(((code >> i) & 1u) != 0 ? Letter::x_dagger : Letter::x);
    return WordSpec(std::move(l));
  }

  int half_length() const noexcept { return static_cast<int>(letters_.size() / 2); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  std::string str() const {
    std::string s;
    for (Letter l : letters_) s += l == Letter::x ? 'X' : 'D';
    return s;
  }

 private:
  std::vector<Letter> letters_;
};

template <typename Real>
ComplexMatrix<Real> word_product(const ComplexMatrix<Real>& x, const WordSpec& w) {
  require_square(x, "word_product");
  const ComplexMatrix<Real> xd = x.adjoint();
  ComplexMatrix<Real> p = ComplexMatrix<Real>::Identity(x.rows(), x.cols());
  for (Letter l : w.letters()) p = p * (l == Letter::x ? x : xd);
  return p;
}

/// |Tr XY|^2 <= Tr(X^dagger X) Tr(Y^dagger Y).
template <typename Real>
GapReport cauchy_trace_check(const ComplexMatrix<Real>& x, const ComplexMatrix<Real>& y) {
  require_same_dim(x, y, "cauchy_trace_check");
  const double lhs = double(std::norm(Complex<Real>((x * y).trace())));
  const double rhs = double((x.adjoint() * x).trace().real() * (y.adjoint() * y).trace().real());
  return GapReport::make(lhs, rhs, "Lemma1 Cauchy");
}

/// |Tr P| <= Tr (X X^dagger)^n for any word P of length 2n.
template <typename Real>
GapReport word_trace_bound(const ComplexMatrix<Real>& x, const WordSpec& word) {
  const ComplexMatrix<Real> p = word_product(x, word);
  const ComplexMatrix<Real> xxd = x * x.adjoint();
  ComplexMatrix<Real> pw = ComplexMatrix<Real>::Identity(x.rows(), x.cols());
  for (int i = 0; i < word.half_length(); ++i) pw = pw * xxd;
  const double lhs = double(std::abs(Complex<Real>(p.trace())));
  const double rhs = double(real_trace<Real>(pw));
  return GapReport::make(lhs, rhs, "Lemma2 word " + word.str());
}

/// |Tr (AB)^{2^k}| <= Tr(A^{2^k} B^{2^k}), evaluated through X = AB.
template <typename Real>
GapReport lemma3_check(const HermitianMatrix<Real>& a, const HermitianMatrix<Real>& b, int k) {
  if (k < 1 || k > 20) throw DomainError("lemma3_check: k must be in [1, 20]");
  require_same_dim(a.matrix(), b.matrix(), "lemma3_check");
  ComplexMatrix<Real> ab = a.matrix() * b.matrix();
  ComplexMatrix<Real> ap = a.matrix();
  ComplexMatrix<Real> bp = b.matrix();
  for (int i = 0; i < k; ++i) {
    ab = ab * ab;
    ap = ap * ap;
    bp = bp * bp;
  }
  const double lhs = double(std::abs(Complex<Real>(ab.trace())));
  const double rhs = double(real_trace<Real>(ComplexMatrix<Real>(ap * bp)));
  return GapReport::make(lhs, rhs, "Lemma3 k=" + std::to_string(k));
}

}  // namespace gtlab

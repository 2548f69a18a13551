#include "brauerlie/incarnation/incarnation.hpp"

#include <map>
#include <numeric>

#include "brauerlie/errors.hpp"
#include "brauerlie/lie/lie.hpp"
#include "brauerlie/parallel.hpp"

namespace brauerlie {
namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void check_config(const IncarnationConfig& cfg) {
  if (cfg.n < 1) throw Error(Errc::invalid_argument, "incarnation dimension must be positive");
}

void check_flavor(const DiagMorphism& f, const IncarnationConfig& cfg) {
  auto fl = f.flavor();
  if (fl && *fl != cfg.flavor) throw Error(Errc::flavor, "morphism flavor does not match the incarnation");
}

Word up_word(int k) { return Word::repeat(Letter::up, static_cast<std::size_t>(k)); }

// Flattened vec of an n x n matrix under v ⊗ w ↦ v w^T.
Vec<Rational> vec_of(const QMatrix& m) { return m.data(); }

Vec<Rational> kron_vec(const Vec<Rational>& a, const Vec<Rational>& b) {
  Vec<Rational> r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return r;
}

QMatrix unit_matrix(int n, int a, int b) {
  QMatrix m(n, n);
  m(a, b) = Rational(1);
  return m;
}

}  // namespace

std::vector<Matching> hom_basis(const Word& w1, const Word& w2) { return enumerate_matchings(w1, w2); }

Vec<Rational> coordinates(const DiagMorphism& f, const std::vector<Matching>& basis, const Rational& delta) {
  Vec<Rational> v(basis.size(), Rational(0));
  for (const auto& [m, c] : f.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m)) throw Error(Errc::invalid_argument, "morphism term is not in the supplied basis");
    v[it - basis.begin()] += c.evaluate(delta);
  }
  return v;
}

namespace {

// Calls fn(row, col) for each of the n^pairs nonzero entries of a matching.
template <class F>
void for_each_entry(const Matching& m, std::size_t k, std::size_t l, int n, F&& fn) {
  auto pairs = matching_pairs(m);
  std::vector<int> value(pairs.size(), 0), point(k + l, 0);
  for (;;) {
    for (std::size_t p = 0; p < pairs.size(); ++p) point[pairs[p].first] = point[pairs[p].second] = value[p];
    std::size_t r = 0, c = 0;
    for (std::size_t i = 0; i < k; ++i) c = c * n + point[i];
    for (std::size_t j = 0; j < l; ++j) r = r * n + point[k + j];
    fn(r, c);
    std::size_t p = 0;
    while (p < value.size() && ++value[p] == n) value[p++] = 0;
    if (p == value.size()) break;
  }
}

}  // namespace

QMatrix incarnate_matching(const Matching& m, std::size_t k, std::size_t l, int n) {
  QMatrix out(ipow(n, l), ipow(n, k));
  for_each_entry(m, k, l, n, [&](std::size_t r, std::size_t c) { out(r, c) = Rational(1); });
  return out;
}

QMatrix incarnate(const DiagMorphism& f, const IncarnationConfig& cfg) {
  check_config(cfg);
  check_flavor(f, cfg);
  std::size_t k = f.domain().size(), l = f.codomain().size();
  QMatrix out(ipow(cfg.n, l), ipow(cfg.n, k));
  Rational delta(cfg.n);
  for (const auto& [m, c] : f.terms()) {
    Rational x = c.evaluate(delta);
    if (x.is_zero()) continue;
    for_each_entry(m, k, l, cfg.n, [&](std::size_t r, std::size_t col) { out(r, col) += x; });
  }
  return out;
}

QMatrix incarnate(const KarMorphism& f, const IncarnationConfig& cfg) { return incarnate(f.blocks(), cfg); }

QMatrix incarnate(const BlockMatrix& b, const IncarnationConfig& cfg) {
  std::vector<std::size_t> roff{0}, coff{0};
  for (const auto& w : b.targets()) roff.push_back(roff.back() + ipow(cfg.n, w.size()));
  for (const auto& w : b.sources()) coff.push_back(coff.back() + ipow(cfg.n, w.size()));
  QMatrix out(roff.back(), coff.back());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b.at(i, j).is_zero()) continue;
      QMatrix m = incarnate(b.at(i, j), cfg);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(roff[i] + r, coff[j] + c) = m(r, c);
    }
  return out;
}

QMatrix incarnation_matrix(const std::vector<Matching>& basis, const Word& w1, const Word& w2, int n) {
  std::size_t len = ipow(n, w1.size()) * ipow(n, w2.size());
  std::vector<Vec<Rational>> cols(basis.size());
  parallel_for(basis.size(), [&](std::size_t i) { cols[i] = incarnate_matching(basis[i], w1.size(), w2.size(), n).data(); });
  QMatrix m(len, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t r = 0; r < len; ++r)
      if (!cols[j][r].is_zero()) m(r, j) = cols[j][r];
  return m;
}

KernelResult kernel_of_incarnation(const Word& w1, const Word& w2, const IncarnationConfig& cfg) {
  check_config(cfg);
  for (const Word* w : {&w1, &w2})
    if (w->flavor() && *w->flavor() != cfg.flavor) throw Error(Errc::flavor, "word flavor does not match the incarnation");
  KernelResult r;
  r.domain = w1;
  r.codomain = w2;
  r.n = cfg.n;
  r.basis_diagrams = hom_basis(w1, w2);
  QMatrix m = incarnation_matrix(r.basis_diagrams, w1, w2, cfg.n);
  auto rr = rref(m);
  r.rank = rr.rank;
  r.basis = kernel_from_rref(rr, m.cols());
  return r;
}

Json KernelResult::to_json() const {
  Json j;
  j["word"] = domain == codomain ? domain.str() : domain.str() + "->" + codomain.str();
  j["n"] = n;
  j["hom_dimension"] = hom_dimension();
  j["rank"] = rank;
  j["kernel_dimension"] = kernel_dimension();
  Json b = Json::array();
  for (const auto& v : basis) b.push_back(vector_to_json(v));
  j["basis"] = b;
  return j;
}

Report antisymmetrizer_kernel_check(const IncarnationConfig& cfg, const std::vector<int>& ks) {
  check_config(cfg);
  if (cfg.flavor != Flavor::oriented) throw Error(Errc::flavor, "antisymmetrizer check needs the oriented flavor");
  Report rep;
  const int n = cfg.n;
  DiagMorphism a = antisymmetrizer(n + 1);
  rep.add("A_" + std::to_string(n + 1) + " in ker I_" + std::to_string(n), incarnate(a, cfg).is_zero());
  for (int k : ks) {
    if (k < 1) throw Error(Errc::invalid_argument, "word length must be positive");
    Word w = up_word(k);
    KernelResult ker = kernel_of_incarnation(w, w, cfg);
    std::size_t span_rank = 0, joint_rank = 0;
    if (k >= n + 1) {
      DiagMorphism gen = tensor(a, identity(up_word(k - n - 1)));
      std::vector<Vec<Rational>> rows;
      const auto& perms = ker.basis_diagrams;  // End(u^k) is spanned by permutations
      for (const auto& p : perms) {
        DiagMorphism left = compose(DiagMorphism::single(w, w, p), gen);
        for (const auto& q : perms) rows.push_back(coordinates(compose(left, DiagMorphism::single(w, w, q)), perms, Rational(n)));
      }
      span_rank = rank(QMatrix::from_rows(rows));
      rows.insert(rows.end(), ker.basis.begin(), ker.basis.end());
      joint_rank = rank(QMatrix::from_rows(rows));
    } else if (!ker.basis.empty()) {
      joint_rank = rank(QMatrix::from_rows(ker.basis));
    }
    std::string tag = "End(" + w.str() + ")";
    rep.add(tag + ": ideal span equals kernel", span_rank == ker.kernel_dimension() && joint_rank == span_rank,
            "kernel dimension " + std::to_string(ker.kernel_dimension()) + ", ideal span dimension " + std::to_string(span_rank));
  }
  return rep;
}

Report so_object_image_check(int n) {
  if (n < 2) throw Error(Errc::invalid_argument, "so image check needs n >= 2");
  IncarnationConfig cfg{n, Flavor::unoriented};
  LiePtr so = unoriented_so_object();
  Report rep;
  QMatrix e = incarnate(so->carrier.idempotent().at(0, 0), cfg);
  // projector onto skew matrices, written out directly
  QMatrix skew(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      skew(i * n + j, i * n + j) += Rational(1, 2);
      skew(j * n + i, i * n + j) -= Rational(1, 2);
    }
  rep.add("I'(e) is the skew projector", e == skew);
  std::size_t r = rank(e);
  rep.add("image dimension n(n-1)/2", r == static_cast<std::size_t>(n * (n - 1) / 2), "rank " + std::to_string(r));
  QMatrix b = incarnate(so->bracket.block(0, 0), cfg);
  bool ok = true;
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c)
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
          QMatrix x = unit_matrix(n, a, c) - unit_matrix(n, c, a), y = unit_matrix(n, p, q) - unit_matrix(n, q, p);
          ok = ok && b * kron_vec(vec_of(x), vec_of(y)) == vec_of(x * y - y * x);
        }
  rep.add("incarnated bracket is the commutator", ok);
  return rep;
}

Report gl_commutator_check(int n) {
  IncarnationConfig cfg{n, Flavor::oriented};
  LiePtr gl = gl_object();
  QMatrix b = incarnate(gl->bracket.block(0, 0), cfg);
  bool ok = true;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          QMatrix x = unit_matrix(n, a, c), y = unit_matrix(n, p, q);
          ok = ok && b * kron_vec(vec_of(x), vec_of(y)) == vec_of(x * y - y * x);
        }
  Report rep;
  rep.add("I_" + std::to_string(n) + "(gl bracket) is the commutator", ok);
  return rep;
}

}  // namespace brauerlie

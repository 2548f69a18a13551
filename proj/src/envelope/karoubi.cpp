#include "brauerlie/envelope/karoubi.hpp"

#include "brauerlie/errors.hpp"

namespace brauerlie {

BlockMatrix::BlockMatrix(std::vector<Word> targets, std::vector<Word> sources)
    : tgt_(std::move(targets)), src_(std::move(sources)) {
  b_.reserve(tgt_.size() * src_.size());
  for (const auto& t : tgt_)
    for (const auto& s : src_) b_.emplace_back(s, t);
}

BlockMatrix::BlockMatrix(std::vector<Word> targets, std::vector<Word> sources, std::vector<DiagMorphism> blocks)
    : tgt_(std::move(targets)), src_(std::move(sources)), b_(std::move(blocks)) {
  if (b_.size() != tgt_.size() * src_.size()) throw Error(Errc::shape, "block count does not match the summand lists");
  for (std::size_t i = 0; i < tgt_.size(); ++i)
    for (std::size_t j = 0; j < src_.size(); ++j) {
      const auto& f = at(i, j);
      if (f.domain() != src_[j] || f.codomain() != tgt_[i])
        throw Error(Errc::shape, "block (" + std::to_string(i) + "," + std::to_string(j) + ") has boundary \"" + f.domain().str() +
                                     "\" -> \"" + f.codomain().str() + "\", expected \"" + src_[j].str() + "\" -> \"" + tgt_[i].str() + "\"");
    }
}

void BlockMatrix::set(std::size_t i, std::size_t j, DiagMorphism f) {
  if (f.domain() != src_.at(j) || f.codomain() != tgt_.at(i)) throw Error(Errc::shape, "block boundary mismatch");
  b_[i * src_.size() + j] = std::move(f);
}

void BlockMatrix::add_to(std::size_t i, std::size_t j, const DiagMorphism& f) { b_[i * src_.size() + j] += f; }

bool BlockMatrix::is_zero() const {
  for (const auto& f : b_)
    if (!f.is_zero()) return false;
  return true;
}

void BlockMatrix::same_shape(const BlockMatrix& o) const {
  if (tgt_ != o.tgt_ || src_ != o.src_) throw Error(Errc::shape, "block matrices have different summands");
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o) {
  same_shape(o);
  for (std::size_t k = 0; k < b_.size(); ++k) b_[k] += o.b_[k];
  return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& o) {
  same_shape(o);
  for (std::size_t k = 0; k < b_.size(); ++k) b_[k] -= o.b_[k];
  return *this;
}

BlockMatrix operator*(const DeltaPoly& c, const BlockMatrix& m) {
  BlockMatrix r = m;
  for (auto& f : r.b_) f = c * f;
  return r;
}

BlockMatrix block_compose(const BlockMatrix& f, const BlockMatrix& g) {
  if (f.sources() != g.targets()) throw Error(Errc::shape, "cannot compose block matrices: summands differ");
  BlockMatrix r(f.targets(), g.sources());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t k = 0; k < g.cols(); ++k)
      for (std::size_t j = 0; j < f.cols(); ++j) {
        if (f.at(i, j).is_zero() || g.at(j, k).is_zero()) continue;
        r.add_to(i, k, compose(f.at(i, j), g.at(j, k)));
      }
  return r;
}

namespace {

std::vector<Word> tensor_words(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::vector<Word> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + y);
  return out;
}

}  // namespace

BlockMatrix block_tensor(const BlockMatrix& f, const BlockMatrix& g) {
  BlockMatrix r(tensor_words(f.targets(), g.targets()), tensor_words(f.sources(), g.sources()));
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (f.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l) {
          if (g.at(k, l).is_zero()) continue;
          r.set(i * g.rows() + k, j * g.cols() + l, tensor(f.at(i, j), g.at(k, l)));
        }
    }
  return r;
}

BlockMatrix block_identity(const std::vector<Word>& summands) {
  BlockMatrix r(summands, summands);
  for (std::size_t i = 0; i < summands.size(); ++i) r.set(i, i, brauerlie::identity(summands[i]));
  return r;
}

KarObject::KarObject() : d_(std::make_shared<const Data>()) {}

KarObject::KarObject(std::vector<Word> summands, BlockMatrix idempotent) {
  if (idempotent.targets() != summands || idempotent.sources() != summands)
    throw Error(Errc::shape, "idempotent is not a square block matrix on the summands");
  if (block_compose(idempotent, idempotent) != idempotent) throw Error(Errc::not_idempotent, "idempotent check failed: e∘e != e");
  d_ = std::make_shared<const Data>(Data{std::move(summands), std::move(idempotent)});
}

KarObject KarObject::unchecked(std::vector<Word> summands, BlockMatrix idempotent) {
  KarObject x;
#ifndef NDEBUG
  x = KarObject(std::move(summands), std::move(idempotent));
#else
  x.d_ = std::make_shared<const Data>(Data{std::move(summands), std::move(idempotent)});
#endif
  return x;
}

KarObject KarObject::of(const Word& w) { return unchecked({w}, block_identity({w})); }

bool KarObject::is_plain() const { return d_->idempotent == block_identity(d_->summands); }

KarObject kar_object(std::vector<Word> summands, BlockMatrix idempotent) { return KarObject(std::move(summands), std::move(idempotent)); }

bool is_kar_morphism(const KarObject& source, const KarObject& target, const BlockMatrix& blocks) {
  if (blocks.sources() != source.summands() || blocks.targets() != target.summands()) return false;
  return block_compose(target.idempotent(), blocks) == blocks && block_compose(blocks, source.idempotent()) == blocks;
}

KarMorphism::KarMorphism(KarObject source, KarObject target, BlockMatrix blocks)
    : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(blocks)) {
  if (m_.sources() != src_.summands() || m_.targets() != tgt_.summands())
    throw Error(Errc::shape, "block matrix does not match source/target summands");
  if (block_compose(tgt_.idempotent(), m_) != m_ || block_compose(m_, src_.idempotent()) != m_)
    throw Error(Errc::validation, "morphism validation failed: blocks are not compatible with the idempotents");
}

KarMorphism KarMorphism::unchecked(KarObject source, KarObject target, BlockMatrix blocks) {
#ifndef NDEBUG
  return KarMorphism(std::move(source), std::move(target), std::move(blocks));
#else
  KarMorphism f;
  f.src_ = std::move(source);
  f.tgt_ = std::move(target);
  f.m_ = std::move(blocks);
  return f;
#endif
}

KarMorphism KarMorphism::identity(const KarObject& x) { return unchecked(x, x, x.idempotent()); }

KarMorphism KarMorphism::zero(const KarObject& source, const KarObject& target) {
  return unchecked(source, target, BlockMatrix(target.summands(), source.summands()));
}

KarMorphism KarMorphism::plain(const DiagMorphism& f) {
  return unchecked(KarObject::of(f.domain()), KarObject::of(f.codomain()), BlockMatrix({f.codomain()}, {f.domain()}, {f}));
}

void KarMorphism::same_boundary(const KarMorphism& o) const {
  if (!(src_ == o.src_) || !(tgt_ == o.tgt_)) throw Error(Errc::shape, "morphisms have different source or target");
}

KarMorphism& KarMorphism::operator+=(const KarMorphism& o) {
  same_boundary(o);
  m_ += o.m_;
  return *this;
}

KarMorphism& KarMorphism::operator-=(const KarMorphism& o) {
  same_boundary(o);
  m_ -= o.m_;
  return *this;
}

KarMorphism KarMorphism::operator-() const {
  KarMorphism r = *this;
  r.m_ = DeltaPoly(-1) * r.m_;
  return r;
}

KarMorphism operator*(const DeltaPoly& c, const KarMorphism& f) {
  KarMorphism r = f;
  r.m_ = c * r.m_;
  return r;
}

KarMorphism kar_compose(const KarMorphism& f, const KarMorphism& g) {
  if (!(f.source() == g.target())) throw Error(Errc::shape, "cannot compose: source of f differs from target of g");
  return KarMorphism::unchecked(g.source(), f.target(), block_compose(f.blocks(), g.blocks()));
}

KarObject kar_tensor(const KarObject& x, const KarObject& y) {
  BlockMatrix e = block_tensor(x.idempotent(), y.idempotent());
  std::vector<Word> s = e.targets();
  return KarObject::unchecked(std::move(s), std::move(e));
}

KarMorphism kar_tensor(const KarMorphism& f, const KarMorphism& g) {
  return KarMorphism::unchecked(kar_tensor(f.source(), g.source()), kar_tensor(f.target(), g.target()), block_tensor(f.blocks(), g.blocks()));
}

KarMorphism kar_add(const KarMorphism& f, const KarMorphism& g) { return f + g; }

namespace {

std::size_t offset_of(const std::vector<KarObject>& objects, std::size_t i) {
  std::size_t off = 0;
  for (std::size_t k = 0; k < i; ++k) off += objects[k].size();
  return off;
}

}  // namespace

KarObject kar_direct_sum(const std::vector<KarObject>& objects) {
  std::vector<Word> s;
  for (const auto& x : objects) s.insert(s.end(), x.summands().begin(), x.summands().end());
  BlockMatrix e(s, s);
  std::size_t off = 0;
  for (const auto& x : objects) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) e.set(off + i, off + j, x.idempotent().at(i, j));
    off += x.size();
  }
  return KarObject::unchecked(std::move(s), std::move(e));
}

KarMorphism kar_inclusion(const std::vector<KarObject>& objects, std::size_t i) {
  KarObject sum = kar_direct_sum(objects);
  const KarObject& x = objects.at(i);
  BlockMatrix m(sum.summands(), x.summands());
  std::size_t off = offset_of(objects, i);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) m.set(off + a, b, x.idempotent().at(a, b));
  return KarMorphism::unchecked(x, sum, std::move(m));
}

KarMorphism kar_projection(const std::vector<KarObject>& objects, std::size_t i) {
  KarObject sum = kar_direct_sum(objects);
  const KarObject& x = objects.at(i);
  BlockMatrix m(x.summands(), sum.summands());
  std::size_t off = offset_of(objects, i);
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) m.set(a, off + b, x.idempotent().at(a, b));
  return KarMorphism::unchecked(sum, x, std::move(m));
}

KarMorphism kar_braiding(const KarObject& x, const KarObject& y) {
  KarObject xy = kar_tensor(x, y), yx = kar_tensor(y, x);
  BlockMatrix p(yx.summands(), xy.summands());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      p.set(j * x.size() + i, i * y.size() + j, braiding(x.summands()[i], y.summands()[j]));
  return KarMorphism::unchecked(xy, yx, block_compose(yx.idempotent(), p));
}

namespace {

BlockMatrix dual_blocks(const BlockMatrix& m) {
  std::vector<Word> t, s;
  for (const auto& w : m.sources()) t.push_back(w.dual());
  for (const auto& w : m.targets()) s.push_back(w.dual());
  BlockMatrix r(t, s);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j)
      if (!m.at(j, i).is_zero()) r.set(i, j, dual_morphism(m.at(j, i)));
  return r;
}

}  // namespace

KarObject kar_dual(const KarObject& x) {
  BlockMatrix e = dual_blocks(x.idempotent());
  std::vector<Word> s = e.targets();
  return KarObject::unchecked(std::move(s), std::move(e));
}

KarMorphism kar_dual(const KarMorphism& f) {
  return KarMorphism::unchecked(kar_dual(f.target()), kar_dual(f.source()), dual_blocks(f.blocks()));
}

KarMorphism kar_coevaluation(const KarObject& x) {
  KarObject xx = kar_tensor(x, kar_dual(x));
  KarObject one = KarObject::unit();
  BlockMatrix c(xx.summands(), one.summands());
  for (std::size_t i = 0; i < x.size(); ++i) c.set(i * x.size() + i, 0, coevaluation(x.summands()[i]));
  return KarMorphism::unchecked(one, xx, block_compose(xx.idempotent(), c));
}

KarMorphism kar_evaluation(const KarObject& x) {
  KarObject xx = kar_tensor(kar_dual(x), x);
  KarObject one = KarObject::unit();
  BlockMatrix c(one.summands(), xx.summands());
  for (std::size_t i = 0; i < x.size(); ++i) c.set(0, i * x.size() + i, evaluation(x.summands()[i]));
  return KarMorphism::unchecked(xx, one, block_compose(c, xx.idempotent()));
}

namespace {

BlockMatrix specialize_blocks(const BlockMatrix& m, const Rational& delta) {
  BlockMatrix r(m.targets(), m.sources());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, specialize(m.at(i, j), delta));
  return r;
}

}  // namespace

KarObject kar_specialize(const KarObject& x, const Rational& delta) {
  return KarObject::unchecked(x.summands(), specialize_blocks(x.idempotent(), delta));
}

KarMorphism kar_specialize(const KarMorphism& f, const Rational& delta) {
  return KarMorphism::unchecked(kar_specialize(f.source(), delta), kar_specialize(f.target(), delta), specialize_blocks(f.blocks(), delta));
}

Json to_json(const BlockMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const KarObject& x) {
  Json j;
  Json s = Json::array();
  for (const auto& w : x.summands()) s.push_back(w.str());
  j["summands"] = s;
  j["idempotent"] = to_json(x.idempotent());
  return j;
}

Json to_json(const KarMorphism& f) {
  Json j;
  j["source"] = to_json(f.source());
  j["target"] = to_json(f.target());
  j["blocks"] = to_json(f.blocks());
  return j;
}

}  // namespace brauerlie

#pragma once

#include <memory>
#include <vector>

#include "brauerlie/diagram/morphism.hpp"
#include "brauerlie/diagram/render.hpp"

namespace brauerlie {

// Matrix of diagram morphisms; block (i, j) maps source summand j to target summand i.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  BlockMatrix(std::vector<Word> targets, std::vector<Word> sources);  // all zero
  BlockMatrix(std::vector<Word> targets, std::vector<Word> sources, std::vector<DiagMorphism> blocks);

  std::size_t rows() const { return tgt_.size(); }
  std::size_t cols() const { return src_.size(); }
  const std::vector<Word>& targets() const { return tgt_; }
  const std::vector<Word>& sources() const { return src_; }
  const DiagMorphism& at(std::size_t i, std::size_t j) const { return b_[i * src_.size() + j]; }
  void set(std::size_t i, std::size_t j, DiagMorphism f);
  void add_to(std::size_t i, std::size_t j, const DiagMorphism& f);
  bool is_zero() const;

  BlockMatrix& operator+=(const BlockMatrix& o);
  BlockMatrix& operator-=(const BlockMatrix& o);
  friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
  friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
  friend BlockMatrix operator*(const DeltaPoly& c, const BlockMatrix& m);
  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
    return a.tgt_ == b.tgt_ && a.src_ == b.src_ && a.b_ == b.b_;
  }

 private:
  void same_shape(const BlockMatrix& o) const;
  std::vector<Word> tgt_, src_;
  std::vector<DiagMorphism> b_;
};

BlockMatrix block_compose(const BlockMatrix& f, const BlockMatrix& g);
BlockMatrix block_tensor(const BlockMatrix& f, const BlockMatrix& g);
BlockMatrix block_identity(const std::vector<Word>& summands);

// Object of the additive Karoubi envelope: formal direct sum with an idempotent.
class KarObject {
 public:
  KarObject();  // the zero object
  // Validates shape and idempotency.
  KarObject(std::vector<Word> summands, BlockMatrix idempotent);
  static KarObject of(const Word& w);
  static KarObject unit() { return of(Word()); }
  static KarObject unchecked(std::vector<Word> summands, BlockMatrix idempotent);

  const std::vector<Word>& summands() const { return d_->summands; }
  const BlockMatrix& idempotent() const { return d_->idempotent; }
  std::size_t size() const { return d_->summands.size(); }
  // True when the idempotent is the identity matrix.
  bool is_plain() const;

  friend bool operator==(const KarObject& a, const KarObject& b) {
    return a.d_ == b.d_ || (a.d_->summands == b.d_->summands && a.d_->idempotent == b.d_->idempotent);
  }

 private:
  struct Data {
    std::vector<Word> summands;
    BlockMatrix idempotent;
  };
  std::shared_ptr<const Data> d_;
};

class KarMorphism {
 public:
  KarMorphism() = default;
  // Validates target.e ∘ blocks = blocks = blocks ∘ source.e.
  KarMorphism(KarObject source, KarObject target, BlockMatrix blocks);
  // Skips validation in release builds.
  static KarMorphism unchecked(KarObject source, KarObject target, BlockMatrix blocks);
  static KarMorphism identity(const KarObject& x);
  static KarMorphism zero(const KarObject& source, const KarObject& target);
  // Single-summand convenience: f between the plain objects on its words.
  static KarMorphism plain(const DiagMorphism& f);

  const KarObject& source() const { return src_; }
  const KarObject& target() const { return tgt_; }
  const BlockMatrix& blocks() const { return m_; }
  const DiagMorphism& block(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  bool is_zero() const { return m_.is_zero(); }

  KarMorphism& operator+=(const KarMorphism& o);
  KarMorphism& operator-=(const KarMorphism& o);
  friend KarMorphism operator+(KarMorphism a, const KarMorphism& b) { return a += b; }
  friend KarMorphism operator-(KarMorphism a, const KarMorphism& b) { return a -= b; }
  KarMorphism operator-() const;
  friend KarMorphism operator*(const DeltaPoly& c, const KarMorphism& f);
  friend bool operator==(const KarMorphism& a, const KarMorphism& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.m_ == b.m_;
  }

 private:
  void same_boundary(const KarMorphism& o) const;
  KarObject src_, tgt_;
  BlockMatrix m_;
};

// True when g ∘ h = h = h ∘ f for h: (X,f) -> (Y,g).
bool is_kar_morphism(const KarObject& source, const KarObject& target, const BlockMatrix& blocks);

KarObject kar_object(std::vector<Word> summands, BlockMatrix idempotent);
KarMorphism kar_compose(const KarMorphism& f, const KarMorphism& g);
KarObject kar_tensor(const KarObject& x, const KarObject& y);
KarMorphism kar_tensor(const KarMorphism& f, const KarMorphism& g);
KarMorphism kar_add(const KarMorphism& f, const KarMorphism& g);
KarObject kar_direct_sum(const std::vector<KarObject>& objects);
KarMorphism kar_inclusion(const std::vector<KarObject>& objects, std::size_t i);
KarMorphism kar_projection(const std::vector<KarObject>& objects, std::size_t i);
// Symmetric braiding X ⊗ Y -> Y ⊗ X.
KarMorphism kar_braiding(const KarObject& x, const KarObject& y);
KarObject kar_dual(const KarObject& x);
KarMorphism kar_dual(const KarMorphism& f);
// 1 -> X ⊗ X*  and  X* ⊗ X -> 1.
KarMorphism kar_coevaluation(const KarObject& x);
KarMorphism kar_evaluation(const KarObject& x);
KarMorphism kar_specialize(const KarMorphism& f, const Rational& delta);
KarObject kar_specialize(const KarObject& x, const Rational& delta);

Json to_json(const BlockMatrix& m);
Json to_json(const KarObject& x);
Json to_json(const KarMorphism& f);

}  // namespace brauerlie

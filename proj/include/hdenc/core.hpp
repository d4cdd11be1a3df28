#pragma once

// Core embedding types shared by all encoders, plus the dot products that
// every downstream consumer (learning, verification) is built on.
//
// Embeddings come in two storage forms:
//   SparseBinaryEmbedding  -- the set of active coordinates in [0, dim)
//   DenseEmbedding         -- a length-dim real vector with a precision tag
//
// Sparse embeddings are never materialized implicitly; to_dense() is the
// explicit conversion.

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hdenc {

using Eigen::Index;

// Numeric feature vector x in R^n. Consumers of the sign random projection
// expect unit norm; preprocessing is responsible for that.
using NumericVector = Eigen::VectorXd;

// A field-namespaced categorical token. Namespacing keeps per-field
// alphabets disjoint even when raw token bytes collide across fields.
struct Symbol {
  std::uint32_t field_index = 0;
  std::string token;

  bool operator==(const Symbol&) const = default;
  bool operator<(const Symbol& o) const {
    return field_index != o.field_index ? field_index < o.field_index
                                        : token < o.token;
  }

  // 4-byte little-endian field index prepended to the token bytes. This is
  // the byte string every hash function consumes.
  std::string serialized() const {
    std::string out;
    out.reserve(4 + token.size());
    out.push_back(static_cast<char>(field_index & 0xFF));
    out.push_back(static_cast<char>((field_index >> 8) & 0xFF));
    out.push_back(static_cast<char>((field_index >> 16) & 0xFF));
    out.push_back(static_cast<char>((field_index >> 24) & 0xFF));
    out.append(token);
    return out;
  }
};

struct SymbolHasher {
  std::size_t operator()(const Symbol& s) const {
    std::size_t h = std::hash<std::string>{}(s.token);
    return h ^ (std::hash<std::uint32_t>{}(s.field_index) + 0x9e3779b97f4a7c15ULL +
                (h << 6) + (h >> 2));
  }
};

// An s-element set of symbols (one record's categorical part). Order is
// preserved; duplicates are rejected.
class CategoricalSet {
 public:
  CategoricalSet() = default;
  explicit CategoricalSet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    auto sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("CategoricalSet: duplicate symbol");
    }
  }

  const std::vector<Symbol>& symbols() const { return symbols_; }
  Index size() const { return static_cast<Index>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }

  bool contains(const Symbol& s) const {
    return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end();
  }

 private:
  std::vector<Symbol> symbols_;
};

enum class Precision { Binary01, SignedUnit, Integer, Real };

inline std::string_view precision_name(Precision p) {
  switch (p) {
    case Precision::Binary01: return "binary01";
    case Precision::SignedUnit: return "signed_unit";
    case Precision::Integer: return "integer";
    case Precision::Real: return "real";
  }
  return "?";
}

// Set of active coordinate indices in [0, dim). Indices are kept sorted and
// distinct.
class SparseBinaryEmbedding {
 public:
  SparseBinaryEmbedding() = default;
  SparseBinaryEmbedding(Index dim, std::vector<std::int32_t> active)
      : dim_(dim), active_(std::move(active)) {
    std::sort(active_.begin(), active_.end());
    active_.erase(std::unique(active_.begin(), active_.end()), active_.end());
    if (!active_.empty() &&
        (active_.front() < 0 || static_cast<Index>(active_.back()) >= dim_)) {
      throw std::out_of_range("SparseBinaryEmbedding: index out of [0, dim)");
    }
  }

  Index dim() const { return dim_; }
  const std::vector<std::int32_t>& active() const { return active_; }
  Index active_count() const { return static_cast<Index>(active_.size()); }

  Eigen::VectorXd to_dense_values() const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim_);
    for (auto i : active_) v[i] = 1.0;
    return v;
  }

  bool operator==(const SparseBinaryEmbedding&) const = default;

 private:
  Index dim_ = 0;
  std::vector<std::int32_t> active_;
};

// Length-dim real vector with a precision tag describing its contents
// (binary 0/1, signs, integer-valued sums, or arbitrary reals).
struct DenseEmbedding {
  Eigen::VectorXd values;
  Precision precision = Precision::Real;

  Index dim() const { return values.size(); }
};

using Embedding = std::variant<SparseBinaryEmbedding, DenseEmbedding>;

inline Index embedding_dim(const Embedding& e) {
  return std::visit([](const auto& x) { return x.dim(); }, e);
}

inline DenseEmbedding to_dense(const SparseBinaryEmbedding& s) {
  return DenseEmbedding{s.to_dense_values(), Precision::Binary01};
}

inline DenseEmbedding to_dense(const Embedding& e) {
  if (const auto* s = std::get_if<SparseBinaryEmbedding>(&e)) return to_dense(*s);
  return std::get<DenseEmbedding>(e);
}

namespace detail {
inline void check_dims(Index a, Index b) {
  if (a != b) {
    throw std::invalid_argument("dot: dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}
}  // namespace detail

// dot products ---------------------------------------------------------------
//
// sparse x sparse is the intersection size of the active sets; sparse x dense
// is a lookup-and-sum over the active indices (no multiplications).

inline double dot(const DenseEmbedding& a, const DenseEmbedding& b) {
  detail::check_dims(a.dim(), b.dim());
  return a.values.dot(b.values);
}

inline double dot(const SparseBinaryEmbedding& a, const SparseBinaryEmbedding& b) {
  detail::check_dims(a.dim(), b.dim());
  const auto& x = a.active();
  const auto& y = b.active();
  std::size_t i = 0, j = 0, hits = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) {
      ++hits, ++i, ++j;
    } else if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return static_cast<double>(hits);
}

inline double dot(const SparseBinaryEmbedding& a, const DenseEmbedding& b) {
  detail::check_dims(a.dim(), b.dim());
  double sum = 0.0;
  for (auto i : a.active()) sum += b.values[i];
  return sum;
}

inline double dot(const DenseEmbedding& a, const SparseBinaryEmbedding& b) {
  return dot(b, a);
}

inline double dot(const Embedding& a, const Embedding& b) {
  return std::visit([](const auto& x, const auto& y) { return dot(x, y); }, a, b);
}

}  // namespace hdenc

#include "mucalc/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

#include "mucalc/rational.hpp"

namespace mucalc {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exact field arithmetic.  Two instantiations: F_p on canonical residues and
// the rationals on cpp_rational.  Elimination always pivots on the smallest
// row/column index, so every rank and basis below is reproducible bit for bit.
// ---------------------------------------------------------------------------

struct FpField {
  using Elem = long long;
  long long p;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return ((v % p) + p) % p; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a - b + p) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      const long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return ((t % p) + p) % p;
  }
};

struct RatField {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long long v) const { return Rational(v); }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Rational(1) / a; }
};

template <class F>
using Matrix = std::vector<std::vector<typename F::Elem>>;

template <class F>
std::size_t echelon_rank(Matrix<F> m, const F& f) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && f.is_zero(m[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const auto inv = f.inv(m[rank][col]);
    for (std::size_t c = col; c < cols; ++c) m[rank][c] = f.mul(m[rank][c], inv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (f.is_zero(m[r][col])) continue;
      const auto factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

// Kernel basis of m (rows x cols) acting on column vectors.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace_basis(Matrix<F> m, const F& f,
                                                           std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<int> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && f.is_zero(m[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const auto inv = f.inv(m[rank][col]);
    for (std::size_t c = col; c < cols; ++c) m[rank][c] = f.mul(m[rank][c], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || f.is_zero(m[r][col])) continue;
      const auto factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
      }
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<typename F::Elem> v(cols, f.zero());
    v[fc] = f.one();
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      const auto pc = static_cast<std::size_t>(pivot_col_of_row[r]);
      v[pc] = f.neg(m[r][fc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental row space in reduced echelon form; add() reports whether the
// vector was independent of what is already stored.
template <class F>
class EchelonSpace {
 public:
  explicit EchelonSpace(const F& f) : f_(f) {}

  bool add(std::vector<typename F::Elem> v) {
    for (const auto& [pc, row] : rows_) {
      if (f_.is_zero(v[pc])) continue;
      const auto factor = v[pc];
      for (std::size_t c = 0; c < v.size(); ++c) {
        v[c] = f_.sub(v[c], f_.mul(factor, row[c]));
      }
    }
    std::size_t lead = 0;
    while (lead < v.size() && f_.is_zero(v[lead])) ++lead;
    if (lead == v.size()) return false;
    const auto inv = f_.inv(v[lead]);
    for (std::size_t c = lead; c < v.size(); ++c) v[c] = f_.mul(v[c], inv);
    rows_.emplace(lead, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  F f_;
  std::map<std::size_t, std::vector<typename F::Elem>> rows_;
};

// ---------------------------------------------------------------------------
// Chain data.  Families are subsets of a complex's faces bucketed by
// cardinality; boundary entries whose target face is missing from the family
// are dropped, which realizes the quotient chain complex of a pair.
// ---------------------------------------------------------------------------

struct FaceFamily {
  int maxcard = 0;                                   // largest cardinality present
  std::vector<std::vector<std::uint64_t>> by_card;   // sorted masks per cardinality
  bool empty_family = true;
};

template <class Pred>
FaceFamily collect_family(const SimplicialComplex& x, Pred pred) {
  FaceFamily fam;
  fam.by_card.assign(x.vertex_count() + 2, {});
  for (auto f : x.face_masks()) {
    if (!pred(f)) continue;
    const int c = std::popcount(f);
    fam.by_card[static_cast<std::size_t>(c)].push_back(f);
    fam.maxcard = std::max(fam.maxcard, c);
    fam.empty_family = false;
  }
  fam.by_card.resize(static_cast<std::size_t>(fam.maxcard) + 2);
  return fam;
}

int index_in(const std::vector<std::uint64_t>& v, std::uint64_t m) {
  const auto it = std::lower_bound(v.begin(), v.end(), m);
  if (it == v.end() || *it != m) return -1;
  return static_cast<int>(it - v.begin());
}

// Boundary matrix from cardinality c to c-1 within the family; one row per
// c-face, one column per (c-1)-face present.
template <class F>
Matrix<F> boundary_matrix(const FaceFamily& fam, int c, const F& f) {
  const auto& src = fam.by_card[static_cast<std::size_t>(c)];
  const auto& dst = fam.by_card[static_cast<std::size_t>(c - 1)];
  Matrix<F> m(src.size(), std::vector<typename F::Elem>(dst.size(), f.zero()));
  for (std::size_t r = 0; r < src.size(); ++r) {
    std::uint64_t rest = src[r];
    int pos = 0;
    while (rest) {
      const std::uint64_t b = rest & (~rest + 1);
      rest ^= b;
      const int idx = index_in(dst, src[r] ^ b);
      if (idx >= 0) {
        m[r][static_cast<std::size_t>(idx)] =
            (pos & 1) ? f.neg(f.one()) : f.one();
      }
      ++pos;
    }
  }
  return m;
}

template <class F>
std::vector<long long> homology_ranks(const FaceFamily& fam, const F& f) {
  // ranks[c] = rank of the boundary from cardinality c to c-1
  const int top = fam.maxcard;
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  for (int c = 1; c <= top; ++c) {
    if (fam.by_card[static_cast<std::size_t>(c)].empty() ||
        fam.by_card[static_cast<std::size_t>(c - 1)].empty()) {
      continue;
    }
    rank[static_cast<std::size_t>(c)] = echelon_rank(boundary_matrix(fam, c, f), f);
  }
  std::vector<long long> betti(static_cast<std::size_t>(top) + 1, 0);
  for (int c = 0; c <= top; ++c) {
    betti[static_cast<std::size_t>(c)] =
        static_cast<long long>(fam.by_card[static_cast<std::size_t>(c)].size()) -
        static_cast<long long>(rank[static_cast<std::size_t>(c)]) -
        static_cast<long long>(rank[static_cast<std::size_t>(c + 1)]);
  }
  return betti;  // betti[c] is the rank in degree c-1
}

std::vector<long long> homology_ranks_dispatch(const FaceFamily& fam, const FieldSpec& fs) {
  if (fs.is_rational()) return homology_ranks(fam, RatField{});
  return homology_ranks(fam, FpField{fs.characteristic});
}

}  // namespace

FieldSpec::FieldSpec(long long c) : characteristic(c) {
  if (c != 0 && !is_prime(c)) {
    throw std::invalid_argument("field characteristic must be 0 or a prime");
  }
}

long long BettiData::reduced(int i) const {
  if (i < -1 || i > dim) return 0;
  return values[static_cast<std::size_t>(i + 1)];
}

bool BettiData::all_zero() const {
  for (auto v : values) {
    if (v != 0) return false;
  }
  return true;
}

bool same_betti(const BettiData& a, const BettiData& b) {
  const int hi = std::max(a.dim, b.dim);
  for (int i = -1; i <= hi; ++i) {
    if (a.reduced(i) != b.reduced(i)) return false;
  }
  return true;
}

BettiData sphere_betti(int d) {
  if (d < -1) throw std::invalid_argument("sphere dimension below -1");
  BettiData out;
  out.dim = d;
  out.values.assign(static_cast<std::size_t>(d) + 2, 0);
  out.values.back() = 1;  // reduced rank 1 in degree d
  return out;
}

BettiData betti_reduced_induced(const SimplicialComplex& x, std::uint64_t mask_a,
                                const FieldSpec& f) {
  const FaceFamily fam =
      collect_family(x, [mask_a](std::uint64_t m) { return (m & ~mask_a) == 0; });
  const auto ranks = homology_ranks_dispatch(fam, f);
  BettiData out;
  out.dim = fam.maxcard - 1;
  out.values.assign(ranks.begin(), ranks.end());
  return out;
}

BettiData betti_reduced(const SimplicialComplex& x, const FieldSpec& f) {
  return betti_reduced_induced(x, ~std::uint64_t{0}, f);
}

std::vector<long long> betti_unreduced(const SimplicialComplex& x, const FieldSpec& f) {
  const BettiData b = betti_reduced(x, f);
  std::vector<long long> out;
  for (int i = 0; i <= x.dimension(); ++i) {
    out.push_back(b.reduced(i) + (i == 0 && x.vertex_count() > 0 ? 1 : 0));
  }
  return out;
}

long long PairBetti::betti(int i) const {
  if (i < 0 || i >= static_cast<int>(values.size())) return 0;
  return values[static_cast<std::size_t>(i)];
}

PairBetti betti_pair_masks(const SimplicialComplex& x, std::uint64_t mask_b,
                           std::uint64_t mask_a, const FieldSpec& f) {
  if ((mask_a & ~mask_b) != 0) {
    throw std::invalid_argument("pair homology needs A ⊆ B");
  }
  const FaceFamily fam = collect_family(x, [mask_a, mask_b](std::uint64_t m) {
    return (m & ~mask_b) == 0 && (m & ~mask_a) != 0;
  });
  PairBetti out;
  out.values.assign(static_cast<std::size_t>(x.dimension()) + 1, 0);
  if (fam.empty_family) return out;
  const auto ranks = homology_ranks_dispatch(fam, f);
  // degree i corresponds to cardinality i+1; no (-1)-chains survive in the
  // quotient since ∅ always lies in X[A]
  for (int c = 1; c < static_cast<int>(ranks.size()); ++c) {
    if (c - 1 <= x.dimension()) {
      out.values[static_cast<std::size_t>(c - 1)] = ranks[static_cast<std::size_t>(c)];
    }
  }
  return out;
}

PairBetti betti_pair(const SimplicialComplex& x, const Face& b, const Face& a,
                     const FieldSpec& f) {
  const Face nb = normalized_face(b);
  const Face na = normalized_face(a);
  if (!std::includes(nb.begin(), nb.end(), na.begin(), na.end())) {
    throw std::invalid_argument("pair homology needs A ⊆ B");
  }
  return betti_pair_masks(x, x.mask_of(nb), x.mask_of(na), f);
}

// ---------------------------------------------------------------------------
// Inclusion-induced maps on homology.
// ---------------------------------------------------------------------------

struct InjectivityScanner::Impl {
  virtual ~Impl() = default;
  virtual InducedMapInfo map_info(std::uint64_t mask_a, int j) const = 0;
  virtual bool all_injective(int j) const = 0;
};

namespace {

template <class F>
struct ScannerImpl final : InjectivityScanner::Impl {
  const SimplicialComplex& x;
  F field;
  FaceFamily fam_x;
  // per cardinality: echelon space spanned by the ambient boundaries from
  // cardinality c+1 into cardinality c
  std::vector<EchelonSpace<F>> boundary_space;

  ScannerImpl(const SimplicialComplex& xx, F f) : x(xx), field(f) {
    fam_x = collect_family(x, [](std::uint64_t) { return true; });
    for (int c = 0; c <= fam_x.maxcard; ++c) {
      EchelonSpace<F> sp(field);
      if (c + 1 <= fam_x.maxcard) {
        const auto m = boundary_matrix(fam_x, c + 1, field);  // rows are (c+1)-faces
        for (const auto& row : m) sp.add(row);
      }
      boundary_space.push_back(std::move(sp));
    }
  }

  InducedMapInfo map_info(std::uint64_t mask_a, int j) const override {
    InducedMapInfo info;
    const int c = j + 1;  // degree j lives in cardinality j+1
    if (c < 1 || c > fam_x.maxcard) return info;  // zero domain

    const FaceFamily fam_y = collect_family(
        x, [mask_a](std::uint64_t m) { return (m & ~mask_a) == 0; });
    if (c > fam_y.maxcard) return info;
    const auto& yc = fam_y.by_card[static_cast<std::size_t>(c)];
    if (yc.empty()) return info;

    // cycles of Y in degree j
    const auto my = boundary_matrix(fam_y, c, field);
    Matrix<F> my_t(yc.empty() ? 0 : my[0].size(),
                   std::vector<typename F::Elem>(my.size(), field.zero()));
    for (std::size_t r = 0; r < my.size(); ++r) {
      for (std::size_t cc = 0; cc < my[r].size(); ++cc) my_t[cc][r] = my[r][cc];
    }
    const auto cycles = nullspace_basis(std::move(my_t), field, my.size());
    if (cycles.empty()) return info;  // H_j(Y) = 0

    std::size_t by_rank = 0;
    if (c + 1 <= fam_y.maxcard) {
      by_rank = echelon_rank(boundary_matrix(fam_y, c + 1, field), field);
    }
    info.domain_betti = static_cast<long long>(cycles.size() - by_rank);

    // dim(Z_j(Y) + B_j(X)): embed Y-cycles into X's chain coordinates and add
    // them to a copy of the ambient boundary space.
    const auto& xc = fam_x.by_card[static_cast<std::size_t>(c)];
    EchelonSpace<F> sp = boundary_space[static_cast<std::size_t>(c)];
    std::size_t fresh = 0;
    for (const auto& v : cycles) {
      std::vector<typename F::Elem> w(xc.size(), field.zero());
      for (std::size_t k = 0; k < yc.size(); ++k) {
        if (!field.is_zero(v[k])) {
          w[static_cast<std::size_t>(index_in(xc, yc[k]))] = v[k];
        }
      }
      if (sp.add(std::move(w))) ++fresh;
    }
    const std::size_t inter = cycles.size() - fresh;  // dim(Z ∩ B_X)
    const long long kernel = static_cast<long long>(inter - by_rank);
    info.rank = info.domain_betti - kernel;
    info.injective = (kernel == 0);
    return info;
  }

  bool all_injective(int j) const override {
    const std::uint64_t full =
        x.vertex_count() == 64 ? ~std::uint64_t{0}
                               : ((std::uint64_t{1} << x.vertex_count()) - 1);
    for (std::uint64_t a = 0;; ++a) {
      if (!map_info(a, j).injective) return false;
      if (a == full) break;
    }
    return true;
  }
};

}  // namespace

InjectivityScanner::InjectivityScanner(const SimplicialComplex& x, const FieldSpec& f) {
  if (f.is_rational()) {
    impl_ = std::make_unique<ScannerImpl<RatField>>(x, RatField{});
  } else {
    impl_ = std::make_unique<ScannerImpl<FpField>>(x, FpField{f.characteristic});
  }
}

InjectivityScanner::~InjectivityScanner() = default;
InjectivityScanner::InjectivityScanner(InjectivityScanner&&) noexcept = default;

InducedMapInfo InjectivityScanner::map_info(std::uint64_t mask_a, int j) const {
  return impl_->map_info(mask_a, j);
}

bool InjectivityScanner::all_injective(int j) const { return impl_->all_injective(j); }

InducedMapInfo induced_map_info(const SimplicialComplex& x, const Face& a, int j,
                                const FieldSpec& f) {
  InjectivityScanner sc(x, f);
  return sc.map_info(x.mask_of(normalized_face(a)), j);
}

bool induced_injective(const SimplicialComplex& x, const Face& a, int j,
                       const FieldSpec& f) {
  return induced_map_info(x, a, j, f).injective;
}

long long induced_rank(const SimplicialComplex& x, const Face& a, int j,
                       const FieldSpec& f) {
  return induced_map_info(x, a, j, f).rank;
}

// ---------------------------------------------------------------------------
// Recognition by recursion on links.  Results are memoized per top-level call
// on the compressed face sets, since sub-links recur across the recursion.
// ---------------------------------------------------------------------------

namespace {

using Memo = std::map<std::vector<std::uint64_t>, bool>;

std::vector<std::uint64_t> memo_key(const SimplicialComplex& x, int kind) {
  std::vector<std::uint64_t> key;
  key.reserve(x.face_masks().size() + 2);
  key.push_back(static_cast<std::uint64_t>(kind));
  key.push_back(x.vertex_count());
  key.insert(key.end(), x.face_masks().begin(), x.face_masks().end());
  return key;
}

bool ball_impl(const SimplicialComplex& x, const FieldSpec& f, Memo& memo);

bool manifold_with_boundary_impl(const SimplicialComplex& x, const FieldSpec& f,
                                 Memo& memo) {
  if (!is_pure(x)) throw std::invalid_argument("recognition requires a pure complex");
  const int d = x.dimension();
  if (d < 0) return false;
  const auto key = memo_key(x, 1);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  bool ok = true;
  for (auto gm : x.face_masks()) {
    if (gm == 0) continue;
    const SimplicialComplex lk = x.link(x.face_from_mask(gm));
    const int expect = d - std::popcount(gm);
    const BettiData b = betti_reduced(lk, f);
    if (same_betti(b, sphere_betti(expect))) continue;
    if (!b.all_zero() || !ball_impl(lk, f, memo)) {
      ok = false;
      break;
    }
  }
  memo.emplace(key, ok);
  return ok;
}

SimplicialComplex boundary_impl(const SimplicialComplex& x, const FieldSpec& f) {
  if (!is_pure(x)) throw std::invalid_argument("recognition requires a pure complex");
  std::vector<Face> boundary_faces;
  for (auto gm : x.face_masks()) {
    if (gm == 0) continue;
    const Face g = x.face_from_mask(gm);
    if (betti_reduced(x.link(g), f).all_zero()) boundary_faces.push_back(g);
  }
  if (boundary_faces.empty()) return SimplicialComplex();
  return SimplicialComplex::from_facets(boundary_faces);
}

bool closed_manifold_impl(const SimplicialComplex& x, const FieldSpec& f, Memo& memo) {
  if (!is_pure(x)) throw std::invalid_argument("recognition requires a pure complex");
  const auto key = memo_key(x, 0);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const int d = x.dimension();
  bool ok = true;
  for (auto gm : x.face_masks()) {
    if (gm == 0) continue;
    const SimplicialComplex lk = x.link(x.face_from_mask(gm));
    if (!same_betti(betti_reduced(lk, f), sphere_betti(d - std::popcount(gm)))) {
      ok = false;
      break;
    }
  }
  memo.emplace(key, ok);
  return ok;
}

bool sphere_impl(const SimplicialComplex& x, const FieldSpec& f, Memo& memo) {
  return closed_manifold_impl(x, f, memo) &&
         same_betti(betti_reduced(x, f), sphere_betti(x.dimension()));
}

bool ball_impl(const SimplicialComplex& x, const FieldSpec& f, Memo& memo) {
  const int d = x.dimension();
  if (d < 0) return false;
  const auto key = memo_key(x, 2);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  bool ok = manifold_with_boundary_impl(x, f, memo) &&
            betti_reduced(x, f).all_zero();
  if (ok) {
    const SimplicialComplex bd = boundary_impl(x, f);
    ok = (bd.dimension() == d - 1) && is_pure(bd) && sphere_impl(bd, f, memo);
  }
  memo.emplace(key, ok);
  return ok;
}

}  // namespace

bool is_closed_homology_manifold(const SimplicialComplex& x, const FieldSpec& f) {
  Memo memo;
  return closed_manifold_impl(x, f, memo);
}

bool is_homology_manifold_with_boundary(const SimplicialComplex& x, const FieldSpec& f) {
  Memo memo;
  return manifold_with_boundary_impl(x, f, memo);
}

bool is_homology_sphere(const SimplicialComplex& x, const FieldSpec& f) {
  Memo memo;
  return sphere_impl(x, f, memo);
}

bool is_homology_ball(const SimplicialComplex& x, const FieldSpec& f) {
  Memo memo;
  return ball_impl(x, f, memo);
}

SimplicialComplex boundary_complex(const SimplicialComplex& x, const FieldSpec& f) {
  return boundary_impl(x, f);
}

}  // namespace mucalc

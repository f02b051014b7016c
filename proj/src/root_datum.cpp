#include "conjsense/root_datum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace conjsense {

std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
  if (!is_valid_canonical(t))
    throw SpecError("cartan_matrix: not a canonical simple type: " + to_string(t));
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };  // 0-indexed

  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Series::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      if (n >= 7) bond(5, 6);
      if (n == 8) bond(6, 7);
      bond(1, 3);
      break;
    case Series::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a[1][2] = -2;  // alpha_1, alpha_2 long
      break;
    case Series::G:
      bond(0, 1);
      a[1][0] = -3;  // alpha_1 short, alpha_2 long
      break;
  }
  return a;
}

namespace {

// Symmetrizing weights d_i with (alpha_i, alpha_j) = a[i][j] * d_j,
// scaled to the smallest positive integers.
std::vector<int> symmetrizer(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  // the diagram is connected, so one BFS pass assigns every node
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int i = queue[qi];
    for (int j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0 || d[j] != 0) continue;
      // a[i][j] d_j = a[j][i] d_i
      d[j] = d[i] * a[j][i] / a[i][j];
      queue.push_back(j);
    }
  }
  Int lcm_den = 1;
  for (const auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<Int> scaled(n);
  Int g = 0;
  for (int i = 0; i < n; ++i) {
    scaled[i] = numerator(d[i]) * (lcm_den / denominator(d[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(scaled[i] / g);
  return out;
}

}  // namespace

RootDatum::RootDatum(SimpleType t) : type_(t), rank_(t.rank) {
  if (!is_valid_canonical(t))
    throw SpecError("RootDatum: not a canonical simple type: " + to_string(t));
  cartan_ = cartan_matrix(t);
  sym_d_ = symmetrizer(cartan_);

  // (alpha, beta) over root coordinates, scaled: b[i][j] = a[i][j] * d_j
  auto root_form = [&](const std::vector<int>& x, const std::vector<int>& y) {
    long long s = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        s += static_cast<long long>(x[i]) * cartan_[i][j] * sym_d_[j] * y[j];
    return s;
  };

  // closure from the simple roots: alpha + alpha_i is a root iff the
  // alpha_i-string through alpha continues, q = p - <alpha, alpha_i^vee> >= 1
  std::set<std::vector<int>> seen;
  std::vector<std::vector<std::vector<int>>> by_height;
  by_height.emplace_back();
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    by_height.back().push_back(e);
    seen.insert(e);
  }
  while (!by_height.back().empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& alpha : by_height.back()) {
      for (int i = 0; i < rank_; ++i) {
        std::vector<int> cand = alpha;
        cand[i] += 1;
        if (seen.count(cand)) continue;
        int pairing = 0;
        for (int j = 0; j < rank_; ++j) pairing += alpha[j] * cartan_[j][i];
        int p = 0;
        std::vector<int> down = alpha;
        while (true) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int v) { return v == 0; });
          if (zero || !seen.count(down)) break;
          ++p;
        }
        int q = p - pairing;
        if (q >= 1) {
          seen.insert(cand);
          next.push_back(cand);
        }
      }
    }
    by_height.push_back(std::move(next));
  }

  for (std::size_t h = 0; h < by_height.size(); ++h) {
    auto level = by_height[h];
    std::sort(level.begin(), level.end());
    for (const auto& k : level) {
      PositiveRoot r;
      r.root_coords = k;
      r.height = static_cast<int>(h) + 1;
      long long norm = root_form(k, k);  // = 2 d_alpha after scaling
      r.coroot_coords.resize(rank_);
      for (int i = 0; i < rank_; ++i) {
        long long num = static_cast<long long>(k[i]) * 2 * sym_d_[i];
        if (num % norm != 0) throw SpecError("RootDatum: non-integral coroot");
        r.coroot_coords[i] = static_cast<int>(num / norm);
      }
      r.dual_height = std::accumulate(r.coroot_coords.begin(), r.coroot_coords.end(), 0);
      r.weight_coords.resize(rank_);
      for (int j = 0; j < rank_; ++j) {
        int s = 0;
        for (int i = 0; i < rank_; ++i) s += k[i] * cartan_[i][j];
        r.weight_coords[j] = s;
      }
      positive_roots_.push_back(std::move(r));
    }
  }

  rho_check_doubled_.assign(rank_, 0);
  for (const auto& r : positive_roots_)
    for (int i = 0; i < rank_; ++i) rho_check_doubled_[i] += r.coroot_coords[i];

  highest_root_ = positive_roots_.back().weight_coords;

  // root lattice membership: lambda = A^T k solvable over Z
  IntMatrix at(rank_, std::vector<Int>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) at[i][j] = cartan_[j][i];
  root_lattice_ = smith_form(std::move(at));

  // Gram matrix on fundamental-weight coordinates:
  // (omega_i, omega_j) = row_i(A^{-1}) * B * row_j(A^{-1})^T with B = A D
  RatMatrix arat = rat_zero_matrix(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) arat[i][j] = cartan_[i][j];
  RatMatrix ainv = rat_inverse(arat);
  RatMatrix gram = rat_zero_matrix(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      Rational s(0);
      for (int p = 0; p < rank_; ++p)
        for (int q = 0; q < rank_; ++q)
          s += ainv[i][p] * Rational(cartan_[p][q] * sym_d_[q]) * ainv[j][q];
      gram[i][j] = s;
    }
  gram_den_ = 1;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      gram_den_ = boost::multiprecision::lcm(gram_den_, denominator(gram[i][j]));
  gram_scaled_.assign(rank_, std::vector<Int>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      Rational v = gram[i][j] * gram_den_;
      gram_scaled_[i][j] = numerator(v);
    }
}

Int RootDatum::adjoint_dimension() const {
  return Int(rank_) + 2 * Int(positive_roots_.size());
}

Int RootDatum::pair_coroot(const Weight& mu, const PositiveRoot& alpha) const {
  Int s = 0;
  for (int i = 0; i < rank_; ++i) s += Int(mu[i]) * alpha.coroot_coords[i];
  return s;
}

bool RootDatum::in_root_lattice(const Weight& mu) const {
  std::vector<Int> b(mu.begin(), mu.end());
  return root_lattice_.solvable(b);
}

Int RootDatum::form_scaled(const Weight& a, const Weight& b) const {
  Int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j] != 0) s += Int(a[i]) * gram_scaled_[i][j] * b[j];
  }
  return s;
}

Weight RootDatum::simple_root_weight_coords(int i) const {
  return Weight(cartan_[i].begin(), cartan_[i].end());
}

Weight RootDatum::reflect(int i, Weight mu) const {
  const int c = mu[i];
  if (c == 0) return mu;
  for (int j = 0; j < rank_; ++j) mu[j] -= c * cartan_[i][j];
  return mu;
}

bool RootDatum::is_dominant(const Weight& mu) const {
  return std::all_of(mu.begin(), mu.end(), [](int v) { return v >= 0; });
}

Weight RootDatum::dominant_representative(Weight mu) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank_; ++i) {
      if (mu[i] < 0) {
        mu = reflect(i, std::move(mu));
        moved = true;
      }
    }
  }
  return mu;
}

const RootDatum& root_datum(const SimpleType& t) {
  static std::mutex mu;
  static std::map<SimpleType, RootDatum> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, RootDatum(t)).first;
  return it->second;
}

namespace {

void automorphism_search(const std::vector<std::vector<int>>& a, std::vector<int>& perm,
                         std::vector<bool>& used, std::size_t depth,
                         std::vector<DiagramAutomorphism>& out) {
  const std::size_t n = a.size();
  if (depth == n) {
    DiagramAutomorphism d;
    d.node_permutation = perm;
    d.signature = permutation_signature(perm);
    out.push_back(std::move(d));
    return;
  }
  for (std::size_t img = 0; img < n; ++img) {
    if (used[img]) continue;
    if (a[img][img] != a[depth][depth]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < depth && ok; ++prev) {
      if (a[perm[prev]][img] != a[prev][depth]) ok = false;
      if (a[img][perm[prev]] != a[depth][prev]) ok = false;
    }
    if (!ok) continue;
    perm[depth] = static_cast<int>(img);
    used[img] = true;
    automorphism_search(a, perm, used, depth + 1, out);
    used[img] = false;
  }
}

}  // namespace

std::vector<DiagramAutomorphism> diagram_automorphisms(const SimpleType& t) {
  const auto a = cartan_matrix(t);
  std::vector<int> perm(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  std::vector<DiagramAutomorphism> out;
  automorphism_search(a, perm, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

DiagramAutomorphism dual_involution(const SimpleType& t) {
  const int n = t.rank;
  DiagramAutomorphism id = identity_automorphism(n);
  auto flip_chain = [&] {
    DiagramAutomorphism d;
    d.node_permutation.resize(n);
    for (int i = 0; i < n; ++i) d.node_permutation[i] = n - 1 - i;
    d.signature = permutation_signature(d.node_permutation);
    return d;
  };
  switch (t.series) {
    case Series::A:
      return n >= 2 ? flip_chain() : id;
    case Series::D:
      if (n % 2 == 1) {
        DiagramAutomorphism d = id;
        std::swap(d.node_permutation[n - 2], d.node_permutation[n - 1]);
        d.signature = -1;
        return d;
      }
      return id;
    case Series::E:
      if (n == 6) {
        DiagramAutomorphism d = id;
        std::swap(d.node_permutation[0], d.node_permutation[5]);
        std::swap(d.node_permutation[2], d.node_permutation[4]);
        d.signature = 1;
        return d;
      }
      return id;
    default:
      return id;
  }
}

}  // namespace conjsense

#include "cgt/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cgt/error.hpp"

namespace cgt {

namespace {

using u64 = std::uint64_t;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
  u64 mul(u64 a, u64 b) const { return a % p * (b % p) % p; }
  u64 pow(u64 a, u64 e) const { return mod_pow(a, e, p); }
  u64 inv(u64 a) const {
    if (a % p == 0) fail(errc::internal, "division by zero mod l");
    return pow(a % p, p - 2);
  }
};

u64 find_working_prime(u64 exponent, const BigInt& order) {
  u64 bound = 2 * (isqrt_u64(static_cast<u64>(order)) + 1);
  u64 l = exponent + 1;
  while (l <= bound || !is_prime(l)) l += exponent;
  return l;
}

u64 primitive_root(u64 l) {
  auto fs = factorize(l - 1);
  for (u64 g = 2; g < l; ++g) {
    bool ok = true;
    for (auto [q, e] : fs)
      if (mod_pow(g, (l - 1) / q, l) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(errc::internal, "no primitive root found");
}

u64 sqrt_mod(u64 a, u64 l) {
  // Tonelli-Shanks; l an odd prime, a a quadratic residue
  a %= l;
  if (a == 0) return 0;
  if (mod_pow(a, (l - 1) / 2, l) != 1) fail(errc::internal, "not a quadratic residue mod l");
  if (l % 4 == 3) return mod_pow(a, (l + 1) / 4, l);
  u64 q = l - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 zn = 2;
  while (mod_pow(zn, (l - 1) / 2, l) == 1) ++zn;
  u64 m = s;
  u64 c = mod_pow(zn, q, l);
  u64 t = mod_pow(a, q, l);
  u64 r = mod_pow(a, (q + 1) / 2, l);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % l;
      ++i;
      if (i == m) fail(errc::internal, "sqrt_mod failed");
    }
    u64 b = mod_pow(c, u64(1) << (m - i - 1), l);
    m = i;
    c = b * b % l;
    t = t * c % l;
    r = r * b % l;
  }
  return r;
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Subspace {
  std::vector<Vec> basis; // each row a vector of length r
};

// Expresses vectors in terms of an independent basis (all mod l).
struct BasisSolver {
  Fp f;
  std::vector<Vec> rref;
  std::vector<std::size_t> piv;
  std::vector<Vec> combo; // original-basis coefficients of each rref row

  BasisSolver(const Fp& fp, const std::vector<Vec>& basis) : f(fp) {
    std::size_t d = basis.size();
    for (std::size_t i = 0; i < d; ++i) {
      Vec row = basis[i];
      Vec cmb(d, 0);
      cmb[i] = 1;
      reduce(row, cmb);
      std::size_t pc = pivot_of(row);
      if (pc == row.size()) fail(errc::internal, "dependent subspace basis");
      u64 iv = f.inv(row[pc]);
      for (auto& x : row) x = f.mul(x, iv);
      for (auto& x : cmb) x = f.mul(x, iv);
      rref.push_back(std::move(row));
      piv.push_back(pc);
      combo.push_back(std::move(cmb));
    }
  }

  std::size_t pivot_of(const Vec& row) const {
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c]) return c;
    return row.size();
  }

  void reduce(Vec& row, Vec& cmb) const {
    for (std::size_t i = 0; i < rref.size(); ++i) {
      u64 v = row[piv[i]];
      if (!v) continue;
      for (std::size_t c = 0; c < row.size(); ++c) row[c] = f.sub(row[c], f.mul(v, rref[i][c]));
      for (std::size_t c = 0; c < cmb.size(); ++c) cmb[c] = f.sub(cmb[c], f.mul(v, combo[i][c]));
    }
  }

  // coefficients with v = sum coeff[i] * basis[i]; errors if v is outside
  Vec solve(Vec v) const {
    Vec cmb(rref.size(), 0);
    for (std::size_t i = 0; i < rref.size(); ++i) {
      u64 x = v[piv[i]];
      if (!x) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.sub(v[c], f.mul(x, rref[i][c]));
      for (std::size_t c = 0; c < cmb.size(); ++c) cmb[c] = f.add(cmb[c], f.mul(x, combo[i][c]));
    }
    for (u64 x : v)
      if (x) fail(errc::internal, "class matrix does not stabilize eigenspace");
    return cmb;
  }
};

// characteristic polynomial over F_l via Hessenberg reduction
Vec charpoly(const Fp& f, Mat m) {
  std::size_t d = m.size();
  for (std::size_t j = 0; j + 2 < d; ++j) {
    std::size_t piv = j + 1;
    while (piv < d && !m[piv][j]) ++piv;
    if (piv == d) continue;
    if (piv != j + 1) {
      std::swap(m[piv], m[j + 1]);
      for (std::size_t i = 0; i < d; ++i) std::swap(m[i][piv], m[i][j + 1]);
    }
    u64 inv = f.inv(m[j + 1][j]);
    for (std::size_t i = j + 2; i < d; ++i) {
      u64 fac = f.mul(m[i][j], inv);
      if (!fac) continue;
      for (std::size_t c = 0; c < d; ++c) m[i][c] = f.sub(m[i][c], f.mul(fac, m[j + 1][c]));
      for (std::size_t r2 = 0; r2 < d; ++r2) m[r2][j + 1] = f.add(m[r2][j + 1], f.mul(fac, m[r2][i]));
    }
  }
  std::vector<Vec> p(d + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= d; ++k) {
    Vec cur(k + 1, 0);
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      cur[i + 1] = f.add(cur[i + 1], p[k - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(m[k - 1][k - 1], p[k - 1][i]));
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = f.mul(prod, m[i + 1][i]);
      if (!prod) break;
      u64 coef = f.mul(m[i][k - 1], prod);
      if (!coef) continue;
      for (std::size_t t = 0; t < p[i].size(); ++t) cur[t] = f.sub(cur[t], f.mul(coef, p[i][t]));
    }
    p[k] = std::move(cur);
  }
  return p[d];
}

std::vector<Vec> kernel_basis(const Fp& f, Mat m) {
  std::size_t rows = m.size(), cols = rows;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && !m[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    u64 inv = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || !m[i][c]) continue;
      u64 fac = m[i][c];
      for (std::size_t cc = 0; cc < cols; ++cc) m[i][cc] = f.sub(m[i][cc], f.mul(fac, m[rank][cc]));
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<Vec> ker;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = f.sub(0, m[i][c]);
    ker.push_back(std::move(v));
  }
  return ker;
}

std::vector<std::vector<long long>> build_class_matrix(const ClassList& cl, std::size_t i,
                                                       const FlatClassMap& fm) {
  const Group& g = *cl.group;
  std::size_t r = cl.count();
  std::vector<std::vector<long long>> mat(r, std::vector<long long>(r, 0));

  std::unordered_set<std::string> visited;
  std::vector<Permutation> queue{cl.classes[i].representative};
  visited.insert(perm_key(queue[0]));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& s : g.generators()) {
      Permutation c = queue[qi].conjugated_by(s);
      std::string key = perm_key(c);
      if (visited.insert(std::move(key)).second) queue.push_back(std::move(c));
    }
  }
  if (BigInt(queue.size()) != cl.classes[i].size)
    fail(errc::internal, "class matrix: class enumeration mismatch");

  for (const auto& x : queue) {
    Permutation xi = x.inverse();
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t j = fm.find(xi * cl.classes[k].representative);
      if (j == FlatClassMap::npos) fail(errc::internal, "class matrix: product escaped group");
      ++mat[j][k];
    }
  }
  return mat;
}

struct ModularCharacter {
  Vec omega;
  u64 degree;
};

// Splits F_l^r into the common eigenspaces of the class matrices,
// smaller classes first, until every subspace is a line.
std::vector<Vec> split_eigenspaces(const ClassList& cl, const FlatClassMap& fm, const Fp& f) {
  std::size_t r = cl.count();
  std::vector<std::size_t> order_of_use;
  for (std::size_t i = 1; i < r; ++i) order_of_use.push_back(i);
  std::sort(order_of_use.begin(), order_of_use.end(), [&](std::size_t a, std::size_t b) {
    if (cl.classes[a].size != cl.classes[b].size) return cl.classes[a].size < cl.classes[b].size;
    return a < b;
  });

  std::vector<Subspace> spaces(1);
  spaces[0].basis.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    spaces[0].basis[i].assign(r, 0);
    spaces[0].basis[i][i] = 1;
  }

  auto fully_split = [&] {
    for (const auto& s : spaces)
      if (s.basis.size() > 1) return false;
    return true;
  };

  for (std::size_t mi = 0; mi < order_of_use.size() && !fully_split(); ++mi) {
    auto raw = build_class_matrix(cl, order_of_use[mi], fm);
    Mat a(r, Vec(r));
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y)
        a[x][y] = static_cast<u64>(raw[x][y]) % f.p;

    std::vector<Subspace> next;
    for (auto& w : spaces) {
      std::size_t d = w.basis.size();
      if (d == 1) {
        next.push_back(std::move(w));
        continue;
      }
      BasisSolver solver(f, w.basis);
      Mat rmat(d, Vec(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        Vec img(r, 0);
        for (std::size_t row = 0; row < r; ++row) {
          u64 acc = 0;
          for (std::size_t col = 0; col < r; ++col)
            acc = f.add(acc, f.mul(a[row][col], w.basis[i][col]));
          img[row] = acc;
        }
        Vec coeff = solver.solve(std::move(img));
        for (std::size_t t = 0; t < d; ++t) rmat[t][i] = coeff[t];
      }
      Vec cp = charpoly(f, rmat);
      std::size_t found = 0;
      for (u64 lam = 0; lam < f.p && found < d; ++lam) {
        u64 val = 0;
        for (std::size_t t = cp.size(); t-- > 0;) val = f.add(f.mul(val, lam), cp[t]);
        if (val) continue;
        Mat shifted = rmat;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = f.sub(shifted[t][t], lam);
        auto ker = kernel_basis(f, shifted);
        if (ker.empty()) fail(errc::internal, "missing eigenspace for charpoly root");
        Subspace sub;
        for (const auto& kv : ker) {
          Vec big(r, 0);
          for (std::size_t t = 0; t < d; ++t) {
            if (!kv[t]) continue;
            for (std::size_t c = 0; c < r; ++c)
              big[c] = f.add(big[c], f.mul(kv[t], w.basis[t][c]));
          }
          sub.basis.push_back(std::move(big));
        }
        found += sub.basis.size();
        next.push_back(std::move(sub));
      }
      if (found != d) fail(errc::internal, "eigenvalues escaped the working field");
    }
    spaces = std::move(next);
  }

  if (!fully_split()) fail(errc::internal, "class matrices exhausted before full split");
  std::vector<Vec> lines;
  lines.reserve(spaces.size());
  for (auto& s : spaces) lines.push_back(std::move(s.basis[0]));
  if (lines.size() != r) fail(errc::internal, "wrong number of common eigenvectors");
  return lines;
}

void exact_audits(const CharacterTable& t) {
  const ClassList& cl = *t.classes;
  std::size_t r = cl.count();
  u64 e = t.exponent;
  const BigInt& order = t.group->order();

  BigInt degree_square_sum = 0;
  for (std::size_t i = 0; i < r; ++i) {
    degree_square_sum += t.degrees[i] * t.degrees[i];
    if (order % t.degrees[i] != 0)
      fail(errc::audit_failure, "character degree does not divide |G|");
    if (t.rows[i][0] != Cyclotomic(static_cast<long long>(t.degrees[i])))
      fail(errc::audit_failure, "identity column disagrees with degree");
  }
  if (degree_square_sum != order)
    fail(errc::audit_failure, "sum of squared degrees differs from |G|");

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      if (t.rows[i][cl.inverse_map[k]] != t.rows[i][k].conjugate())
        fail(errc::audit_failure, "inverse-class values are not conjugate");

  // row orthogonality: sum_k |C_k| chi(g_k) psi(g_k^-1) = |G| delta
  for (std::size_t i1 = 0; i1 < r; ++i1) {
    for (std::size_t i2 = i1; i2 < r; ++i2) {
      std::vector<int128> acc(e, 0);
      for (std::size_t k = 0; k < r; ++k) {
        Cyclotomic prod = t.rows[i1][k] * t.rows[i2][cl.inverse_map[k]];
        long long h = static_cast<long long>(cl.classes[k].size);
        const auto& cf = prod.coeffs();
        u64 stride = e / prod.conductor();
        for (std::size_t j = 0; j < cf.size(); ++j)
          if (cf[j]) acc[j * stride] += int128(h) * cf[j];
      }
      reduce_raw_mod_phi(acc, e);
      int128 expect = (i1 == i2) ? int128(static_cast<u64>(order)) : 0;
      if (acc[0] != expect) fail(errc::audit_failure, "row orthogonality failed");
      for (std::size_t j = 1; j < acc.size(); ++j)
        if (acc[j]) fail(errc::audit_failure, "row orthogonality failed");
    }
  }

  // column orthogonality: sum_chi chi(g_j) chi(g_k^-1) = delta |C(g_j)|
  for (std::size_t k1 = 0; k1 < r; ++k1) {
    for (std::size_t k2 = k1; k2 < r; ++k2) {
      u64 m = std::lcm(cl.classes[k1].element_order, cl.classes[k2].element_order);
      std::vector<int128> acc(m, 0);
      for (std::size_t i = 0; i < r; ++i) {
        Cyclotomic prod = t.rows[i][k1] * t.rows[i][cl.inverse_map[k2]];
        const auto& cf = prod.coeffs();
        u64 stride = m / prod.conductor();
        for (std::size_t j = 0; j < cf.size(); ++j)
          if (cf[j]) acc[j * stride] += cf[j];
      }
      reduce_raw_mod_phi(acc, m);
      int128 expect = (k1 == k2) ? int128(static_cast<u64>(cl.centralizer_order(k1))) : 0;
      if (acc[0] != expect) fail(errc::audit_failure, "column orthogonality failed");
      for (std::size_t j = 1; j < acc.size(); ++j)
        if (acc[j]) fail(errc::audit_failure, "column orthogonality failed");
    }
  }
}

} // namespace

std::vector<std::vector<long long>> class_matrix(const ClassList& cl, std::size_t i,
                                                 const FlatClassMap& fm) {
  if (i >= cl.count()) fail(errc::bad_input, "class index out of range");
  return build_class_matrix(cl, i, fm);
}

std::vector<std::vector<long long>> class_matrix(const ClassList& cl, std::size_t i) {
  if (cl.group->order() > 10000000) fail(errc::cap_exceeded, "class matrix size guard exceeded");
  FlatClassMap fm = build_flat_class_map(cl);
  return class_matrix(cl, i, fm);
}

CharacterTablePtr character_table(const GroupPtr& g, const ClassListPtr& cl,
                                  const CharTableOptions& opt) {
  if (g->order() > opt.table_cap)
    fail(errc::cap_exceeded, "character table cap exceeded: |G| = " + g->order().str());

  auto t = std::make_shared<CharacterTable>();
  t->group = g;
  t->classes = cl;
  std::size_t r = cl->count();

  u64 e = 1;
  for (const auto& c : cl->classes) e = std::lcm(e, c.element_order);
  t->exponent = e;

  Fp f{find_working_prime(e, g->order())};
  t->working_prime = f.p;
  u64 z = f.pow(primitive_root(f.p), (f.p - 1) / e); // fixed primitive e-th root mod l

  FlatClassMap fm = build_flat_class_map(*cl);

  auto lines = split_eigenspaces(*cl, fm, f);

  // normalize to central characters (value 1 at the identity class)
  std::vector<ModularCharacter> chars(r);
  u64 order_mod = static_cast<u64>(g->order() % f.p);
  std::vector<u64> class_size_inv(r);
  for (std::size_t k = 0; k < r; ++k)
    class_size_inv[k] = f.inv(static_cast<u64>(cl->classes[k].size % f.p));
  for (std::size_t i = 0; i < r; ++i) {
    Vec v = lines[i];
    if (!v[0]) fail(errc::internal, "eigenvector vanishes at the identity class");
    u64 norm = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, norm);
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = f.add(s, f.mul(f.mul(v[k], v[cl->inverse_map[k]]), class_size_inv[k]));
    if (!s) fail(errc::internal, "degree norm vanished");
    u64 d2 = f.mul(order_mod, f.inv(s));
    u64 droot = sqrt_mod(d2, f.p);
    u64 d = std::min(droot, f.p - droot);
    if (d == 0) fail(errc::internal, "zero character degree");
    chars[i] = {std::move(v), d};
  }

  // class index of rep^t for t = 0..m-1, per class
  std::vector<std::vector<std::size_t>> pow_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    u64 m = cl->classes[k].element_order;
    pow_class[k].resize(m);
    Permutation cur(g->degree());
    for (u64 tt = 0; tt < m; ++tt) {
      std::size_t idx = fm.find(cur);
      if (idx == FlatClassMap::npos) fail(errc::internal, "power escaped the class map");
      pow_class[k][tt] = idx;
      cur = cur * cl->classes[k].representative;
    }
  }

  // lift values: chi(g_k) = sum_j mu_j zeta_m^j, multiplicities recovered
  // by the inverse DFT over F_l; they are bounded by the degree < l/2, so
  // the integer lift is unique.
  t->degrees.resize(r);
  t->rows.assign(r, std::vector<Cyclotomic>(r));
  for (std::size_t i = 0; i < r; ++i) {
    t->degrees[i] = chars[i].degree;
    for (std::size_t k = 0; k < r; ++k) {
      u64 m = cl->classes[k].element_order;
      u64 zm = f.pow(z, e / m);
      u64 zm_inv = f.inv(zm);
      u64 m_inv = f.inv(m % f.p);
      std::vector<long long> mu(m, 0);
      long long mu_sum = 0;
      for (u64 j = 0; j < m; ++j) {
        u64 acc = 0;
        for (u64 tt = 0; tt < m; ++tt) {
          std::size_t cls = pow_class[k][tt];
          u64 chi_t = f.mul(f.mul(chars[i].degree, chars[i].omega[cls]), class_size_inv[cls]);
          acc = f.add(acc, f.mul(chi_t, f.pow(zm_inv, j * tt % m)));
        }
        acc = f.mul(acc, m_inv);
        if (acc >= (f.p + 1) / 2) fail(errc::internal, "negative root multiplicity in lift");
        if (acc > chars[i].degree) fail(errc::internal, "root multiplicity exceeds degree");
        mu[j] = static_cast<long long>(acc);
        mu_sum += mu[j];
      }
      if (mu_sum != static_cast<long long>(chars[i].degree))
        fail(errc::internal, "root multiplicities do not sum to the degree");
      t->rows[i][k] = Cyclotomic::from_coeffs(m, mu);
    }
  }

  // deterministic row order: degree, then per-class canonical coordinates
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (t->degrees[a] != t->degrees[b]) return t->degrees[a] < t->degrees[b];
    for (std::size_t k = 0; k < r; ++k)
      if (t->rows[a][k] != t->rows[b][k]) return t->rows[a][k].structurally_less(t->rows[b][k]);
    return false;
  });
  std::vector<BigInt> deg2;
  std::vector<std::vector<Cyclotomic>> rows2;
  for (std::size_t i : idx) {
    deg2.push_back(t->degrees[i]);
    rows2.push_back(std::move(t->rows[i]));
  }
  t->degrees = std::move(deg2);
  t->rows = std::move(rows2);

  exact_audits(*t);
  return t;
}

std::vector<BigInt> character_degrees(const CharacterTable& t) { return t.degrees; }

std::string CharacterTable::to_tsv() const {
  std::ostringstream os;
  os << "# z = primitive " << exponent << "-th root of unity\n";
  os << "degree";
  for (const auto& c : classes->classes) os << '\t' << c.element_order << '.' << c.size.str();
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << degrees[i].str();
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      os << '\t' << rows[i][k].str(exponent / rows[i][k].conductor());
    os << '\n';
  }
  return os.str();
}

} // namespace cgt

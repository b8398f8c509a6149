#include "prejj/classification.hpp"

#include <algorithm>
#include <cctype>
#include <atomic>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace prejj {

namespace {

constexpr double kTuplesPerSecond = 2.0e7;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i)
    r = saturating_mul(r, base);
  return r;
}

using Residues = std::vector<std::uint32_t>;

// Identity test on raw residues mod p. Small moduli accumulate unreduced.
class Kernel {
public:
  Kernel(std::size_t n, std::uint32_t p, IdentityKind kind) : n_(n), p_(p), kind_(kind) {}

  bool passes(const std::uint32_t *c) const {
    return p_ < (1u << 16) ? passes_impl<false>(c) : passes_impl<true>(c);
  }

private:
  std::size_t at(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }

  template <bool Reduce>
  std::uint64_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t r = static_cast<std::uint64_t>(a) * b;
    return Reduce ? r % p_ : r;
  }

  // (e_i e_j) e_k + e_i (e_j e_k), coordinate t, unreduced.
  template <bool Reduce>
  std::uint64_t anti(const std::uint32_t *c, std::size_t i, std::size_t j, std::size_t k, std::size_t t) const {
    std::uint64_t s = 0;
    for (std::size_t m = 0; m < n_; ++m)
      s += mul<Reduce>(c[at(i, j, m)], c[at(m, k, t)]) + mul<Reduce>(c[at(j, k, m)], c[at(i, m, t)]);
    return s;
  }

  template <bool Reduce>
  std::uint64_t jacobi(const std::uint32_t *c, std::size_t i, std::size_t j, std::size_t k, std::size_t t) const {
    std::uint64_t s = 0;
    for (std::size_t m = 0; m < n_; ++m)
      s += mul<Reduce>(c[at(i, j, m)], c[at(m, k, t)]) + mul<Reduce>(c[at(k, i, m)], c[at(m, j, t)]) +
           mul<Reduce>(c[at(j, k, m)], c[at(m, i, t)]);
    return s;
  }

  template <bool Reduce>
  bool passes_impl(const std::uint32_t *c) const {
    if (kind_ == IdentityKind::jj)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
          for (std::size_t k = 0; k < n_; ++k)
            if (c[at(i, j, k)] != c[at(j, i, k)])
              return false;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          for (std::size_t t = 0; t < n_; ++t) {
            std::uint64_t v = 0;
            switch (kind_) {
            case IdentityKind::antiassociative:
              v = anti<Reduce>(c, i, j, k, t);
              break;
            case IdentityKind::left_pre_jj:
              v = anti<Reduce>(c, i, j, k, t) + anti<Reduce>(c, j, i, k, t);
              break;
            case IdentityKind::right_pre_jj:
              v = anti<Reduce>(c, i, j, k, t) + anti<Reduce>(c, i, k, j, t);
              break;
            case IdentityKind::operad: {
              // (xy)z + x(yz) + (yx)z + y(xz)
              for (std::size_t m = 0; m < n_; ++m)
                v += mul<Reduce>(c[at(i, j, m)], c[at(m, k, t)]) + mul<Reduce>(c[at(j, k, m)], c[at(i, m, t)]) +
                     mul<Reduce>(c[at(j, i, m)], c[at(m, k, t)]) + mul<Reduce>(c[at(i, k, m)], c[at(j, m, t)]);
              break;
            }
            case IdentityKind::jj:
              v = jacobi<Reduce>(c, i, j, k, t);
              break;
            }
            if (v % p_ != 0)
              return false;
          }
    return true;
  }

  std::size_t n_;
  std::uint32_t p_;
  IdentityKind kind_;
};

struct GroupElement {
  Residues p, pinv;
};

std::uint32_t residue(const Scalar &s, const Field &f) {
  if (!(s.field() == f))
    throw FieldMismatch("tuple entry " + s.to_string() + " is not in " + f.to_string());
  return s.as_prime().value();
}

Residues residues_of(const Algebra &a) {
  Residues r;
  for (const auto &s : a.constants())
    r.push_back(residue(s, a.field()));
  return r;
}

ConstantTuple tuple_of(std::size_t n, const std::uint32_t *c, const Field &f) {
  ConstantTuple t{n, {}};
  for (std::size_t i = 0; i < n * n * n; ++i)
    t.entries.push_back(Scalar::from_int(c[i], f));
  return t;
}

LinearMap matrix_of(std::size_t n, const Residues &m, const Field &f) {
  LinearMap out(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out(r, c) = Scalar::from_int(m[r * n + c], f);
  return out;
}

// Invertible n x n matrices over F_p in lexicographic row-major order.
std::vector<GroupElement> general_linear_group(std::size_t n, const Field &f) {
  std::uint32_t p = f.modulus();
  std::size_t cells = n * n;
  std::vector<GroupElement> out;
  Residues m(cells, 0);
  for (;;) {
    LinearMap lm = matrix_of(n, m, f);
    if (auto inv = lm.inverse()) {
      Residues pinv(cells);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          pinv[r * n + c] = (*inv)(r, c).as_prime().value();
      out.push_back({m, std::move(pinv)});
    }
    std::size_t pos = cells;
    while (pos > 0 && ++m[pos - 1] == p)
      m[--pos] = 0;
    if (pos == 0)
      break;
  }
  return out;
}

// Structure constants in the basis formed by the columns of g.p.
void transform(std::size_t n, std::uint32_t p, const std::uint32_t *c, const GroupElement &g,
               std::uint32_t *out) {
  std::uint64_t tmp[3];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < n; ++t) {
        std::uint64_t acc = 0;
        for (std::size_t s = 0; s < n; ++s) {
          std::uint64_t ps = g.p[s * n + i];
          if (ps == 0)
            continue;
          for (std::size_t u = 0; u < n; ++u)
            acc = (acc + ps * g.p[u * n + j] % p * c[(s * n + u) * n + t]) % p;
        }
        tmp[t] = acc;
      }
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < n; ++t)
          acc = (acc + g.pinv[k * n + t] * tmp[t]) % p;
        out[(i * n + j) * n + k] = static_cast<std::uint32_t>(acc);
      }
    }
}

std::uint64_t encode(const std::uint32_t *c, std::size_t len, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < len; ++i)
    code = code * p + c[i];
  return code;
}

void require_prime(const Field &f, const char *what) {
  if (!f.is_prime())
    throw Error(std::string(what) + " requires a prime field; over the rationals use verify_solutions");
}

void add_char_warning(const Field &f, std::vector<std::string> &warnings) {
  if (f.outside_paper_hypotheses())
    warnings.push_back("characteristic " + std::to_string(f.characteristic()) + " outside paper hypotheses");
}

std::string cost_message(const std::string &what, std::uint64_t tuples, std::uint64_t limit,
                         double seconds) {
  std::ostringstream os;
  os << what << ": " << tuples << " tuples exceeds the limit of " << limit << " (estimated " << seconds
     << " s)";
  return os.str();
}

// Flattened residues of every solution, lexicographic.
Residues scan(std::size_t n, std::uint32_t p, IdentityKind kind, const SearchOptions &options) {
  std::size_t len = n * n * n;
  std::uint64_t total = tuple_space_size(n, p);
  if (total > options.max_tuples) {
    double secs = static_cast<double>(total) / kTuplesPerSecond;
    throw InfeasibleSearch(cost_message("enumeration over F_" + std::to_string(p) + " in dim " + std::to_string(n),
                                        total, options.max_tuples, secs),
                           secs);
  }
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());

  // Fix a prefix of leading entries per block; blocks are concatenated in order.
  std::size_t prefix = 0;
  std::uint64_t blocks = 1;
  while (prefix < len && blocks < 64ull * workers) {
    blocks *= p;
    ++prefix;
  }
  std::vector<Residues> results(blocks);
  std::atomic<std::uint64_t> next{0};
  Kernel kernel(n, p, kind);

  auto work = [&] {
    Residues c(len);
    for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;) {
      std::uint64_t code = b;
      for (std::size_t i = prefix; i-- > 0;) {
        c[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
      }
      std::fill(c.begin() + prefix, c.end(), 0);
      Residues &out = results[b];
      for (;;) {
        if (kernel.passes(c.data()))
          out.insert(out.end(), c.begin(), c.end());
        std::size_t pos = len;
        while (pos > prefix && ++c[pos - 1] == p)
          c[--pos] = 0;
        if (pos == prefix)
          break;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();

  Residues all;
  for (auto &r : results)
    all.insert(all.end(), r.begin(), r.end());
  return all;
}

} // namespace

std::strong_ordering ConstantTuple::operator<=>(const ConstantTuple &o) const {
  if (auto c = dim <=> o.dim; c != 0)
    return c;
  for (std::size_t i = 0; i < entries.size() && i < o.entries.size(); ++i)
    if (auto c = entries[i].compare(o.entries[i]); c != 0)
      return c;
  return entries.size() <=> o.entries.size();
}

ConstantTuple ConstantTuple::from_algebra(const Algebra &a) { return {a.dim(), a.constants()}; }

Algebra ConstantTuple::algebra(const Field &field) const {
  if (entries.size() != dim * dim * dim)
    throw Error("tuple of dim " + std::to_string(dim) + " needs " + std::to_string(dim * dim * dim) +
                " entries, got " + std::to_string(entries.size()));
  return Algebra::from_constants(field, dim, entries);
}

std::uint64_t tuple_space_size(std::size_t dim, std::uint32_t p) { return saturating_pow(p, dim * dim * dim); }

std::uint64_t general_linear_order(std::size_t dim, std::uint32_t p) {
  std::uint64_t total = saturating_pow(p, dim * dim), order = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    std::uint64_t pi = saturating_pow(p, i);
    order = saturating_mul(order, saturating_pow(p, dim) - pi);
  }
  return std::min(order, total);
}

std::vector<ConstantTuple> enumerate_solutions(std::size_t dim, const Field &field, IdentityKind kind,
                                               const SearchOptions &options) {
  require_prime(field, "enumerate_solutions");
  if (dim == 0 || dim > 3)
    throw Error("enumerate_solutions supports dim 1 to 3, got " + std::to_string(dim));
  std::size_t len = dim * dim * dim;
  Residues all = scan(dim, field.modulus(), kind, options);
  std::vector<ConstantTuple> out;
  out.reserve(all.size() / len);
  for (std::size_t i = 0; i < all.size(); i += len)
    out.push_back(tuple_of(dim, all.data() + i, field));
  return out;
}

std::vector<bool> verify_solutions(const std::vector<ConstantTuple> &tuples, const Field &field,
                                   IdentityKind kind) {
  std::vector<bool> out;
  for (const auto &t : tuples)
    out.push_back(satisfies(t.algebra(field), kind));
  return out;
}

std::optional<LinearMap> find_isomorphism(const Algebra &a, const Algebra &b, std::int64_t bound) {
  if (a.dim() != b.dim())
    throw Error("find_isomorphism: dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) +
                " differ");
  if (!(a.field() == b.field()))
    throw FieldMismatch("find_isomorphism: fields differ");
  const Field &f = a.field();
  std::size_t n = a.dim();
  if (a == b)
    return LinearMap::identity(f, n);

  if (f.is_prime()) {
    std::uint64_t space = saturating_pow(f.modulus(), n * n);
    if (space > 50'000'000)
      throw InfeasibleSearch(cost_message("GL scan", space, 50'000'000, space / kTuplesPerSecond),
                             space / kTuplesPerSecond);
    Residues ca = residues_of(a), cb = residues_of(b), img(ca.size());
    for (const auto &g : general_linear_group(n, f)) {
      transform(n, f.modulus(), ca.data(), g, img.data());
      if (img == cb)
        return matrix_of(n, g.p, f);
    }
    return std::nullopt;
  }

  if (bound < 0)
    throw Error("find_isomorphism: negative bound");
  std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  std::uint64_t space = saturating_pow(span, n * n);
  if (space > 5'000'000)
    throw InfeasibleSearch(cost_message("integer matrix scan", space, 5'000'000, space / 2.0e5), space / 2.0e5);
  std::vector<std::int64_t> m(n * n, -bound);
  for (;;) {
    LinearMap p(f, n, n);
    for (std::size_t i = 0; i < n * n; ++i)
      p(i / n, i % n) = Scalar::from_int(m[i], f);
    if (!p.determinant().is_zero() && apply_basis_change(a, p) == b)
      return p;
    std::size_t pos = n * n;
    while (pos > 0 && ++m[pos - 1] > bound)
      m[--pos] = -bound;
    if (pos == 0)
      break;
  }
  return std::nullopt;
}

std::vector<ConstantTuple> orbit_of(const ConstantTuple &t, const Field &field) {
  require_prime(field, "orbit_of");
  Residues c;
  for (const auto &s : t.entries)
    c.push_back(residue(s, field));
  if (c.size() != t.dim * t.dim * t.dim)
    throw Error("orbit_of: malformed tuple");
  std::vector<Residues> images;
  Residues img(c.size());
  for (const auto &g : general_linear_group(t.dim, field)) {
    transform(t.dim, field.modulus(), c.data(), g, img.data());
    images.push_back(img);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::vector<ConstantTuple> out;
  for (const auto &r : images)
    out.push_back(tuple_of(t.dim, r.data(), field));
  return out;
}

OrbitCensus classify(std::size_t dim, const Field &field, IdentityKind kind, const SearchOptions &options) {
  require_prime(field, "classify");
  if (dim != 1 && dim != 2)
    throw Error("classify supports dim 1 or 2, got " + std::to_string(dim));
  std::uint32_t p = field.modulus();
  std::uint64_t order = general_linear_order(dim, p);
  if (order > options.max_group_order) {
    double secs = static_cast<double>(tuple_space_size(dim, p)) / kTuplesPerSecond;
    throw InfeasibleSearch(cost_message("orbit closure over GL_" + std::to_string(dim) + "(F_" +
                                            std::to_string(p) + ") with group order " + std::to_string(order),
                                        tuple_space_size(dim, p), options.max_tuples, secs),
                           secs);
  }

  OrbitCensus census;
  census.field = field;
  census.kind = kind;
  census.dim = dim;
  add_char_warning(field, census.warnings);
  census.metadata = {tuple_space_size(dim, p), order};

  std::size_t len = dim * dim * dim;
  Residues all = scan(dim, p, kind, options);
  std::size_t count = all.size() / len;
  census.total_solutions = count;
  std::vector<std::uint64_t> codes(count);
  for (std::size_t i = 0; i < count; ++i)
    codes[i] = encode(all.data() + i * len, len, p);

  std::vector<GroupElement> group = general_linear_group(dim, field);
  std::vector<bool> assigned(count, false);
  Residues img(len);
  std::vector<std::size_t> members;
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (assigned[idx])
      continue;
    members.clear();
    for (const auto &g : group) {
      transform(dim, p, all.data() + idx * len, g, img.data());
      auto it = std::lower_bound(codes.begin(), codes.end(), encode(img.data(), len, p));
      if (it == codes.end() || *it != encode(img.data(), len, p))
        throw Error("classify: basis change left the solution set of " + to_string(kind));
      std::size_t m = static_cast<std::size_t>(it - codes.begin());
      if (!assigned[m]) {
        assigned[m] = true;
        members.push_back(m);
      }
    }
    census.orbits.push_back({tuple_of(dim, all.data() + idx * len, field), members.size()});
  }
  return census;
}

std::optional<std::size_t> orbit_index(const OrbitCensus &census, const ConstantTuple &t) {
  ConstantTuple least = orbit_of(t, census.field).front();
  for (std::size_t i = 0; i < census.orbits.size(); ++i)
    if (census.orbits[i].representative == least)
      return i;
  return std::nullopt;
}

std::vector<ConstantTuple> missing_from(const std::vector<ConstantTuple> &lhs,
                                        const std::vector<ConstantTuple> &rhs) {
  std::vector<ConstantTuple> out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial form of the dim-2 system.

namespace {

int var(std::size_t i, std::size_t j, std::size_t k) { return static_cast<int>((i * 2 + j) * 2 + k); }

std::string var_name(int v) { return std::string(1, static_cast<char>('a' + v / 2)) + std::to_string(v % 2 + 1); }

using TermMap = std::map<std::pair<int, int>, Rational>;

void add_term(TermMap &m, int x, int y, const Rational &coeff) {
  auto key = std::minmax(x, y);
  Rational &slot = m[{key.first, key.second}];
  slot = slot + coeff;
}

QuadraticPolynomial from_map(const TermMap &m) {
  QuadraticPolynomial out;
  for (const auto &[k, v] : m)
    if (!v.is_zero())
      out.terms.push_back({k, v});
  return out;
}

void add_anti(TermMap &m, std::size_t i, std::size_t j, std::size_t k, std::size_t t) {
  for (std::size_t s = 0; s < 2; ++s) {
    add_term(m, var(i, j, s), var(s, k, t), 1);
    add_term(m, var(j, k, s), var(i, s, t), 1);
  }
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0, cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero())
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[r], rows[pivot]);
    Rational inv = rows[r][c].inverse();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero())
        continue;
      Rational factor = rows[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        rows[i][k] = rows[i][k] - factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

} // namespace

QuadraticPolynomial QuadraticPolynomial::parse(const std::string &text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos)
    throw Error("equation needs exactly one '=': " + text);
  TermMap m;
  auto side = [&](std::string_view s, int sign, std::size_t offset) {
    std::size_t pos = 0;
    auto fail = [&](const std::string &why) {
      throw Error("cannot parse equation at column " + std::to_string(offset + pos + 1) + ": " + why + " in '" +
                  text + "'");
    };
    while (pos < s.size()) {
      int term_sign = sign;
      if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-')
          term_sign = -sign;
        ++pos;
      }
      long coeff = 0;
      bool has_coeff = false;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = coeff * 10 + (s[pos++] - '0');
        has_coeff = true;
      }
      if (!has_coeff)
        coeff = 1;
      std::vector<int> vars;
      while (pos < s.size() && s[pos] >= 'a' && s[pos] <= 'd') {
        if (pos + 1 >= s.size() || (s[pos + 1] != '1' && s[pos + 1] != '2'))
          fail("variable needs index 1 or 2");
        int v = (s[pos] - 'a') * 2 + (s[pos + 1] - '1');
        pos += 2;
        vars.push_back(v);
        if (pos < s.size() && s[pos] == '^') {
          if (pos + 1 >= s.size() || s[pos + 1] != '2')
            fail("only squares are supported");
          vars.push_back(v);
          pos += 2;
        }
      }
      if (vars.empty() && has_coeff && coeff == 0)
        continue;
      if (vars.size() != 2)
        fail("expected a quadratic monomial");
      add_term(m, vars[0], vars[1], Rational(term_sign * coeff));
    }
  };
  side(std::string_view(text).substr(0, eq), 1, 0);
  side(std::string_view(text).substr(eq + 1), -1, eq + 1);
  return from_map(m);
}

std::string QuadraticPolynomial::to_string() const {
  if (terms.empty())
    return "0";
  std::string out;
  for (const auto &[k, v] : terms) {
    Rational c = v;
    if (!out.empty())
      out += c.numerator() < 0 ? " - " : " + ";
    else if (c.numerator() < 0)
      out += "-";
    if (c.numerator() < 0)
      c = -c;
    if (!(c == Rational(1)))
      out += c.to_string();
    out += k.first == k.second ? var_name(k.first) + "^2" : var_name(k.first) + var_name(k.second);
  }
  return out;
}

QuadraticPolynomial identity_polynomial(IdentityKind kind, std::size_t i, std::size_t j, std::size_t k,
                                        std::size_t t) {
  if (i > 1 || j > 1 || k > 1 || t > 1)
    throw Error("identity_polynomial: indices must be 0 or 1");
  TermMap m;
  switch (kind) {
  case IdentityKind::antiassociative:
    add_anti(m, i, j, k, t);
    break;
  case IdentityKind::left_pre_jj:
    add_anti(m, i, j, k, t);
    add_anti(m, j, i, k, t);
    break;
  default:
    throw Error("identity_polynomial supports antiassoc and left-prejj only");
  }
  return from_map(m);
}

std::vector<QuadraticPolynomial> generated_system(IdentityKind kind) {
  std::vector<QuadraticPolynomial> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t t = 0; t < 2; ++t)
          out.push_back(identity_polynomial(kind, i, j, k, t));
  return out;
}

const std::vector<std::string> &printed_system() {
  // The bare "b^2" of the fourth line is read as b2^2; the repeated b1c2 of
  // the twelfth line is kept as printed.
  static const std::vector<std::string> eqs = {
      "2a1^2+a2c1+a2b1=0",
      "2a1a2+a2c2+a2b2=0",
      "a1b1+a2d1+b1a1+b2b1=0",
      "a1b2+a2d2+b1a2+b2^2=0",
      "b1a1+b2c1+c1a1+c2b1=-c1a1-c2c1-a1c1-a2d1",
      "b1a2+b2c2+c1a2+c2b2=-c1a2-c2^2-a1c2-a2d2",
      "b1^2+b2d1+d1a1+d2b1=-c1b1-c2d1-b1c1-b2d1",
      "b1b2+b2d2+d1a2+d2b2=-c1b2-c2d2-b1c2-b2d2",
      "c1a1+c2c1+a1c1+a2d1=-a1b1-b2c1-c1a1-c2b1",
      "c1a2+c2^2+a1c2+a2d2=-b1a2-b2c2-c1a2-c2b2",
      "c1b1+c2d1+b1c1+b2d1=-b1^2-b2d1-d1a1-d2b1",
      "c1b2+c2d2+b1c2+b1c2+b2d2=-b1b2-b2d2-d1a2-d2b2",
      "d1a1+d2c1+c1^2+c2d1=-d1a1-d2c1-c1^2-c2d1",
      "d1a2+d2c2+c1c2+c2d2=-d1a2-d2c2-c1c2-c2d2",
      "d1b1+d2d1+d1c1+d2d1=-d1b1-d2d1-d1c1-d2d1",
      "d1b2+d2^2+d1c2+d2^2=-d1b2-d2^2-d1c2-d2^2",
  };
  return eqs;
}

std::vector<PrintedEquationCheck> cross_check_printed_system() {
  std::vector<QuadraticPolynomial> gen = generated_system(IdentityKind::antiassociative);
  // Columns: the 36 quadratic monomials in 8 variables.
  std::map<std::pair<int, int>, std::size_t> column;
  for (int x = 0; x < 8; ++x)
    for (int y = x; y < 8; ++y)
      column[{x, y}] = column.size();
  auto row = [&](const QuadraticPolynomial &q) {
    std::vector<Rational> r(column.size());
    for (const auto &[k, v] : q.terms)
      r[column.at(k)] = v;
    return r;
  };
  std::vector<std::vector<Rational>> base;
  for (const auto &q : gen)
    base.push_back(row(q));
  std::size_t base_rank = rank(base);

  std::vector<PrintedEquationCheck> out;
  for (std::size_t i = 0; i < printed_system().size(); ++i) {
    const std::string &text = printed_system()[i];
    auto rows = base;
    rows.push_back(row(QuadraticPolynomial::parse(text)));
    out.push_back({i + 1, text, rank(rows) == base_rank});
  }
  return out;
}

} // namespace prejj

#include "wald/form_orbits.hpp"

#include <array>
#include <deque>

#include "wald/context.hpp"
#include "wald/error.hpp"

namespace wald {

namespace {

constexpr int kMaxPrecision = 8;
using Digits = std::array<std::uint32_t, kMaxPrecision>;

struct Ring {
  int n;
  std::uint32_t q;

  Digits mul(const Digits& a, const Digits& b) const {
    Digits r{};
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j < n; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    }
    return r;
  }

  Digits add(const Digits& a, const Digits& b) const {
    Digits r{};
    for (int i = 0; i < n; ++i) r[i] = (a[i] + b[i]) % q;
    return r;
  }

  Digits from_poly(const LaurentPoly& p) const {
    Digits d{};
    for (int i = 0; i < n; ++i) d[i] = p.coeff(i).value();
    return d;
  }

  LaurentPoly to_poly(const Digits& d) const {
    std::vector<long long> c(d.begin(), d.begin() + n);
    return LaurentPoly::from_coeffs(0, c);
  }
};

/// Coefficients of (x', y', z') as combinations of (x, y, z) for one
/// generator (A, eps), already multiplied by eps.
struct Kernel {
  std::array<Digits, 9> k;
};

Kernel make_kernel(const Ring& ring, const Mat2& A, const LaurentPoly& eps) {
  const Digits p = ring.from_poly(A(0, 0));
  const Digits r = ring.from_poly(A(0, 1));
  const Digits s = ring.from_poly(A(1, 0));
  const Digits u = ring.from_poly(A(1, 1));
  const Digits e = ring.from_poly(eps);
  auto twice = [&](const Digits& d) { return ring.add(d, d); };
  const std::array<Digits, 9> raw = {
      ring.mul(p, p), twice(ring.mul(p, r)), ring.mul(r, r),
      ring.mul(p, s), ring.add(ring.mul(p, u), ring.mul(r, s)), ring.mul(r, u),
      ring.mul(s, s), twice(ring.mul(s, u)), ring.mul(u, u),
  };
  Kernel out;
  for (int i = 0; i < 9; ++i) out.k[static_cast<std::size_t>(i)] = ring.mul(raw[static_cast<std::size_t>(i)], e);
  return out;
}

std::uint32_t primitive_root(std::uint32_t q) {
  for (std::uint32_t g = 2; g < q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * g) % q);
      ++order;
    } while (x != 1);
    if (order == q - 1) return g;
  }
  return 1;  // q = 2, 3 fall through here only for q = 2
}

}  // namespace

SimilitudeOrbits::SimilitudeOrbits(int precision) : precision_(precision), q_(current_q()) {
  if (precision < 1 || precision > kMaxPrecision) {
    throw Error(ErrorKind::ConfigInvalid, "orbit search precision must be in [1, 8]");
  }
  const Ring ring{precision, q_};
  std::size_t total = 1;
  for (int i = 0; i < 3 * precision; ++i) {
    total *= q_;
    if (total > (std::size_t{1} << 26)) throw Error(ErrorKind::ConfigInvalid, "orbit search state space too large");
  }
  parent_.assign(total, -1);
  generator_.assign(total, -1);
  orbit_.assign(total, -1);

  // Generators of GL2(O/t^N) x (O/t^N)*.
  const LaurentPoly one(1);
  const LaurentPoly zero(0);
  std::vector<LaurentPoly> unit_gens = {LaurentPoly(static_cast<int>(primitive_root(q_)))};
  for (int j = 1; j < precision; ++j) unit_gens.push_back(one + LaurentPoly::t_pow(j));
  for (int j = 0; j < precision; ++j) {
    Mat2 upper;
    upper << one, LaurentPoly::t_pow(j), zero, one;
    Mat2 lower;
    lower << one, zero, LaurentPoly::t_pow(j), one;
    generator_matrices_.emplace_back(upper, one);
    generator_matrices_.emplace_back(lower, one);
  }
  for (const LaurentPoly& g : unit_gens) {
    Mat2 d;
    d << g, zero, zero, one;
    generator_matrices_.emplace_back(d, one);
    generator_matrices_.emplace_back(Mat2::Identity(), g);
  }
  std::vector<Kernel> kernels;
  for (const auto& [A, eps] : generator_matrices_) kernels.push_back(make_kernel(ring, A, eps));

  // State digits: x occupies positions [0, N), y [N, 2N), z [2N, 3N).
  std::vector<std::size_t> place(static_cast<std::size_t>(3 * precision));
  place[0] = 1;
  for (std::size_t i = 1; i < place.size(); ++i) place[i] = place[i - 1] * q_;
  auto decode_digits = [&](std::size_t state, Digits& x, Digits& y, Digits& z) {
    x = y = z = Digits{};
    for (int i = 0; i < precision; ++i) {
      x[i] = static_cast<std::uint32_t>(state % q_);
      state /= q_;
    }
    for (int i = 0; i < precision; ++i) {
      y[i] = static_cast<std::uint32_t>(state % q_);
      state /= q_;
    }
    for (int i = 0; i < precision; ++i) {
      z[i] = static_cast<std::uint32_t>(state % q_);
      state /= q_;
    }
  };
  auto encode_digits = [&](const Digits& x, const Digits& y, const Digits& z) {
    std::size_t s = 0;
    for (int i = 0; i < precision; ++i) {
      s += x[i] * place[static_cast<std::size_t>(i)];
      s += y[i] * place[static_cast<std::size_t>(precision + i)];
      s += z[i] * place[static_cast<std::size_t>(2 * precision + i)];
    }
    return s;
  };

  for (std::size_t s = 0; s < total; ++s) {
    Digits x, y, z;
    decode_digits(s, x, y, z);
    const Digits xz = ring.mul(x, z);
    const Digits yy = ring.mul(y, y);
    for (int i = 0; i < precision; ++i) {
      if (xz[i] != yy[i]) {
        ++nondegenerate_;
        break;
      }
    }
  }

  FqElem nonsquare;
  for (std::uint32_t g = 1; g < q_; ++g) {
    FqElem c = FqElem::from_int(g);
    if (!c.is_nonzero_square()) {
      nonsquare = c;
      break;
    }
  }

  for (int a = 0; a < precision; ++a) {
    for (int b = 0; b <= a && a + b < precision; ++b) {
      for (FqElem w : {FqElem::from_int(1), nonsquare}) {
        Root root{PhiInvariant{a, b, w.is_nonzero_square() ? SquareClass::Square : SquareClass::NonSquare},
                  SymMatrixO::make(LaurentPoly::t_pow(a), LaurentPoly(0), LaurentPoly::monomial(b, w))};
        const auto root_index = static_cast<std::int16_t>(roots_.size());
        const std::size_t start = encode(root.form.x, root.form.y, root.form.z);
        roots_.push_back(std::move(root));
        if (orbit_[start] != -1) {
          disjoint_ = false;
          continue;
        }
        orbit_[start] = root_index;
        ++reached_;
        std::deque<std::size_t> queue = {start};
        while (!queue.empty()) {
          const std::size_t s = queue.front();
          queue.pop_front();
          Digits x, y, z;
          decode_digits(s, x, y, z);
          for (std::size_t g = 0; g < kernels.size(); ++g) {
            const auto& k = kernels[g].k;
            const Digits nx = ring.add(ring.add(ring.mul(k[0], x), ring.mul(k[1], y)), ring.mul(k[2], z));
            const Digits ny = ring.add(ring.add(ring.mul(k[3], x), ring.mul(k[4], y)), ring.mul(k[5], z));
            const Digits nz = ring.add(ring.add(ring.mul(k[6], x), ring.mul(k[7], y)), ring.mul(k[8], z));
            const std::size_t t = encode_digits(nx, ny, nz);
            if (orbit_[t] == -1) {
              orbit_[t] = root_index;
              parent_[t] = static_cast<std::int32_t>(s);
              generator_[t] = static_cast<std::int8_t>(g);
              ++reached_;
              queue.push_back(t);
            } else if (orbit_[t] != root_index) {
              disjoint_ = false;
            }
          }
        }
      }
    }
  }
}

std::size_t SimilitudeOrbits::encode(const LaurentPoly& x, const LaurentPoly& y, const LaurentPoly& z) const {
  std::size_t s = 0;
  std::size_t place = 1;
  for (const LaurentPoly* e : {&x, &y, &z}) {
    for (int i = 0; i < precision_; ++i) {
      s += e->coeff(i).value() * place;
      place *= q_;
    }
  }
  return s;
}

FormEntries SimilitudeOrbits::decode(std::size_t state) const {
  const Ring ring{precision_, q_};
  Digits d[3];
  for (auto& digits : d) {
    digits = Digits{};
    for (int i = 0; i < precision_; ++i) {
      digits[i] = static_cast<std::uint32_t>(state % q_);
      state /= q_;
    }
  }
  return FormEntries{ring.to_poly(d[0]), ring.to_poly(d[1]), ring.to_poly(d[2])};
}

std::optional<std::size_t> SimilitudeOrbits::orbit_of(const SymMatrixO& form) const {
  const std::int16_t r = orbit_[encode(form.x, form.y, form.z)];
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

SimilitudeOrbits::Witness SimilitudeOrbits::witness(const SymMatrixO& form) const {
  std::size_t s = encode(form.x, form.y, form.z);
  if (orbit_[s] < 0) throw Error(ErrorKind::ConfigInvalid, "form not reached by the orbit search");
  Witness w;
  w.root = static_cast<std::size_t>(orbit_[s]);
  w.A = Mat2::Identity();
  w.epsilon = LaurentPoly(1);
  // form = g_k(...g_1(root)); accumulate A = A_{g_k} ... A_{g_1}.
  while (parent_[s] != -1) {
    const auto& [A, eps] = generator_matrices_[static_cast<std::size_t>(generator_[s])];
    Mat2 next = w.A * A;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) next(i, j) = next(i, j).truncated(precision_);
    }
    w.A = next;
    w.epsilon = (w.epsilon * eps).truncated(precision_);
    s = static_cast<std::size_t>(parent_[s]);
  }
  return w;
}

}  // namespace wald

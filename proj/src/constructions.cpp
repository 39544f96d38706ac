#include "qduo/constructions.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "qduo/kernels.hpp"

namespace qduo::rings {

namespace {

std::size_t env_size(const char* var, std::size_t fallback) {
  if (const char* v = std::getenv(var)) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed >= 2) return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

std::atomic<std::size_t>& order_cap_flag() {
  static std::atomic<std::size_t> cap{env_size("QDUO_ORDER_CAP", 200000)};
  return cap;
}

std::atomic<std::size_t>& axiom_cap_flag() {
  static std::atomic<std::size_t> cap{env_size("QDUO_AXIOM_CAP", 4096)};
  return cap;
}

void check_cap(std::uint64_t order, const char* what) {
  if (order > order_cap())
    throw std::invalid_argument(std::string(what) + ": order " + std::to_string(order) +
                                " exceeds the order cap " + std::to_string(order_cap()));
}

std::uint64_t checked_order(std::uint64_t base, unsigned exponent, const char* what) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && out > order_cap() / base)
      throw std::invalid_argument(std::string(what) + ": order exceeds the order cap " +
                                  std::to_string(order_cap()));
    out *= base;
  }
  check_cap(out, what);
  return out;
}

bool is_central(const FiniteRing& ring, Elem s) {
  for (Elem r = 0; r < ring.order(); ++r)
    if (ring.mul(s, r) != ring.mul(r, s)) return false;
  return true;
}

std::string wrap_label(const std::string& s) {
  if (s.find(' ') == std::string::npos && s.find(',') == std::string::npos) return s;
  return "(" + s + ")";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string coords_json(const FiniteRing& base, Elem e) {
  auto c = base.decode(e);
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

RingPtr finish(RingOps ops) { return std::make_shared<FiniteRing>(std::move(ops)); }

// Streaming little-endian mixed-radix digits; the first coordinate varies
// fastest.
struct Digits {
  std::vector<Elem> radix;
  Elem encode_raw(std::span<const Elem> d) const {
    std::uint64_t out = 0, stride = 1;
    for (std::size_t i = 0; i < radix.size(); ++i) {
      out += std::uint64_t(d[i]) * stride;
      stride *= radix[i];
    }
    return static_cast<Elem>(out);
  }
  void decode_raw(Elem e, std::span<Elem> out) const {
    for (std::size_t i = 0; i < radix.size(); ++i) {
      out[i] = e % radix[i];
      e /= radix[i];
    }
  }
  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (Elem r : radix) {
      if (r != 0 && t > (std::uint64_t{1} << 62) / r) return std::uint64_t{1} << 62;
      t *= r;
    }
    return t;
  }
};

std::vector<Elem> decode_vec(const Digits& dg, Elem e) {
  std::vector<Elem> out(dg.radix.size());
  dg.decode_raw(e, out);
  return out;
}

void expect_coord_count(std::span<const Elem> coords, std::size_t want, const char* what) {
  if (coords.size() != want)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) +
                                " coordinates, got " + std::to_string(coords.size()));
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::size_t order_cap() { return order_cap_flag().load(); }
void set_order_cap(std::size_t cap) { order_cap_flag().store(cap); }
std::size_t axiom_cap() { return axiom_cap_flag().load(); }
void set_axiom_cap(std::size_t cap) { axiom_cap_flag().store(cap); }

// ---------------------------------------------------------------------------
// Endomorphisms

bool EndomorphismMap::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

void EndomorphismMap::validate() const {
  if (!base) throw std::invalid_argument("endomorphism: missing base ring");
  const std::size_t n = base->order();
  if (image.size() != n)
    throw std::invalid_argument("endomorphism: image table size " +
                                std::to_string(image.size()) + " does not match order " +
                                std::to_string(n));
  for (Elem e : image)
    if (e >= n) throw std::invalid_argument("endomorphism: image value out of range");
  if (image[base->zero()] != base->zero())
    throw std::invalid_argument("endomorphism: does not fix 0");
  if (image[base->one()] != base->one())
    throw std::invalid_argument("endomorphism: does not fix 1");
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (image[base->add(a, b)] != base->add(image[a], image[b]))
        throw std::invalid_argument("endomorphism: not additive at (" + std::to_string(a) +
                                    ", " + std::to_string(b) + ")");
      if (image[base->mul(a, b)] != base->mul(image[a], image[b]))
        throw std::invalid_argument("endomorphism: not multiplicative at (" +
                                    std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
}

EndomorphismMap identity_endo(RingPtr base) {
  EndomorphismMap m;
  m.base = std::move(base);
  m.image.resize(m.base->order());
  std::iota(m.image.begin(), m.image.end(), 0);
  m.name = "id";
  return m;
}

EndomorphismMap swap_endo(RingPtr p) {
  if (!p || p->kind() != "product" || p->bases().size() != 2)
    throw std::invalid_argument("swap endomorphism: base must be a two-factor product");
  EndomorphismMap m;
  m.base = p;
  m.image.resize(p->order());
  for (Elem e = 0; e < p->order(); ++e) {
    auto c = p->decode(e);
    std::swap(c[0], c[1]);
    m.image[e] = p->encode(c);
  }
  m.name = "swap";
  m.validate();
  return m;
}

// ---------------------------------------------------------------------------
// Z_n and products

RingPtr zn(unsigned n) {
  if (n < 2) throw std::invalid_argument("zn: modulus must be at least 2");
  check_cap(n, "zn");
  RingOps ops;
  ops.order = n;
  ops.zero = 0;
  ops.one = 1;
  ops.add = [n](Elem a, Elem b) { return (a + b) % n; };
  ops.mul = [n](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t(a) * b) % n); };
  ops.neg = [n](Elem a) { return (n - a) % n; };
  ops.label = [](Elem a) { return std::to_string(a); };
  ops.name = "Z_" + std::to_string(n);
  ops.kind = "zn";
  ops.descriptor_json = "{\"kind\":\"zn\",\"n\":" + std::to_string(n) + "}";
  ops.coord_names = {"a"};
  ops.decode = [](Elem e) { return std::vector<Elem>{e}; };
  ops.encode = [n](std::span<const Elem> c) {
    expect_coord_count(c, 1, "zn");
    if (c[0] >= n) throw std::invalid_argument("zn: residue out of range");
    return c[0];
  };
  return finish(std::move(ops));
}

namespace {

RingPtr product_impl(std::vector<RingPtr> factors, std::string kind, std::string name,
                     std::string descriptor, std::vector<std::string> coord_names,
                     std::string label_sep, std::size_t semicolon_before) {
  if (factors.empty()) throw std::invalid_argument("product: needs at least one factor");
  Digits dg;
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    dg.radix.push_back(static_cast<Elem>(f->order()));
    total *= f->order();
    check_cap(total, "product");
  }
  const std::size_t k = factors.size();
  auto fs = std::make_shared<std::vector<RingPtr>>(std::move(factors));
  auto dgp = std::make_shared<Digits>(dg);

  RingOps ops;
  ops.order = static_cast<std::size_t>(total);
  ops.zero = 0;
  {
    std::vector<Elem> ones(k);
    for (std::size_t i = 0; i < k; ++i) ones[i] = (*fs)[i]->one();
    ops.one = dgp->encode_raw(ones);
  }
  ops.add = [fs, dgp, k](Elem x, Elem y) {
    std::uint64_t out = 0, stride = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const Elem r = dgp->radix[i];
      out += std::uint64_t((*fs)[i]->add(x % r, y % r)) * stride;
      x /= r;
      y /= r;
      stride *= r;
    }
    return static_cast<Elem>(out);
  };
  ops.mul = [fs, dgp, k](Elem x, Elem y) {
    std::uint64_t out = 0, stride = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const Elem r = dgp->radix[i];
      out += std::uint64_t((*fs)[i]->mul(x % r, y % r)) * stride;
      x /= r;
      y /= r;
      stride *= r;
    }
    return static_cast<Elem>(out);
  };
  ops.neg = [fs, dgp, k](Elem x) {
    std::uint64_t out = 0, stride = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const Elem r = dgp->radix[i];
      out += std::uint64_t((*fs)[i]->neg(x % r)) * stride;
      x /= r;
      stride *= r;
    }
    return static_cast<Elem>(out);
  };
  ops.label = [fs, dgp, k, label_sep, semicolon_before](Elem x) {
    std::string out = "(";
    for (std::size_t i = 0; i < k; ++i) {
      const Elem r = dgp->radix[i];
      if (i) out += (i == semicolon_before) ? "; " : label_sep;
      out += (*fs)[i]->label(x % r);
      x /= r;
    }
    return out + ")";
  };
  ops.name = std::move(name);
  ops.kind = std::move(kind);
  ops.descriptor_json = std::move(descriptor);
  ops.bases = *fs;
  ops.coord_names = std::move(coord_names);
  ops.decode = [dgp](Elem e) { return decode_vec(*dgp, e); };
  ops.encode = [fs, dgp, k](std::span<const Elem> c) {
    expect_coord_count(c, k, "product");
    for (std::size_t i = 0; i < k; ++i)
      if (c[i] >= dgp->radix[i])
        throw std::invalid_argument("product: coordinate " + std::to_string(i) +
                                    " out of range");
    return dgp->encode_raw(c);
  };
  return finish(std::move(ops));
}

}  // namespace

RingPtr product(std::vector<RingPtr> factors) {
  std::vector<std::string> names, descs, cn;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    names.push_back(factors[i]->name());
    descs.push_back(factors[i]->descriptor_json());
    cn.push_back("f" + std::to_string(i + 1));
  }
  std::string desc = "{\"factors\":[" + join(descs, ",") + "],\"kind\":\"product\"}";
  return product_impl(std::move(factors), "product", join(names, "x"), std::move(desc),
                      std::move(cn), ", ", static_cast<std::size_t>(-1));
}

// ---------------------------------------------------------------------------
// Matrix families

const char* to_string(MatrixShape shape) {
  switch (shape) {
    case MatrixShape::full: return "mn";
    case MatrixShape::upper: return "un";
    case MatrixShape::eqdiag: return "dn";
    case MatrixShape::band: return "vn";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxMatrixDim = 6;

struct MatrixLayout {
  RingPtr base;
  unsigned n = 0;
  MatrixShape shape{};
  std::vector<std::pair<unsigned, unsigned>> free_pos;  // row, col of free entries

  std::size_t coords() const { return free_pos.size(); }

  void to_grid(std::span<const Elem> c, std::array<Elem, kMaxMatrixDim * kMaxMatrixDim>& g) const {
    const Elem z = base->zero();
    g.fill(z);
    switch (shape) {
      case MatrixShape::full:
      case MatrixShape::upper:
        for (std::size_t p = 0; p < free_pos.size(); ++p)
          g[free_pos[p].first * n + free_pos[p].second] = c[p];
        break;
      case MatrixShape::eqdiag:
        for (unsigned i = 0; i < n; ++i) g[i * n + i] = c[0];
        for (std::size_t p = 1; p < free_pos.size(); ++p)
          g[free_pos[p].first * n + free_pos[p].second] = c[p];
        break;
      case MatrixShape::band:
        for (unsigned i = 0; i < n; ++i)
          for (unsigned j = i; j < n; ++j) g[i * n + j] = c[j - i];
        break;
    }
  }

  void from_grid(const std::array<Elem, kMaxMatrixDim * kMaxMatrixDim>& g,
                 std::span<Elem> c) const {
    switch (shape) {
      case MatrixShape::full:
      case MatrixShape::upper:
        for (std::size_t p = 0; p < free_pos.size(); ++p)
          c[p] = g[free_pos[p].first * n + free_pos[p].second];
        break;
      case MatrixShape::eqdiag:
        c[0] = g[0];
        for (std::size_t p = 1; p < free_pos.size(); ++p)
          c[p] = g[free_pos[p].first * n + free_pos[p].second];
        break;
      case MatrixShape::band:
        for (unsigned d = 0; d < n; ++d) c[d] = g[d];
        break;
    }
  }

  void matmul(const std::array<Elem, kMaxMatrixDim * kMaxMatrixDim>& a,
              const std::array<Elem, kMaxMatrixDim * kMaxMatrixDim>& b,
              std::array<Elem, kMaxMatrixDim * kMaxMatrixDim>& out) const {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        Elem acc = base->zero();
        for (unsigned k = 0; k < n; ++k)
          acc = base->add(acc, base->mul(a[i * n + k], b[k * n + j]));
        out[i * n + j] = acc;
      }
    }
  }

  std::string render(const std::array<Elem, kMaxMatrixDim * kMaxMatrixDim>& g) const {
    std::string out = "[";
    for (unsigned i = 0; i < n; ++i) {
      if (i) out += ",";
      out += "[";
      for (unsigned j = 0; j < n; ++j) {
        if (j) out += ",";
        out += wrap_label(base->label(g[i * n + j]));
      }
      out += "]";
    }
    return out + "]";
  }
};

}  // namespace

RingPtr matrix_ring(RingPtr base, unsigned n, MatrixShape shape) {
  if (!base) throw std::invalid_argument("matrix: missing base ring");
  if (n < 2 || n > kMaxMatrixDim)
    throw std::invalid_argument("matrix: dimension must be between 2 and " +
                                std::to_string(kMaxMatrixDim));
  auto lay = std::make_shared<MatrixLayout>();
  lay->base = base;
  lay->n = n;
  lay->shape = shape;
  std::vector<std::string> cn;
  switch (shape) {
    case MatrixShape::full:
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) lay->free_pos.emplace_back(i, j);
      break;
    case MatrixShape::upper:
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) lay->free_pos.emplace_back(i, j);
      break;
    case MatrixShape::eqdiag:
      lay->free_pos.emplace_back(0, 0);  // shared diagonal
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) lay->free_pos.emplace_back(i, j);
      break;
    case MatrixShape::band:
      for (unsigned d = 0; d < n; ++d) lay->free_pos.emplace_back(0, d);
      break;
  }
  if (shape == MatrixShape::eqdiag) {
    cn.push_back("a");
    for (std::size_t p = 1; p < lay->free_pos.size(); ++p)
      cn.push_back("a" + std::to_string(lay->free_pos[p].first + 1) +
                   std::to_string(lay->free_pos[p].second + 1));
  } else if (shape == MatrixShape::band) {
    for (unsigned d = 0; d < n; ++d) cn.push_back("v" + std::to_string(d));
  } else {
    for (auto [i, j] : lay->free_pos)
      cn.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
  }

  const std::size_t m = lay->coords();
  checked_order(base->order(), static_cast<unsigned>(m), "matrix");
  Digits dg;
  dg.radix.assign(m, static_cast<Elem>(base->order()));
  auto dgp = std::make_shared<Digits>(dg);

  static const char* kShapeName[] = {"M", "U", "D", "V"};
  const std::string prefix = kShapeName[static_cast<int>(shape)];

  RingOps ops;
  ops.order = static_cast<std::size_t>(dgp->total());
  ops.zero = 0;
  {
    std::vector<Elem> c(m, base->zero());
    std::array<Elem, kMaxMatrixDim * kMaxMatrixDim> g;
    g.fill(base->zero());
    for (unsigned i = 0; i < n; ++i) g[i * n + i] = base->one();
    lay->from_grid(g, c);
    ops.one = dgp->encode_raw(c);
  }
  ops.add = [lay, dgp, m, base](Elem x, Elem y) {
    std::uint64_t out = 0, stride = 1;
    const Elem r = static_cast<Elem>(base->order());
    for (std::size_t i = 0; i < m; ++i) {
      out += std::uint64_t(base->add(x % r, y % r)) * stride;
      x /= r;
      y /= r;
      stride *= r;
    }
    return static_cast<Elem>(out);
  };
  ops.neg = [m, base](Elem x) {
    std::uint64_t out = 0, stride = 1;
    const Elem r = static_cast<Elem>(base->order());
    for (std::size_t i = 0; i < m; ++i) {
      out += std::uint64_t(base->neg(x % r)) * stride;
      x /= r;
      stride *= r;
    }
    return static_cast<Elem>(out);
  };
  ops.mul = [lay, dgp, m](Elem x, Elem y) {
    std::array<Elem, 36> cx{}, cy{}, cz{};
    dgp->decode_raw(x, std::span<Elem>(cx.data(), m));
    dgp->decode_raw(y, std::span<Elem>(cy.data(), m));
    std::array<Elem, kMaxMatrixDim * kMaxMatrixDim> gx, gy, gz;
    lay->to_grid(std::span<const Elem>(cx.data(), m), gx);
    lay->to_grid(std::span<const Elem>(cy.data(), m), gy);
    lay->matmul(gx, gy, gz);
    lay->from_grid(gz, std::span<Elem>(cz.data(), m));
    return dgp->encode_raw(std::span<const Elem>(cz.data(), m));
  };
  ops.label = [lay, dgp, m](Elem x) {
    std::array<Elem, 36> c{};
    dgp->decode_raw(x, std::span<Elem>(c.data(), m));
    std::array<Elem, kMaxMatrixDim * kMaxMatrixDim> g;
    lay->to_grid(std::span<const Elem>(c.data(), m), g);
    return lay->render(g);
  };
  ops.name = prefix + "_" + std::to_string(n) + "(" + base->name() + ")";
  ops.kind = to_string(shape);
  ops.descriptor_json = "{\"base\":" + base->descriptor_json() + ",\"kind\":\"" +
                        to_string(shape) + "\",\"n\":" + std::to_string(n) + "}";
  ops.bases = {base};
  ops.coord_names = std::move(cn);
  ops.decode = [dgp](Elem e) { return decode_vec(*dgp, e); };
  ops.encode = [dgp, m, base](std::span<const Elem> c) {
    expect_coord_count(c, m, "matrix");
    for (Elem v : c)
      if (v >= base->order()) throw std::invalid_argument("matrix: entry out of range");
    return dgp->encode_raw(c);
  };
  return finish(std::move(ops));
}

// ---------------------------------------------------------------------------
// L_(s,t)

namespace {

// Sorted list of the set sR together with a membership/position table.
struct IdealList {
  std::vector<Elem> list;
  std::vector<Elem> pos;  // base index -> position in list, or sentinel

  static IdealList of(const FiniteRing& base, Elem s) {
    IdealList il;
    il.pos.assign(base.order(), static_cast<Elem>(base.order()));
    for (Elem r = 0; r < base.order(); ++r) {
      const Elem v = base.mul(s, r);
      if (il.pos[v] == base.order()) il.pos[v] = 0;  // mark
    }
    for (Elem v = 0; v < base.order(); ++v) {
      if (il.pos[v] != base.order()) {
        il.pos[v] = static_cast<Elem>(il.list.size());
        il.list.push_back(v);
      }
    }
    return il;
  }
  bool member(Elem v) const { return pos[v] != pos.size(); }
};

}  // namespace

RingPtr lst_ring(RingPtr base, Elem s, Elem t) {
  if (!base) throw std::invalid_argument("lst: missing base ring");
  if (s >= base->order() || t >= base->order())
    throw std::invalid_argument("lst: s and t must be elements of the base ring");
  if (!is_central(*base, s))
    throw std::invalid_argument("lst: s = " + base->label(s) + " is not central in " +
                                base->name());
  if (!is_central(*base, t))
    throw std::invalid_argument("lst: t = " + base->label(t) + " is not central in " +
                                base->name());

  auto ls = std::make_shared<IdealList>(IdealList::of(*base, s));
  auto lt = std::make_shared<IdealList>(IdealList::of(*base, t));
  const Elem nb = static_cast<Elem>(base->order());
  Digits dg;
  dg.radix = {nb, static_cast<Elem>(ls->list.size()), nb, static_cast<Elem>(lt->list.size()), nb};
  check_cap(dg.total(), "lst");
  auto dgp = std::make_shared<Digits>(dg);

  // coordinate values (a, p, d, q, f): matrix [[a,0,0],[p,d,q],[0,0,f]],
  // p in sR and q in tR. Multiplication from M_3:
  //   p'' = p1 a2 + d1 p2,  q'' = d1 q2 + q1 f2, diagonals multiply.
  auto values = [ls, lt](const Digits& d, Elem e, std::array<Elem, 5>& v) {
    std::array<Elem, 5> raw{};
    d.decode_raw(e, raw);
    v = {raw[0], ls->list[raw[1]], raw[2], lt->list[raw[3]], raw[4]};
  };
  auto from_values = [ls, lt, dgp](const std::array<Elem, 5>& v) {
    const Elem p = ls->pos[v[1]], q = lt->pos[v[3]];
    if (p >= ls->list.size() || q >= lt->list.size())
      throw std::logic_error("lst: operation result left the twist ideals");
    const std::array<Elem, 5> raw{v[0], p, v[2], q, v[4]};
    return dgp->encode_raw(raw);
  };

  RingOps ops;
  ops.order = static_cast<std::size_t>(dg.total());
  ops.zero = from_values({base->zero(), base->zero(), base->zero(), base->zero(), base->zero()});
  ops.one = from_values({base->one(), base->zero(), base->one(), base->zero(), base->one()});
  ops.add = [base, dgp, values, from_values](Elem x, Elem y) {
    std::array<Elem, 5> a, b, c;
    values(*dgp, x, a);
    values(*dgp, y, b);
    for (int i = 0; i < 5; ++i) c[i] = base->add(a[i], b[i]);
    return from_values(c);
  };
  ops.neg = [base, dgp, values, from_values](Elem x) {
    std::array<Elem, 5> a, c;
    values(*dgp, x, a);
    for (int i = 0; i < 5; ++i) c[i] = base->neg(a[i]);
    return from_values(c);
  };
  ops.mul = [base, dgp, values, from_values](Elem x, Elem y) {
    std::array<Elem, 5> a, b;
    values(*dgp, x, a);
    values(*dgp, y, b);
    const std::array<Elem, 5> c{
        base->mul(a[0], b[0]),
        base->add(base->mul(a[1], b[0]), base->mul(a[2], b[1])),
        base->mul(a[2], b[2]),
        base->add(base->mul(a[2], b[3]), base->mul(a[3], b[4])),
        base->mul(a[4], b[4])};
    return from_values(c);
  };
  ops.label = [base, dgp, values](Elem x) {
    std::array<Elem, 5> a;
    values(*dgp, x, a);
    const std::string z = wrap_label(base->label(base->zero()));
    return "[[" + wrap_label(base->label(a[0])) + "," + z + "," + z + "],[" +
           wrap_label(base->label(a[1])) + "," + wrap_label(base->label(a[2])) + "," +
           wrap_label(base->label(a[3])) + "],[" + z + "," + z + "," +
           wrap_label(base->label(a[4])) + "]]";
  };
  ops.name = "L_(" + base->label(s) + "," + base->label(t) + ")(" + base->name() + ")";
  ops.kind = "lst";
  ops.descriptor_json = "{\"base\":" + base->descriptor_json() + ",\"kind\":\"lst\",\"s\":" +
                        coords_json(*base, s) + ",\"t\":" + coords_json(*base, t) + "}";
  ops.bases = {base};
  ops.coord_names = {"a", "sc", "d", "te", "f"};
  ops.decode = [dgp, values](Elem e) {
    std::array<Elem, 5> v;
    values(*dgp, e, v);
    return std::vector<Elem>(v.begin(), v.end());
  };
  ops.encode = [base, ls, lt, from_values](std::span<const Elem> c) {
    expect_coord_count(c, 5, "lst");
    for (Elem v : c)
      if (v >= base->order()) throw std::invalid_argument("lst: entry out of range");
    if (!ls->member(c[1]))
      throw std::invalid_argument("lst: entry sc = " + base->label(c[1]) +
                                  " is not in the ideal sR");
    if (!lt->member(c[3]))
      throw std::invalid_argument("lst: entry te = " + base->label(c[3]) +
                                  " is not in the ideal tR");
    return from_values({c[0], c[1], c[2], c[3], c[4]});
  };
  auto ring = finish(std::move(ops));

  // Consistency check against plain 3x3 matrix arithmetic, same policy as
  // the hst builder.
  {
    auto realize = [&](Elem e, std::array<Elem, 9>& g) {
      auto c = ring->decode(e);
      const Elem z = base->zero();
      g = {c[0], z, z, c[1], c[2], c[3], z, z, c[4]};
    };
    auto check_pair = [&](Elem x, Elem y) {
      std::array<Elem, 9> gx, gy, gp, gz;
      realize(x, gx);
      realize(y, gy);
      realize(ring->mul(x, y), gp);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Elem acc = base->zero();
          for (int k = 0; k < 3; ++k)
            acc = base->add(acc, base->mul(gx[i * 3 + k], gy[k * 3 + j]));
          gz[i * 3 + j] = acc;
        }
      if (gz != gp)
        throw std::logic_error("lst: product disagrees with M_3 arithmetic at (" +
                               std::to_string(x) + ", " + std::to_string(y) + ")");
    };
    const Elem n = static_cast<Elem>(ring->order());
    if (n <= 128) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) check_pair(x, y);
    } else {
      std::vector<Elem> gens;
      for (std::size_t i = 0; i < 5; ++i) {
        std::array<Elem, 5> c{0, 0, 0, 0, 0};
        c[i] = (i == 1) ? ls->list.back() : (i == 3) ? lt->list.back() : base->one();
        gens.push_back(ring->encode(std::span<const Elem>(c.data(), 5)));
      }
      for (Elem g1 : gens)
        for (Elem g2 : gens) check_pair(g1, g2);
      std::uint64_t state = 0x9e3779b97f4a7c15ull;
      for (int i = 0; i < 512; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        check_pair(static_cast<Elem>((state >> 16) % n), static_cast<Elem>((state >> 40) % n));
      }
    }
  }
  return ring;
}

// ---------------------------------------------------------------------------
// H_(s,t)

RingPtr hst_ring(RingPtr base, Elem s, Elem t) {
  if (!base) throw std::invalid_argument("hst: missing base ring");
  if (s >= base->order() || t >= base->order())
    throw std::invalid_argument("hst: s and t must be elements of the base ring");
  if (!is_central(*base, s))
    throw std::invalid_argument("hst: s = " + base->label(s) + " is not central");
  if (!is_central(*base, t))
    throw std::invalid_argument("hst: t = " + base->label(t) + " is not central");
  if (!base->units().contains(s))
    throw std::invalid_argument("hst: s = " + base->label(s) + " is not a unit");
  if (!base->units().contains(t))
    throw std::invalid_argument("hst: t = " + base->label(t) + " is not a unit");

  const Elem nb = static_cast<Elem>(base->order());
  Digits dg;
  dg.radix = {nb, nb, nb};
  check_cap(dg.total(), "hst");
  auto dgp = std::make_shared<Digits>(dg);

  // Free coordinates (a, c, e); d = a - sc and f = d - te are derived.
  auto derive = [base, s, t](const std::array<Elem, 3>& v, Elem& d, Elem& f) {
    d = base->sub(v[0], base->mul(s, v[1]));
    f = base->sub(d, base->mul(t, v[2]));
  };

  RingOps ops;
  ops.order = static_cast<std::size_t>(dg.total());
  ops.zero = 0;
  ops.one = dgp->encode_raw(std::array<Elem, 3>{base->one(), base->zero(), base->zero()});
  ops.add = [base, dgp](Elem x, Elem y) {
    std::array<Elem, 3> a, b, c;
    dgp->decode_raw(x, a);
    dgp->decode_raw(y, b);
    for (int i = 0; i < 3; ++i) c[i] = base->add(a[i], b[i]);
    return dgp->encode_raw(c);
  };
  ops.neg = [base, dgp](Elem x) {
    std::array<Elem, 3> a, c;
    dgp->decode_raw(x, a);
    for (int i = 0; i < 3; ++i) c[i] = base->neg(a[i]);
    return dgp->encode_raw(c);
  };
  ops.mul = [base, dgp, derive](Elem x, Elem y) {
    std::array<Elem, 3> a, b;
    dgp->decode_raw(x, a);
    dgp->decode_raw(y, b);
    Elem d1, f1, d2, f2;
    derive(a, d1, f1);
    derive(b, d2, f2);
    const std::array<Elem, 3> c{
        base->mul(a[0], b[0]),
        base->add(base->mul(a[1], b[0]), base->mul(d1, b[1])),
        base->add(base->mul(d1, b[2]), base->mul(a[2], f2))};
    return dgp->encode_raw(c);
  };
  ops.label = [base, dgp, derive](Elem x) {
    std::array<Elem, 3> a;
    dgp->decode_raw(x, a);
    Elem d, f;
    derive(a, d, f);
    const std::string z = wrap_label(base->label(base->zero()));
    return "[[" + wrap_label(base->label(a[0])) + "," + z + "," + z + "],[" +
           wrap_label(base->label(a[1])) + "," + wrap_label(base->label(d)) + "," +
           wrap_label(base->label(a[2])) + "],[" + z + "," + z + "," +
           wrap_label(base->label(f)) + "]]";
  };
  ops.name = "H_(" + base->label(s) + "," + base->label(t) + ")(" + base->name() + ")";
  ops.kind = "hst";
  ops.descriptor_json = "{\"base\":" + base->descriptor_json() + ",\"kind\":\"hst\",\"s\":" +
                        coords_json(*base, s) + ",\"t\":" + coords_json(*base, t) + "}";
  ops.bases = {base};
  ops.coord_names = {"a", "c", "e"};
  ops.decode = [dgp](Elem e) { return decode_vec(*dgp, e); };
  ops.encode = [dgp, nb](std::span<const Elem> c) {
    expect_coord_count(c, 3, "hst");
    for (Elem v : c)
      if (v >= nb) throw std::invalid_argument("hst: entry out of range");
    return dgp->encode_raw(c);
  };
  auto ring = finish(std::move(ops));

  // Consistency check against plain 3x3 matrix arithmetic on a deterministic
  // sample (all pairs for small orders, basis tuples plus an LCG sample
  // otherwise). Guards the derived-coordinate product formula.
  {
    auto realize = [&](Elem e, std::array<Elem, 9>& g) {
      auto c = ring->decode(e);
      Elem d = base->sub(c[0], base->mul(s, c[1]));
      Elem f = base->sub(d, base->mul(t, c[2]));
      const Elem z = base->zero();
      g = {c[0], z, z, c[1], d, c[2], z, z, f};
    };
    auto check_pair = [&](Elem x, Elem y) {
      std::array<Elem, 9> gx, gy, gp, gz;
      realize(x, gx);
      realize(y, gy);
      realize(ring->mul(x, y), gp);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Elem acc = base->zero();
          for (int k = 0; k < 3; ++k)
            acc = base->add(acc, base->mul(gx[i * 3 + k], gy[k * 3 + j]));
          gz[i * 3 + j] = acc;
        }
      if (gz != gp)
        throw std::logic_error("hst: product disagrees with M_3 arithmetic at (" +
                               std::to_string(x) + ", " + std::to_string(y) + ")");
    };
    const Elem n = static_cast<Elem>(ring->order());
    if (n <= 128) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) check_pair(x, y);
    } else {
      std::vector<Elem> gens;
      for (std::size_t i = 0; i < 3; ++i) {
        std::array<Elem, 3> c{0, 0, 0};
        c[i] = base->one();
        gens.push_back(ring->encode(std::span<const Elem>(c.data(), 3)));
      }
      for (Elem g1 : gens)
        for (Elem g2 : gens) check_pair(g1, g2);
      std::uint64_t state = 0x9e3779b97f4a7c15ull;
      for (int i = 0; i < 512; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        check_pair(static_cast<Elem>((state >> 16) % n), static_cast<Elem>((state >> 40) % n));
      }
    }
  }
  return ring;
}

// ---------------------------------------------------------------------------
// K_s

RingPtr ks_ring(RingPtr base, Elem s) {
  if (!base) throw std::invalid_argument("ks: missing base ring");
  if (s >= base->order()) throw std::invalid_argument("ks: s must be a base element");
  if (!is_central(*base, s))
    throw std::invalid_argument("ks: s = " + base->label(s) + " is not central");

  const Elem nb = static_cast<Elem>(base->order());
  Digits dg;
  dg.radix = {nb, nb, nb, nb};
  check_cap(dg.total(), "ks");
  auto dgp = std::make_shared<Digits>(dg);

  RingOps ops;
  ops.order = static_cast<std::size_t>(dg.total());
  ops.zero = 0;
  ops.one = dgp->encode_raw(
      std::array<Elem, 4>{base->one(), base->zero(), base->zero(), base->one()});
  ops.add = [base, dgp](Elem x, Elem y) {
    std::array<Elem, 4> a, b, c;
    dgp->decode_raw(x, a);
    dgp->decode_raw(y, b);
    for (int i = 0; i < 4; ++i) c[i] = base->add(a[i], b[i]);
    return dgp->encode_raw(c);
  };
  ops.neg = [base, dgp](Elem x) {
    std::array<Elem, 4> a, c;
    dgp->decode_raw(x, a);
    for (int i = 0; i < 4; ++i) c[i] = base->neg(a[i]);
    return dgp->encode_raw(c);
  };
  // [[a,b],[c,d]] * [[a',b'],[c',d']] =
  //   [[aa' + s bc', ab' + bd'], [ca' + dc', s cb' + dd']]
  ops.mul = [base, dgp, s](Elem x, Elem y) {
    std::array<Elem, 4> a, b;
    dgp->decode_raw(x, a);
    dgp->decode_raw(y, b);
    const std::array<Elem, 4> c{
        base->add(base->mul(a[0], b[0]), base->mul(s, base->mul(a[1], b[2]))),
        base->add(base->mul(a[0], b[1]), base->mul(a[1], b[3])),
        base->add(base->mul(a[2], b[0]), base->mul(a[3], b[2])),
        base->add(base->mul(s, base->mul(a[2], b[1])), base->mul(a[3], b[3]))};
    return dgp->encode_raw(c);
  };
  ops.label = [base, dgp](Elem x) {
    std::array<Elem, 4> a;
    dgp->decode_raw(x, a);
    return "[[" + wrap_label(base->label(a[0])) + "," + wrap_label(base->label(a[1])) +
           "],[" + wrap_label(base->label(a[2])) + "," + wrap_label(base->label(a[3])) + "]]";
  };
  ops.name = "K_" + base->label(s) + "(" + base->name() + ")";
  ops.kind = "ks";
  ops.descriptor_json = "{\"base\":" + base->descriptor_json() +
                        ",\"kind\":\"ks\",\"note\":\"s-central-permissive\",\"s\":" +
                        coords_json(*base, s) + "}";
  ops.bases = {base};
  ops.coord_names = {"a", "b", "c", "d"};
  ops.decode = [dgp](Elem e) { return decode_vec(*dgp, e); };
  ops.encode = [dgp, nb](std::span<const Elem> c) {
    expect_coord_count(c, 4, "ks");
    for (Elem v : c)
      if (v >= nb) throw std::invalid_argument("ks: entry out of range");
    return dgp->encode_raw(c);
  };
  return finish(std::move(ops));
}

// ---------------------------------------------------------------------------
// Dorroh extension

RingPtr dorroh(RingPtr algebra, unsigned scalars_n) {
  if (!algebra) throw std::invalid_argument("dorroh: missing algebra");
  if (scalars_n < 2) throw std::invalid_argument("dorroh: scalar modulus must be at least 2");

  // The integer action of Z_n is well defined iff the additive exponent of
  // the algebra divides n.
  std::uint64_t exponent = 1;
  for (Elem a = 0; a < algebra->order(); ++a) {
    Elem acc = a;
    std::uint64_t ord = 1;
    while (acc != algebra->zero()) {
      acc = algebra->add(acc, a);
      ++ord;
    }
    exponent = std::lcm(exponent, ord);
  }
  if (scalars_n % exponent != 0)
    throw std::invalid_argument("dorroh: additive exponent " + std::to_string(exponent) +
                                " of " + algebra->name() + " does not divide n = " +
                                std::to_string(scalars_n));

  const Elem nr = static_cast<Elem>(algebra->order());
  const Elem ns = scalars_n;
  check_cap(std::uint64_t(nr) * ns, "dorroh");
  Digits dg;
  dg.radix = {nr, ns};
  auto dgp = std::make_shared<Digits>(dg);

  RingOps ops;
  ops.order = static_cast<std::size_t>(dg.total());
  ops.zero = 0;
  ops.one = dgp->encode_raw(std::array<Elem, 2>{algebra->zero(), 1});
  ops.add = [algebra, dgp, ns](Elem x, Elem y) {
    std::array<Elem, 2> a, b;
    dgp->decode_raw(x, a);
    dgp->decode_raw(y, b);
    return dgp->encode_raw(std::array<Elem, 2>{algebra->add(a[0], b[0]), (a[1] + b[1]) % ns});
  };
  ops.neg = [algebra, dgp, ns](Elem x) {
    std::array<Elem, 2> a;
    dgp->decode_raw(x, a);
    return dgp->encode_raw(std::array<Elem, 2>{algebra->neg(a[0]), (ns - a[1]) % ns});
  };
  // (a1,b1)(a2,b2) = (a1 a2 + b1 a2 + b2 a1, b1 b2)
  ops.mul = [algebra, dgp, ns](Elem x, Elem y) {
    std::array<Elem, 2> a, b;
    dgp->decode_raw(x, a);
    dgp->decode_raw(y, b);
    Elem r = algebra->mul(a[0], b[0]);
    r = algebra->add(r, algebra->scalar_mul(a[1], b[0]));
    r = algebra->add(r, algebra->scalar_mul(b[1], a[0]));
    return dgp->encode_raw(
        std::array<Elem, 2>{r, static_cast<Elem>((std::uint64_t(a[1]) * b[1]) % ns)});
  };
  ops.label = [algebra, dgp](Elem x) {
    std::array<Elem, 2> a;
    dgp->decode_raw(x, a);
    return "(" + algebra->label(a[0]) + ", " + std::to_string(a[1]) + ")";
  };
  ops.name = "I(" + algebra->name() + ",Z_" + std::to_string(scalars_n) + ")";
  ops.kind = "dorroh";
  ops.descriptor_json = "{\"algebra\":" + algebra->descriptor_json() +
                        ",\"kind\":\"dorroh\",\"n\":" + std::to_string(scalars_n) + "}";
  ops.bases = {algebra};
  ops.coord_names = {"r", "s"};
  ops.decode = [dgp](Elem e) { return decode_vec(*dgp, e); };
  ops.encode = [dgp, nr, ns](std::span<const Elem> c) {
    expect_coord_count(c, 2, "dorroh");
    if (c[0] >= nr || c[1] >= ns) throw std::invalid_argument("dorroh: coordinate out of range");
    return dgp->encode_raw(c);
  };
  return finish(std::move(ops));
}

// ---------------------------------------------------------------------------
// Truncated series rings

namespace {

RingPtr series_trunc(RingPtr base, EndomorphismMap alpha, unsigned degree, bool binomial) {
  const char* what = binomial ? "hurwitz" : "skewpower";
  if (!base) throw std::invalid_argument(std::string(what) + ": missing base ring");
  // re-validate against the series base; a map built over a different ring
  // fails here unless the arithmetic matches index for index
  alpha.base = base;
  alpha.validate();
  if (degree + 1 > 16)
    throw std::invalid_argument(std::string(what) + ": truncation degree too large");
  checked_order(base->order(), degree + 1, what);

  const unsigned k = degree;
  const Elem nb = static_cast<Elem>(base->order());
  Digits dg;
  dg.radix.assign(k + 1, nb);
  auto dgp = std::make_shared<Digits>(dg);

  // alpha^i tables for i = 0..k
  auto pows = std::make_shared<std::vector<std::vector<Elem>>>();
  {
    std::vector<Elem> cur(base->order());
    std::iota(cur.begin(), cur.end(), 0);
    pows->push_back(cur);
    for (unsigned i = 1; i <= k; ++i) {
      for (Elem e = 0; e < nb; ++e) cur[e] = alpha.image[(*pows)[i - 1][e]];
      pows->push_back(cur);
    }
  }
  auto binom = std::make_shared<std::vector<std::vector<std::uint64_t>>>();
  for (unsigned n = 0; n <= k; ++n) {
    std::vector<std::uint64_t> row(n + 1, 1);
    for (unsigned i = 1; i < n; ++i) row[i] = (*binom)[n - 1][i - 1] + (*binom)[n - 1][i];
    binom->push_back(row);
  }

  RingOps ops;
  ops.order = static_cast<std::size_t>(dg.total());
  ops.zero = 0;
  {
    std::vector<Elem> c(k + 1, base->zero());
    c[0] = base->one();
    ops.one = dgp->encode_raw(c);
  }
  ops.add = [base, dgp, k](Elem x, Elem y) {
    std::array<Elem, 16> a{}, b{}, c{};
    dgp->decode_raw(x, std::span<Elem>(a.data(), k + 1));
    dgp->decode_raw(y, std::span<Elem>(b.data(), k + 1));
    for (unsigned i = 0; i <= k; ++i) c[i] = base->add(a[i], b[i]);
    return dgp->encode_raw(std::span<const Elem>(c.data(), k + 1));
  };
  ops.neg = [base, dgp, k](Elem x) {
    std::array<Elem, 16> a{}, c{};
    dgp->decode_raw(x, std::span<Elem>(a.data(), k + 1));
    for (unsigned i = 0; i <= k; ++i) c[i] = base->neg(a[i]);
    return dgp->encode_raw(std::span<const Elem>(c.data(), k + 1));
  };
  ops.mul = [base, dgp, k, pows, binom, binomial](Elem x, Elem y) {
    std::array<Elem, 16> a{}, b{}, c{};
    dgp->decode_raw(x, std::span<Elem>(a.data(), k + 1));
    dgp->decode_raw(y, std::span<Elem>(b.data(), k + 1));
    for (unsigned n = 0; n <= k; ++n) {
      Elem acc = base->zero();
      for (unsigned i = 0; i <= n; ++i) {
        Elem term = base->mul(a[i], (*pows)[i][b[n - i]]);
        if (binomial) term = base->scalar_mul((*binom)[n][i], term);
        acc = base->add(acc, term);
      }
      c[n] = acc;
    }
    return dgp->encode_raw(std::span<const Elem>(c.data(), k + 1));
  };
  ops.label = [base, dgp, k](Elem x) {
    std::array<Elem, 16> a{};
    dgp->decode_raw(x, std::span<Elem>(a.data(), k + 1));
    std::string out;
    for (unsigned i = 0; i <= k; ++i) {
      if (a[i] == base->zero()) continue;
      if (!out.empty()) out += " + ";
      const std::string l = wrap_label(base->label(a[i]));
      if (i == 0) {
        out += l;
      } else {
        const std::string xs = (i == 1) ? "x" : "x^" + std::to_string(i);
        out += (l == "1") ? xs : l + " " + xs;
      }
    }
    return out.empty() ? wrap_label(base->label(base->zero())) : out;
  };
  const std::string kindname = binomial ? "hurwitz" : "skewpower";
  const std::string alpha_json =
      (alpha.name == "id" || alpha.name == "swap")
          ? "\"" + alpha.name + "\""
          : [&] {
              std::string out = "[";
              for (std::size_t i = 0; i < alpha.image.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(alpha.image[i]);
              }
              return out + "]";
            }();
  ops.name = (binomial ? std::string("HurwitzTrunc(") : std::string("SkewPowerTrunc(")) +
             base->name() + "," + alpha.name + "," + std::to_string(degree) + ")";
  ops.kind = kindname;
  ops.descriptor_json = "{\"alpha\":" + alpha_json + ",\"base\":" + base->descriptor_json() +
                        ",\"k\":" + std::to_string(degree) + ",\"kind\":\"" + kindname + "\"}";
  ops.bases = {base};
  for (unsigned i = 0; i <= k; ++i) ops.coord_names.push_back("c" + std::to_string(i));
  ops.decode = [dgp](Elem e) { return decode_vec(*dgp, e); };
  ops.encode = [dgp, nb, k](std::span<const Elem> c) {
    expect_coord_count(c, k + 1, "series");
    for (Elem v : c)
      if (v >= nb) throw std::invalid_argument("series: coefficient out of range");
    return dgp->encode_raw(c);
  };
  return finish(std::move(ops));
}

}  // namespace

RingPtr hurwitz_trunc(RingPtr base, EndomorphismMap alpha, unsigned degree) {
  return series_trunc(std::move(base), std::move(alpha), degree, true);
}

RingPtr skew_power_trunc(RingPtr base, EndomorphismMap alpha, unsigned degree) {
  return series_trunc(std::move(base), std::move(alpha), degree, false);
}

Elem eps(const FiniteRing& series_ring, Elem f) {
  if (series_ring.kind() != "hurwitz" && series_ring.kind() != "skewpower")
    throw std::invalid_argument("eps: ring was not built as a truncated series ring");
  return series_ring.decode(f)[0];
}

// ---------------------------------------------------------------------------
// T[R,S] truncation

RingPtr t_trunc(RingPtr r, RingPtr s, unsigned n) {
  if (!r || !s) throw std::invalid_argument("ttrunc: missing factor ring");
  if (n < 1) throw std::invalid_argument("ttrunc: level must be at least 1");
  std::vector<RingPtr> factors(n, r);
  factors.push_back(s);
  std::vector<std::string> cn;
  for (unsigned i = 1; i <= n; ++i) cn.push_back("r" + std::to_string(i));
  cn.push_back("s");
  std::string desc = "{\"kind\":\"ttrunc\",\"n\":" + std::to_string(n) +
                     ",\"r\":" + r->descriptor_json() + ",\"s\":" + s->descriptor_json() + "}";
  std::string name = "T_" + std::to_string(n) + "[" + r->name() + "," + s->name() + "]";
  return product_impl(std::move(factors), "ttrunc", std::move(name), std::move(desc),
                      std::move(cn), ", ", n);
}

// ---------------------------------------------------------------------------
// Corner ring eRe

RingPtr corner(RingPtr base, Elem e) {
  if (!base) throw std::invalid_argument("corner: missing base ring");
  if (e >= base->order()) throw std::invalid_argument("corner: e must be a base element");
  if (base->mul(e, e) != e)
    throw std::invalid_argument("corner: e = " + base->label(e) + " is not idempotent");
  if (e == base->zero())
    throw std::invalid_argument("corner: e = 0 yields the zero ring (1 = 0), which is "
                                "outside the ring model");

  auto to_base = std::make_shared<std::vector<Elem>>();
  auto pos = std::make_shared<std::vector<Elem>>(base->order(), static_cast<Elem>(base->order()));
  for (Elem a = 0; a < base->order(); ++a) {
    const Elem v = base->mul(base->mul(e, a), e);
    if ((*pos)[v] == base->order()) (*pos)[v] = 0;
  }
  for (Elem v = 0; v < base->order(); ++v) {
    if ((*pos)[v] != base->order()) {
      (*pos)[v] = static_cast<Elem>(to_base->size());
      to_base->push_back(v);
    }
  }

  RingOps ops;
  ops.order = to_base->size();
  ops.zero = (*pos)[base->zero()];
  ops.one = (*pos)[e];
  ops.add = [base, to_base, pos](Elem x, Elem y) {
    return (*pos)[base->add((*to_base)[x], (*to_base)[y])];
  };
  ops.mul = [base, to_base, pos](Elem x, Elem y) {
    return (*pos)[base->mul((*to_base)[x], (*to_base)[y])];
  };
  ops.neg = [base, to_base, pos](Elem x) { return (*pos)[base->neg((*to_base)[x])]; };
  ops.label = [base, to_base](Elem x) { return base->label((*to_base)[x]); };
  ops.name = "Corner(" + base->name() + ", e=" + base->label(e) + ")";
  ops.kind = "corner";
  ops.descriptor_json = "{\"base\":" + base->descriptor_json() + ",\"e\":" +
                        coords_json(*base, e) + ",\"kind\":\"corner\"}";
  ops.bases = {base};
  ops.coord_names = {"r"};
  ops.decode = [to_base](Elem x) { return std::vector<Elem>{(*to_base)[x]}; };
  ops.encode = [base, pos](std::span<const Elem> c) {
    expect_coord_count(c, 1, "corner");
    if (c[0] >= base->order() || (*pos)[c[0]] == base->order())
      throw std::invalid_argument("corner: value is not of the form eae");
    return (*pos)[c[0]];
  };
  return finish(std::move(ops));
}

// ---------------------------------------------------------------------------
// The 16-element local ring

RingPtr xuxu_local16() {
  // Elements a + bx + cy, index = a + 4b + 8c. Relations: x^2 = xy = 2,
  // yx = y^2 = 0, 2x = 2y = 0, hence
  //   (a+bx+cy)(a'+b'x+c'y) = (aa' + 2bb' + 2bc') + (ab'+a'b)x + (ac'+a'c)y.
  auto a_of = [](Elem e) { return e & 3u; };
  auto b_of = [](Elem e) { return (e >> 2) & 1u; };
  auto c_of = [](Elem e) { return (e >> 3) & 1u; };
  auto pack = [](Elem a, Elem b, Elem c) { return a | (b << 2) | (c << 3); };

  RingOps ops;
  ops.order = 16;
  ops.zero = 0;
  ops.one = 1;
  ops.add = [=](Elem x, Elem y) {
    return pack((a_of(x) + a_of(y)) & 3u, (b_of(x) + b_of(y)) & 1u, (c_of(x) + c_of(y)) & 1u);
  };
  ops.neg = [=](Elem x) { return pack((4 - a_of(x)) & 3u, b_of(x), c_of(x)); };
  ops.mul = [=](Elem x, Elem y) {
    const Elem a = a_of(x), b = b_of(x), c = c_of(x);
    const Elem a2 = a_of(y), b2 = b_of(y), c2 = c_of(y);
    return pack((a * a2 + 2 * b * b2 + 2 * b * c2) & 3u, (a * b2 + a2 * b) & 1u,
                (a * c2 + a2 * c) & 1u);
  };
  ops.label = [=](Elem x) {
    std::string out;
    if (a_of(x) != 0) out = std::to_string(a_of(x));
    if (b_of(x)) out += out.empty() ? "x" : "+x";
    if (c_of(x)) out += out.empty() ? "y" : "+y";
    return out.empty() ? std::string("0") : out;
  };
  ops.name = "XuXuLocal16";
  ops.kind = "xuxu16";
  ops.descriptor_json = "{\"kind\":\"xuxu16\"}";
  ops.coord_names = {"a", "b", "c"};
  ops.decode = [=](Elem e) { return std::vector<Elem>{a_of(e), b_of(e), c_of(e)}; };
  ops.encode = [=](std::span<const Elem> c) {
    expect_coord_count(c, 3, "xuxu16");
    if (c[0] >= 4 || c[1] >= 2 || c[2] >= 2)
      throw std::invalid_argument("xuxu16: coordinates are (a mod 4, b mod 2, c mod 2)");
    return pack(c[0], c[1], c[2]);
  };
  return finish(std::move(ops));
}

// ---------------------------------------------------------------------------
// D_3 pattern ring

RingPtr d3_pattern(RingPtr base) {
  if (!base) throw std::invalid_argument("d3pattern: missing base ring");
  const Elem nb = static_cast<Elem>(base->order());
  Digits dg;
  dg.radix = {nb, nb, nb};
  check_cap(dg.total(), "d3pattern");
  auto dgp = std::make_shared<Digits>(dg);

  RingOps ops;
  ops.order = static_cast<std::size_t>(dg.total());
  ops.zero = 0;
  ops.one = dgp->encode_raw(std::array<Elem, 3>{base->one(), base->zero(), base->zero()});
  ops.add = [base, dgp](Elem x, Elem y) {
    std::array<Elem, 3> a, b, c;
    dgp->decode_raw(x, a);
    dgp->decode_raw(y, b);
    for (int i = 0; i < 3; ++i) c[i] = base->add(a[i], b[i]);
    return dgp->encode_raw(c);
  };
  ops.neg = [base, dgp](Elem x) {
    std::array<Elem, 3> a, c;
    dgp->decode_raw(x, a);
    for (int i = 0; i < 3; ++i) c[i] = base->neg(a[i]);
    return dgp->encode_raw(c);
  };
  // (a,b,c)(a',b',c') = (aa', ab'+ba', ac'+ca')
  ops.mul = [base, dgp](Elem x, Elem y) {
    std::array<Elem, 3> a, b;
    dgp->decode_raw(x, a);
    dgp->decode_raw(y, b);
    const std::array<Elem, 3> c{base->mul(a[0], b[0]),
                                base->add(base->mul(a[0], b[1]), base->mul(a[1], b[0])),
                                base->add(base->mul(a[0], b[2]), base->mul(a[2], b[0]))};
    return dgp->encode_raw(c);
  };
  ops.label = [base, dgp](Elem x) {
    std::array<Elem, 3> a;
    dgp->decode_raw(x, a);
    const std::string z = wrap_label(base->label(base->zero()));
    const std::string al = wrap_label(base->label(a[0]));
    return "[[" + al + "," + wrap_label(base->label(a[1])) + "," +
           wrap_label(base->label(a[2])) + "],[" + z + "," + al + "," + z + "],[" + z + "," +
           z + "," + al + "]]";
  };
  ops.name = "D3Pattern(" + base->name() + ")";
  ops.kind = "d3pattern";
  ops.descriptor_json =
      "{\"base\":" + base->descriptor_json() + ",\"kind\":\"d3pattern\"}";
  ops.bases = {base};
  ops.coord_names = {"a", "b", "c"};
  ops.decode = [dgp](Elem e) { return decode_vec(*dgp, e); };
  ops.encode = [dgp, nb](std::span<const Elem> c) {
    expect_coord_count(c, 3, "d3pattern");
    for (Elem v : c)
      if (v >= nb) throw std::invalid_argument("d3pattern: entry out of range");
    return dgp->encode_raw(c);
  };
  return finish(std::move(ops));
}

// ---------------------------------------------------------------------------
// Table-backed rings

RingPtr table_ring(const std::vector<std::vector<Elem>>& add,
                   const std::vector<std::vector<Elem>>& mul) {
  const std::size_t n = add.size();
  if (n < 2) throw std::invalid_argument("table: order must be at least 2");
  if (mul.size() != n)
    throw std::invalid_argument("table: add and mul tables must have equal size");
  for (const auto& table : {std::cref(add), std::cref(mul)})
    for (const auto& row : table.get()) {
      if (row.size() != n) throw std::invalid_argument("table: tables must be square");
      for (Elem v : row)
        if (v >= n) throw std::invalid_argument("table: entry out of range");
    }
  if (n > axiom_cap())
    throw std::invalid_argument("table: order " + std::to_string(n) +
                                " exceeds the axiom-check cap " + std::to_string(axiom_cap()) +
                                "; refusing unverifiable tables");

  // Recover the distinguished elements from the tables.
  Elem zero = static_cast<Elem>(n), one = static_cast<Elem>(n);
  for (Elem e = 0; e < n && zero == n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n; ++x)
      if (add[e][x] != x || add[x][e] != x) {
        ok = false;
        break;
      }
    if (ok) zero = e;
  }
  if (zero == n) throw std::invalid_argument("table: no additive identity");
  for (Elem e = 0; e < n && one == n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n; ++x)
      if (mul[e][x] != x || mul[x][e] != x) {
        ok = false;
        break;
      }
    if (ok) one = e;
  }
  if (one == n) throw std::invalid_argument("table: no multiplicative identity");

  auto at = std::make_shared<std::vector<std::vector<Elem>>>(add);
  auto mt = std::make_shared<std::vector<std::vector<Elem>>>(mul);
  auto negs = std::make_shared<std::vector<Elem>>(n, static_cast<Elem>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (add[a][b] == zero) {
        (*negs)[a] = b;
        break;
      }
    if ((*negs)[a] == n)
      throw std::invalid_argument("table: element " + std::to_string(a) +
                                  " has no additive inverse");
  }

  std::string flat;
  flat.reserve(n * n * 4);
  std::string add_json = "[", mul_json = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) {
      add_json += ",";
      mul_json += ",";
    }
    add_json += "[";
    mul_json += "[";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) {
        add_json += ",";
        mul_json += ",";
      }
      add_json += std::to_string(add[i][j]);
      mul_json += std::to_string(mul[i][j]);
      flat += std::to_string(add[i][j]) + "," + std::to_string(mul[i][j]) + ";";
    }
    add_json += "]";
    mul_json += "]";
  }
  add_json += "]";
  mul_json += "]";

  char digest[17];
  std::snprintf(digest, sizeof digest, "%08llx",
                static_cast<unsigned long long>(fnv1a(flat) & 0xffffffffull));

  RingOps ops;
  ops.order = n;
  ops.zero = zero;
  ops.one = one;
  ops.add = [at](Elem a, Elem b) { return (*at)[a][b]; };
  ops.mul = [mt](Elem a, Elem b) { return (*mt)[a][b]; };
  ops.neg = [negs](Elem a) { return (*negs)[a]; };
  ops.label = [](Elem a) { return std::to_string(a); };
  ops.name = "Table" + std::to_string(n) + "#" + digest;
  ops.kind = "table";
  ops.descriptor_json = "{\"add\":" + add_json + ",\"kind\":\"table\",\"mul\":" + mul_json + "}";
  ops.coord_names = {"i"};
  ops.decode = [](Elem e) { return std::vector<Elem>{e}; };
  ops.encode = [n](std::span<const Elem> c) {
    expect_coord_count(c, 1, "table");
    if (c[0] >= n) throw std::invalid_argument("table: index out of range");
    return c[0];
  };
  auto ring = finish(std::move(ops));

  auto report = kernels::verify_axioms(*ring, axiom_cap());
  if (!report.ok()) {
    std::string detail = report.note;
    if (report.violation) {
      detail = report.violation->law + " at (";
      for (std::size_t i = 0; i < report.violation->elems.size(); ++i) {
        if (i) detail += ", ";
        detail += std::to_string(report.violation->elems[i]);
      }
      detail += ")";
    }
    throw std::invalid_argument("table: axiom violation: " + detail);
  }
  return ring;
}

RingTables export_tables(const FiniteRing& ring) {
  if (ring.order() > 2048)
    throw std::invalid_argument("export_tables: order " + std::to_string(ring.order()) +
                                " exceeds the export cap 2048");
  const std::size_t n = ring.order();
  RingTables t;
  t.add.assign(n, std::vector<Elem>(n));
  t.mul.assign(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      t.add[i][j] = ring.add(i, j);
      t.mul[i][j] = ring.mul(i, j);
    }
  return t;
}

}  // namespace qduo::rings

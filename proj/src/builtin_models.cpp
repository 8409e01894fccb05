#include <algorithm>
#include <map>
#include <mutex>

#include "bindlog/error.hpp"
#include "bindlog/models.hpp"

namespace bindlog {

namespace {

// Codes: k = 0, l = 1, i_n = 2i, bar i_n = 2i + 1.
class ExtIfs final : public Ifs {
 public:
  explicit ExtIfs(unsigned n_max) : n_max_(n_max) {}

  std::string name() const override { return "ext"; }
  Element proj(unsigned i, unsigned n) const override {
    if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "projection " + std::to_string(i) + "_" + std::to_string(n));
    return {2 * static_cast<std::int64_t>(i), nullptr};
  }
  Element box(const Element& a, unsigned, unsigned, std::span<const Element> b) const override {
    if (a.code < 2) return a;
    const auto i = static_cast<std::size_t>(a.code / 2);
    if (i > b.size()) throw Error(ErrorCode::IndexOutOfRange, "box argument too short");
    return a.code % 2 ? ext_negate(b[i - 1]) : b[i - 1];
  }
  bool equal(const Element& a, const Element& b, unsigned) const override { return a.code == b.code; }
  bool exact_equality(unsigned) const override { return true; }
  std::optional<Elements> carrier(unsigned n) const override {
    if (n > n_max_) return std::nullopt;
    Elements out;
    for (std::int64_t c = 0; c < 2 * static_cast<std::int64_t>(n) + 2; ++c) out.push_back({c, nullptr});
    return out;
  }
  Element sample(unsigned n, std::mt19937_64& rng) const override {
    return {std::uniform_int_distribution<std::int64_t>(0, 2 * static_cast<std::int64_t>(n) + 1)(rng), nullptr};
  }
  std::string show(const Element& a, unsigned n) const override {
    const std::string lvl = std::to_string(n);
    if (a.code == 0) return "k" + lvl;
    if (a.code == 1) return "l" + lvl;
    return (a.code % 2 ? "-" : "") + std::to_string(a.code / 2) + "_" + lvl;
  }

 private:
  unsigned n_max_;
};

std::uint64_t value(const Element& e, std::span<const std::uint64_t> ys) {
  return e.fn ? (*e.fn)(ys) : static_cast<std::uint64_t>(e.code);
}

Element nat(std::uint64_t v) { return {static_cast<std::int64_t>(v), nullptr}; }

Element fun(unsigned arity, std::function<std::uint64_t(std::span<const std::uint64_t>)> f) {
  return {0, std::make_shared<const NatFunction>(NatFunction{arity, std::move(f)})};
}

/// Pointwise lift of a map on N to M_p.
Element pointwise(const Element& a, unsigned p, std::uint64_t (*g)(std::uint64_t)) {
  if (p == 0) return nat(g(static_cast<std::uint64_t>(a.code)));
  return fun(p, [a, g](std::span<const std::uint64_t> ys) { return g(value(a, ys)); });
}

class DeltaIfs final : public Ifs {
 public:
  explicit DeltaIfs(std::size_t budget) : budget_(std::max<std::size_t>(budget, 1)) {}

  std::string name() const override { return "delta"; }
  Element proj(unsigned i, unsigned n) const override {
    if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "projection " + std::to_string(i) + "_" + std::to_string(n));
    return fun(n, [i](std::span<const std::uint64_t> ys) { return ys[i - 1]; });
  }
  Element box(const Element& a, unsigned n, unsigned p, std::span<const Element> b) const override {
    if (n == 0) {
      if (p == 0) return a;
      std::uint64_t c = static_cast<std::uint64_t>(a.code);
      return fun(p, [c](std::span<const std::uint64_t>) { return c; });
    }
    Elements bs(b.begin(), b.end());
    if (p == 0) {
      std::vector<std::uint64_t> xs;
      for (const Element& e : bs) xs.push_back(static_cast<std::uint64_t>(e.code));
      return nat((*a.fn)(xs));
    }
    return fun(p, [a, bs](std::span<const std::uint64_t> ys) {
      std::vector<std::uint64_t> xs;
      xs.reserve(bs.size());
      for (const Element& e : bs) xs.push_back(value(e, ys));
      return (*a.fn)(xs);
    });
  }
  bool equal(const Element& a, const Element& b, unsigned n) const override {
    if (n == 0) return a.code == b.code;
    const auto& pr = probes(n);
    for (std::size_t i = 0; i + n <= pr.size(); i += n) {
      std::span<const std::uint64_t> ys(pr.data() + i, n);
      if (value(a, ys) != value(b, ys)) return false;
    }
    return true;
  }
  bool exact_equality(unsigned n) const override { return n == 0; }
  std::optional<Elements> carrier(unsigned) const override { return std::nullopt; }
  Element sample(unsigned n, std::mt19937_64& rng) const override {
    if (n == 0) return nat(small(rng));
    auto f = random_expr(n, 3, rng);
    return fun(n, f);
  }
  std::string show(const Element& a, unsigned n) const override {
    if (n == 0) return std::to_string(static_cast<std::uint64_t>(a.code));
    std::string s = "fn" + std::to_string(n) + "[";
    for (std::uint64_t k = 0; k < 4; ++k) {
      std::vector<std::uint64_t> ys(n, k);
      s += (k ? " " : "") + std::to_string((*a.fn)(ys));
    }
    return s + " ...]";
  }

 private:
  using Fn = std::function<std::uint64_t(std::span<const std::uint64_t>)>;

  static std::uint64_t small(std::mt19937_64& rng) {
    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return rng();
    return std::uniform_int_distribution<std::uint64_t>(0, 64)(rng);
  }

  static Fn random_expr(unsigned n, int depth, std::mt19937_64& rng) {
    int pick = std::uniform_int_distribution<int>(0, depth > 0 ? 7 : 1)(rng);
    if (pick == 0) {
      std::uint64_t c = small(rng);
      return [c](std::span<const std::uint64_t>) { return c; };
    }
    if (pick == 1) {
      unsigned i = std::uniform_int_distribution<unsigned>(0, n - 1)(rng);
      return [i](std::span<const std::uint64_t> ys) { return ys[i]; };
    }
    Fn l = random_expr(n, depth - 1, rng);
    Fn r = random_expr(n, depth - 1, rng);
    switch (pick) {
      case 2: return [l, r](std::span<const std::uint64_t> ys) { return l(ys) + r(ys); };
      case 3: return [l, r](std::span<const std::uint64_t> ys) { return l(ys) * r(ys); };
      case 4: return [l](std::span<const std::uint64_t> ys) { return 2 * l(ys); };
      case 5: return [l](std::span<const std::uint64_t> ys) { return 2 * l(ys) + 1; };
      case 6: return [l](std::span<const std::uint64_t> ys) { return l(ys) / 2; };
      default: {
        Fn c = random_expr(n, depth - 1, rng);
        return [c, l, r](std::span<const std::uint64_t> ys) { return c(ys) % 2 ? l(ys) : r(ys); };
      }
    }
  }

  /// Probe tuples of length n, flattened.
  const std::vector<std::uint64_t>& probes(unsigned n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    std::vector<std::uint64_t> out;
    if (n == 1) {
      for (std::uint64_t x = 0; x < budget_; ++x) out.push_back(x);
    } else if (n == 2) {
      for (std::uint64_t x = 0; x <= 16; ++x)
        for (std::uint64_t y = 0; y <= 16; ++y) {
          out.push_back(x);
          out.push_back(y);
        }
    } else {
      std::mt19937_64 rng(0x5eed + n);
      for (std::size_t k = 0; k < budget_; ++k)
        for (unsigned i = 0; i < n; ++i) out.push_back(std::uniform_int_distribution<std::uint64_t>(0, 40)(rng));
    }
    return cache_.emplace(n, std::move(out)).first->second;
  }

  std::size_t budget_;
  mutable std::mutex mu_;
  mutable std::map<unsigned, std::vector<std::uint64_t>> cache_;
};

// M_n as tables over A^n, A = {0..m-1}; code = sum entry_j * m^j where the
// tuple (a1..an) has index sum a_i * m^(i-1).
class FullFunctionIfs final : public Ifs {
 public:
  explicit FullFunctionIfs(unsigned m) : m_(m) {
    if (m == 0) throw Error(ErrorCode::InvalidSignature, "full function structure needs a non-empty base set");
  }

  std::string name() const override { return "fullfn:" + std::to_string(m_); }
  Element proj(unsigned i, unsigned n) const override {
    if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "projection " + std::to_string(i) + "_" + std::to_string(n));
    std::vector<unsigned> table(rows(n));
    for (std::size_t r = 0; r < table.size(); ++r) table[r] = unpack_row(r, n)[i - 1];
    return pack(table);
  }
  Element box(const Element& a, unsigned n, unsigned p, std::span<const Element> b) const override {
    std::vector<unsigned> table(rows(p));
    std::vector<unsigned> xs(n);
    for (std::size_t r = 0; r < table.size(); ++r) {
      for (unsigned i = 0; i < n; ++i) xs[i] = entry(b[i], r);
      table[r] = entry(a, row_index(xs));
    }
    return pack(table);
  }
  bool equal(const Element& a, const Element& b, unsigned n) const override {
    if (!a.fn && !b.fn) return a.code == b.code;
    for (std::size_t r = 0; r < rows(n); ++r)
      if (entry(a, r) != entry(b, r)) return false;
    return true;
  }
  bool exact_equality(unsigned) const override { return true; }
  std::optional<Elements> carrier(unsigned n) const override {
    auto size = carrier_size(n);
    if (!size || *size > (1u << 20)) return std::nullopt;
    Elements out;
    for (std::int64_t c = 0; c < *size; ++c) out.push_back({c, nullptr});
    return out;
  }
  Element sample(unsigned n, std::mt19937_64& rng) const override {
    std::vector<unsigned> table(rows(n));
    for (auto& e : table) e = std::uniform_int_distribution<unsigned>(0, m_ - 1)(rng);
    return pack(table);
  }
  std::string show(const Element& a, unsigned n) const override {
    if (n == 0) return std::to_string(a.code);
    std::string s = "[";
    for (std::size_t r = 0; r < rows(n); ++r) s += (r ? " " : "") + std::to_string(entry(a, r));
    return s + "]";
  }

  unsigned size() const { return m_; }
  std::size_t rows(unsigned n) const {
    std::size_t r = 1;
    for (unsigned i = 0; i < n; ++i) r *= m_;
    return r;
  }
  unsigned entry(const Element& a, std::size_t row) const {
    if (a.fn) {
      const auto xs = unpack_row(row, a.fn->arity);
      std::vector<std::uint64_t> ys(xs.begin(), xs.end());
      return static_cast<unsigned>((*a.fn)(ys));
    }
    std::int64_t c = a.code;
    for (std::size_t i = 0; i < row; ++i) c /= m_;
    return static_cast<unsigned>(c % m_);
  }
  std::vector<unsigned> unpack_row(std::size_t r, unsigned n) const {
    std::vector<unsigned> xs(n);
    for (unsigned i = 0; i < n; ++i) {
      xs[i] = static_cast<unsigned>(r % m_);
      r /= m_;
    }
    return xs;
  }
  std::size_t row_index(const std::vector<unsigned>& xs) const {
    std::size_t r = 0;
    for (std::size_t i = xs.size(); i-- > 0;) r = r * m_ + xs[i];
    return r;
  }
  // Tables past 63 bits are kept as a lookup function instead of a code.
  Element pack(const std::vector<unsigned>& table) const {
    const unsigned n = level_of(table.size());
    if (carrier_size(n)) return {encode(table), nullptr};
    auto t = std::make_shared<const std::vector<unsigned>>(table);
    const unsigned m = m_;
    auto f = std::make_shared<NatFunction>();
    f->arity = n;
    f->fn = [t, m](std::span<const std::uint64_t> xs) -> std::uint64_t {
      std::size_t r = 0;
      for (std::size_t i = xs.size(); i-- > 0;) r = r * m + static_cast<std::size_t>(xs[i]);
      return (*t)[r];
    };
    return {-1, std::move(f)};
  }
  std::int64_t encode(const std::vector<unsigned>& table) const {
    if (!carrier_size(level_of(table.size())))
      throw Error(ErrorCode::IndexOutOfRange, "table too large to encode");
    std::int64_t c = 0;
    for (std::size_t r = table.size(); r-- > 0;) c = c * m_ + table[r];
    return c;
  }

 private:
  unsigned level_of(std::size_t rows_) const {
    unsigned n = 0;
    std::size_t r = 1;
    while (r < rows_) {
      r *= m_;
      ++n;
    }
    return n;
  }
  std::optional<std::int64_t> carrier_size(unsigned n) const {
    const std::size_t r = rows(n);
    std::int64_t s = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (s > (std::int64_t{1} << 62) / m_) return std::nullopt;
      s *= m_;
    }
    return s;
  }

  unsigned m_;
};

}  // namespace

Element ext_negate(const Element& a) {
  if (a.code < 2) return a;
  return {a.code ^ 1, nullptr};
}

BindingModel ext_counter_model(unsigned n_max) {
  BindingModel m;
  m.name = "ext";
  m.ifs = std::make_shared<ExtIfs>(n_max);
  m.sig.add_function("f", {0});
  m.sig.add_function("Lambda", {1});
  m.sig.add_predicate("=", {0, 0});
  m.fhat["f"] = [](unsigned, std::span<const Element> a) { return ext_negate(a[0]); };
  m.fhat["Lambda"] = [](unsigned, std::span<const Element> a) {
    return a[0].code < 2 ? a[0] : Element{a[0].code - 2, nullptr};
  };
  m.phat["="] = [](std::span<const Element> a) { return a[0].code == a[1].code; };
  return m;
}

BindingModel delta_model(std::size_t probe_budget, DeltaCoding coding) {
  BindingModel m;
  const bool offset = coding == DeltaCoding::Offset;
  m.name = offset ? "delta" : "delta-doubling";
  auto ifs = std::make_shared<DeltaIfs>(probe_budget);
  m.ifs = ifs;
  m.sig.add_function("a", {});
  m.sig.add_function("i", {0});
  m.sig.add_function("j", {0});
  m.sig.add_function("delta", {0, 1, 1});
  m.sig.add_predicate("=", {0, 0});
  m.fhat["a"] = [ifs](unsigned p, std::span<const Element>) { return ifs->box(nat(1), 0, p, {}); };
  if (offset) {
    m.fhat["i"] = [](unsigned p, std::span<const Element> a) {
      return pointwise(a[0], p, [](std::uint64_t x) { return 2 * x + 2; });
    };
    m.fhat["j"] = [](unsigned p, std::span<const Element> a) {
      return pointwise(a[0], p, [](std::uint64_t x) { return 2 * x + 3; });
    };
  } else {
    m.fhat["i"] = [](unsigned p, std::span<const Element> a) {
      return pointwise(a[0], p, [](std::uint64_t x) { return 2 * x; });
    };
    m.fhat["j"] = [](unsigned p, std::span<const Element> a) {
      return pointwise(a[0], p, [](std::uint64_t x) { return 2 * x + 1; });
    };
  }
  const std::uint64_t shift = offset ? 2 : 0;
  m.fhat["delta"] = [shift](unsigned p, std::span<const Element> a) {
    Element d = a[0], f = a[1], g = a[2];
    auto pick = [d, f, g, shift](std::span<const std::uint64_t> ys) -> std::uint64_t {
      std::uint64_t dv = value(d, ys);
      if (dv < 2) return 0;
      std::vector<std::uint64_t> xs{(dv - shift) / 2};
      xs.insert(xs.end(), ys.begin(), ys.end());
      return (*(dv % 2 ? g : f).fn)(xs);
    };
    if (p == 0) return nat(pick({}));
    return fun(p, pick);
  };
  m.phat["="] = [](std::span<const Element> a) { return a[0].code == a[1].code; };
  for (std::uint64_t x = 0; x <= 256; ++x) m.samples0.push_back(nat(x));
  return m;
}

std::shared_ptr<const Ifs> full_function_ifs(unsigned size) { return std::make_shared<FullFunctionIfs>(size); }

BindingModel full_function_model(unsigned size) {
  BindingModel m;
  m.name = "fullfn:" + std::to_string(size);
  auto ifs = std::make_shared<FullFunctionIfs>(size);
  m.ifs = ifs;
  m.sig.add_function("f", {0});
  m.sig.add_function("Lambda", {1});
  m.sig.add_predicate("=", {0, 0});
  m.fhat["f"] = [ifs](unsigned p, std::span<const Element> a) {
    std::vector<unsigned> table(ifs->rows(p));
    for (std::size_t r = 0; r < table.size(); ++r) table[r] = (ifs->entry(a[0], r) + 1) % ifs->size();
    return ifs->pack(table);
  };
  m.fhat["Lambda"] = [ifs](unsigned p, std::span<const Element> a) {
    std::vector<unsigned> table(ifs->rows(p));
    for (std::size_t r = 0; r < table.size(); ++r) table[r] = ifs->entry(a[0], r * ifs->size());
    return ifs->pack(table);
  };
  m.phat["="] = [](std::span<const Element> a) { return a[0].code == a[1].code; };
  return m;
}

}  // namespace bindlog

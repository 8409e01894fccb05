#include "bindlog/table_model.hpp"

#include <map>
#include <sstream>

#include "bindlog/syntax_io.hpp"

namespace bindlog {

namespace {

[[noreturn]] void incomplete(const std::string& what) { throw Error(ErrorCode::ModelTableIncomplete, what); }

struct Tables {
  unsigned levels = 0;
  std::vector<std::vector<std::string>> tags;
  std::vector<std::map<std::string, int, std::less<>>> index;
  std::vector<std::vector<int>> proj;  // proj[n][i-1]
  std::map<std::pair<unsigned, unsigned>, std::vector<int>> box;
  std::map<std::string, std::vector<std::vector<int>>, std::less<>> fun;  // fun[f][p]
  std::map<std::string, std::vector<int>, std::less<>> pred;

  std::size_t size(unsigned n) const { return tags[n].size(); }

  std::size_t box_slot(unsigned n, unsigned p, std::int64_t a, std::span<const Element> b) const {
    std::size_t k = 0;
    for (std::size_t i = b.size(); i-- > 0;) k = k * size(p) + static_cast<std::size_t>(b[i].code);
    return k * size(n) + static_cast<std::size_t>(a);
  }
  /// Mixed-radix position of args with the i-th digit in M_{levels[i]}.
  std::size_t slot(const std::vector<unsigned>& lv, std::span<const Element> args) const {
    std::size_t k = 0;
    for (std::size_t i = args.size(); i-- > 0;) k = k * size(lv[i]) + static_cast<std::size_t>(args[i].code);
    return k;
  }
  std::size_t slots(const std::vector<unsigned>& lv) const {
    std::size_t k = 1;
    for (unsigned l : lv) k *= size(l);
    return k;
  }
};

class TableIfs final : public Ifs {
 public:
  TableIfs(std::string name, std::shared_ptr<const Tables> t) : name_(std::move(name)), t_(std::move(t)) {}

  std::string name() const override { return name_; }
  Element proj(unsigned i, unsigned n) const override {
    check(n);
    if (i < 1 || i > n) throw Error(ErrorCode::IndexOutOfRange, "projection " + std::to_string(i) + "_" + std::to_string(n));
    return {t_->proj[n][i - 1], nullptr};
  }
  Element box(const Element& a, unsigned n, unsigned p, std::span<const Element> b) const override {
    check(n);
    check(p);
    return {t_->box.at({n, p})[t_->box_slot(n, p, a.code, b)], nullptr};
  }
  bool equal(const Element& a, const Element& b, unsigned) const override { return a.code == b.code; }
  bool exact_equality(unsigned) const override { return true; }
  std::optional<Elements> carrier(unsigned n) const override {
    if (n > t_->levels) return std::nullopt;
    Elements out;
    for (std::size_t c = 0; c < t_->size(n); ++c) out.push_back({static_cast<std::int64_t>(c), nullptr});
    return out;
  }
  std::optional<unsigned> max_level() const override { return t_->levels; }
  std::string show(const Element& a, unsigned n) const override {
    check(n);
    return t_->tags[n].at(static_cast<std::size_t>(a.code));
  }

 private:
  void check(unsigned n) const {
    if (n > t_->levels) incomplete(name_ + " has no table for level " + std::to_string(n));
  }

  std::string name_;
  std::shared_ptr<const Tables> t_;
};

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

class TableParser {
 public:
  BindingModel run(std::string_view text) {
    std::string sig_text;
    std::vector<std::pair<int, std::vector<std::string>>> entries;
    std::istringstream in{std::string(text)};
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      auto w = words(line);
      if (w.empty()) continue;
      if (w[0] == "model") {
        if (w.size() != 2) fail(lineno, "expected 'model <name>'");
        name_ = w[1];
      } else if ((w[0] == "fun" || w[0] == "pred") && w.size() > 2 && w[2] == ":") {
        sig_text += line + "\n";
      } else if (w[0] == "levels") {
        if (w.size() != 2) fail(lineno, "expected 'levels <N>'");
        t_->levels = number(w[1], lineno);
        t_->tags.resize(t_->levels + 1);
        t_->index.resize(t_->levels + 1);
      } else {
        entries.emplace_back(lineno, std::move(w));
      }
    }
    if (t_->tags.empty()) throw Error(ErrorCode::ParseError, "model table lacks 'levels'");
    sig_ = parse_signature(sig_text);
    for (auto& [ln, w] : entries)
      if (w[0] == "carrier") carrier(w, ln);
    for (unsigned n = 0; n <= t_->levels; ++n)
      if (t_->tags[n].empty() && n > 0) incomplete("no carrier for level " + std::to_string(n));
    allocate();
    for (auto& [ln, w] : entries) {
      if (w[0] == "carrier") continue;
      if (w[0] == "proj") proj(w, ln);
      else if (w[0] == "box") box(w, ln);
      else if (w[0] == "fun") fun(w, ln);
      else if (w[0] == "pred") pred(w, ln);
      else fail(ln, "unknown entry '" + w[0] + "'");
    }
    verify();
    return build();
  }

 private:
  [[noreturn]] static void fail(int line, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
  }
  static unsigned number(const std::string& s, int line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail(line, "expected a number, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
  }
  unsigned level(const std::string& s, int line) const {
    unsigned n = number(s, line);
    if (n > t_->levels) fail(line, "level " + s + " exceeds 'levels'");
    return n;
  }
  Element tag(const std::string& s, unsigned n, int line) const {
    auto it = t_->index[n].find(s);
    if (it == t_->index[n].end()) fail(line, "'" + s + "' is not an element of M_" + std::to_string(n));
    return {it->second, nullptr};
  }
  /// Splits "... = r" and checks the count of tokens before '='.
  static const std::string& result(const std::vector<std::string>& w, std::size_t before, int line) {
    if (w.size() != before + 2 || w[before] != "=") fail(line, "malformed '" + w[0] + "' entry");
    return w.back();
  }

  void carrier(const std::vector<std::string>& w, int line) {
    if (w.size() < 2) fail(line, "expected 'carrier <n> tags...'");
    unsigned n = level(w[1], line);
    if (!t_->tags[n].empty()) fail(line, "carrier " + w[1] + " given twice");
    for (std::size_t i = 2; i < w.size(); ++i) {
      if (!t_->index[n].emplace(w[i], static_cast<int>(t_->tags[n].size())).second) fail(line, "duplicate tag " + w[i]);
      t_->tags[n].push_back(w[i]);
    }
  }

  std::vector<unsigned> fun_levels(const BindingArity& ar, unsigned p) const {
    std::vector<unsigned> lv;
    for (unsigned k : ar) lv.push_back(p + k);
    return lv;
  }
  unsigned max_k(const BindingArity& ar) const {
    unsigned k = 0;
    for (unsigned x : ar) k = std::max(k, x);
    return k;
  }

  void allocate() {
    const unsigned N = t_->levels;
    for (unsigned n = 0; n <= N; ++n) t_->proj.emplace_back(n, -1);
    for (unsigned n = 0; n <= N; ++n)
      for (unsigned p = 0; p <= N; ++p) {
        std::vector<unsigned> lv(n, p);
        t_->box[{n, p}].assign(t_->size(n) * t_->slots(lv), -1);
      }
    for (const auto& [f, ar] : sig_.functions()) {
      auto& fam = t_->fun[f];
      for (unsigned p = 0; p + max_k(ar) <= N; ++p) fam.emplace_back(t_->slots(fun_levels(ar, p)), -1);
    }
    for (const auto& [P, ar] : sig_.predicates()) {
      if (max_k(ar) > N) incomplete("predicate " + P + " needs level " + std::to_string(max_k(ar)));
      t_->pred[P].assign(t_->slots(fun_levels(ar, 0)), -1);
    }
  }

  void set(int& slot, int value, int line) {
    if (slot != -1 && slot != value) fail(line, "conflicting entry");
    slot = value;
  }

  void proj(const std::vector<std::string>& w, int line) {
    const std::string& r = result(w, 3, line);
    unsigned i = number(w[1], line), n = level(w[2], line);
    if (i < 1 || i > n) fail(line, "projection index out of range");
    set(t_->proj[n][i - 1], static_cast<int>(tag(r, n, line).code), line);
  }

  void box(const std::vector<std::string>& w, int line) {
    if (w.size() < 4) fail(line, "malformed 'box' entry");
    unsigned n = level(w[1], line), p = level(w[2], line);
    const std::string& r = result(w, 4 + n, line);
    Element a = tag(w[3], n, line);
    Elements b;
    for (unsigned i = 0; i < n; ++i) b.push_back(tag(w[4 + i], p, line));
    set(t_->box[{n, p}][t_->box_slot(n, p, a.code, b)], static_cast<int>(tag(r, p, line).code), line);
  }

  void fun(const std::vector<std::string>& w, int line) {
    if (w.size() < 3) fail(line, "malformed 'fun' entry");
    const BindingArity* ar = sig_.function(w[1]);
    if (!ar) fail(line, "undeclared function symbol " + w[1]);
    unsigned p = level(w[2], line);
    if (p + max_k(*ar) > t_->levels) fail(line, "level too high for " + w[1]);
    const std::string& r = result(w, 3 + ar->size(), line);
    auto lv = fun_levels(*ar, p);
    Elements args;
    for (std::size_t i = 0; i < ar->size(); ++i) args.push_back(tag(w[3 + i], lv[i], line));
    set(t_->fun[w[1]][p][t_->slot(lv, args)], static_cast<int>(tag(r, p, line).code), line);
  }

  void pred(const std::vector<std::string>& w, int line) {
    if (w.size() < 2) fail(line, "malformed 'pred' entry");
    const BindingArity* ar = sig_.predicate(w[1]);
    if (!ar) fail(line, "undeclared predicate " + w[1]);
    const std::string& r = result(w, 2 + ar->size(), line);
    if (r != "0" && r != "1") fail(line, "predicate values are 0 or 1");
    auto lv = fun_levels(*ar, 0);
    Elements args;
    for (std::size_t i = 0; i < ar->size(); ++i) args.push_back(tag(w[2 + i], lv[i], line));
    set(t_->pred[w[1]][t_->slot(lv, args)], r == "1", line);
  }

  void verify() const {
    for (unsigned n = 0; n <= t_->levels; ++n)
      for (unsigned i = 0; i < n; ++i)
        if (t_->proj[n][i] < 0) incomplete("missing proj " + std::to_string(i + 1) + " " + std::to_string(n));
    for (const auto& [np, v] : t_->box)
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] < 0)
          incomplete("missing box entry " + std::to_string(np.first) + " " + std::to_string(np.second) +
                     " (slot " + std::to_string(k) + ")");
    for (const auto& [f, fam] : t_->fun)
      for (std::size_t p = 0; p < fam.size(); ++p)
        for (int v : fam[p])
          if (v < 0) incomplete("missing fun entry for " + f + " at level " + std::to_string(p));
    for (const auto& [P, v] : t_->pred)
      for (int x : v)
        if (x < 0) incomplete("missing pred entry for " + P);
  }

  BindingModel build() {
    BindingModel m;
    m.name = name_;
    m.sig = sig_;
    std::shared_ptr<const Tables> t = t_;
    m.ifs = std::make_shared<TableIfs>(name_, t);
    for (const auto& [f, ar] : sig_.functions()) {
      BindingArity a = ar;
      std::string fn = f;
      m.fhat[f] = [t, a, fn](unsigned p, std::span<const Element> args) -> Element {
        const auto& fam = t->fun.at(fn);
        if (p >= fam.size()) incomplete("no table for " + fn + " at level " + std::to_string(p));
        std::vector<unsigned> lv;
        for (unsigned k : a) lv.push_back(p + k);
        return {fam[p][t->slot(lv, args)], nullptr};
      };
    }
    for (const auto& [P, ar] : sig_.predicates()) {
      BindingArity a = ar;
      std::string pn = P;
      m.phat[P] = [t, a, pn](std::span<const Element> args) {
        return t->pred.at(pn)[t->slot(std::vector<unsigned>(a.begin(), a.end()), args)] == 1;
      };
    }
    return m;
  }

  std::string name_ = "table";
  Signature sig_;
  std::shared_ptr<Tables> t_ = std::make_shared<Tables>();
};

/// Whitespace-free, per-level unique tags for a carrier.
std::vector<std::string> tags_for(const BindingModel& m, const Elements& c, unsigned n) {
  std::vector<std::string> out;
  std::map<std::string, int> seen;
  bool clean = true;
  for (const Element& e : c) {
    std::string s = m.ifs->show(e, n);
    if (s.empty() || s.find_first_of(" \t#=") != std::string::npos || seen[s]++) clean = false;
    out.push_back(s);
  }
  if (!clean)
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = "e" + std::to_string(c[i].code);
  return out;
}

}  // namespace

BindingModel parse_model_table(std::string_view text) { return TableParser().run(text); }

BindingModel load_model_table(const std::string& path) {
  try {
    return parse_model_table(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail(), e.path());
  }
}

std::string dump_model_table(const BindingModel& m, unsigned levels) {
  const Ifs& ifs = *m.ifs;
  std::vector<Elements> car;
  std::vector<std::vector<std::string>> tags;
  for (unsigned n = 0; n <= levels; ++n) {
    auto c = ifs.carrier(n);
    if (!c) throw Error(ErrorCode::InfiniteDomainExhaustionRequested, m.name + ": M_" + std::to_string(n) + " is not enumerable");
    tags.push_back(tags_for(m, *c, n));
    car.push_back(std::move(*c));
  }
  auto tag_of = [&](const Element& e, unsigned n) -> const std::string& {
    for (std::size_t i = 0; i < car[n].size(); ++i)
      if (ifs.equal(car[n][i], e, n)) return tags[n][i];
    throw Error(ErrorCode::ModelTableIncomplete, "value outside the enumerated carrier of level " + std::to_string(n));
  };
  std::ostringstream os;
  std::string name = m.name;
  for (char& c : name)
    if (c == ' ' || c == '\t') c = '_';
  os << "model " << name << '\n';
  std::string sig = print(m.sig);
  os << sig << (sig.empty() || sig.back() == '\n' ? "" : "\n");
  os << "levels " << levels << '\n';
  for (unsigned n = 0; n <= levels; ++n) {
    os << "carrier " << n;
    for (const auto& t : tags[n]) os << ' ' << t;
    os << '\n';
  }
  for (unsigned n = 1; n <= levels; ++n)
    for (unsigned i = 1; i <= n; ++i) os << "proj " << i << ' ' << n << " = " << tag_of(ifs.proj(i, n), n) << '\n';
  // Odometer over index vectors with digit i below radix[i].
  auto each = [](const std::vector<std::size_t>& radix, const std::function<void(const std::vector<std::size_t>&)>& f) {
    for (std::size_t r : radix)
      if (r == 0) return;
    std::vector<std::size_t> idx(radix.size(), 0);
    for (;;) {
      f(idx);
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == radix[i]) idx[i++] = 0;
      if (i == idx.size()) return;
    }
  };
  for (unsigned n = 0; n <= levels; ++n)
    for (unsigned p = 0; p <= levels; ++p) {
      std::vector<std::size_t> radix{car[n].size()};
      radix.insert(radix.end(), n, car[p].size());
      each(radix, [&](const std::vector<std::size_t>& idx) {
        Elements b;
        for (unsigned i = 0; i < n; ++i) b.push_back(car[p][idx[1 + i]]);
        os << "box " << n << ' ' << p << ' ' << tags[n][idx[0]];
        for (unsigned i = 0; i < n; ++i) os << ' ' << tags[p][idx[1 + i]];
        os << " = " << tag_of(ifs.box(car[n][idx[0]], n, p, b), p) << '\n';
      });
    }
  for (const auto& [f, ar] : m.sig.functions()) {
    unsigned mk = 0;
    for (unsigned k : ar) mk = std::max(mk, k);
    for (unsigned p = 0; p + mk <= levels; ++p) {
      std::vector<std::size_t> radix;
      for (unsigned k : ar) radix.push_back(car[p + k].size());
      each(radix, [&](const std::vector<std::size_t>& idx) {
        Elements args;
        for (std::size_t i = 0; i < ar.size(); ++i) args.push_back(car[p + ar[i]][idx[i]]);
        os << "fun " << f << ' ' << p;
        for (std::size_t i = 0; i < ar.size(); ++i) os << ' ' << tags[p + ar[i]][idx[i]];
        os << " = " << tag_of(m.fhat.at(f)(p, args), p) << '\n';
      });
    }
  }
  for (const auto& [P, ar] : m.sig.predicates()) {
    std::vector<std::size_t> radix;
    for (unsigned k : ar) {
      if (k > levels) throw Error(ErrorCode::ModelTableIncomplete, "predicate " + P + " needs level " + std::to_string(k));
      radix.push_back(car[k].size());
    }
    each(radix, [&](const std::vector<std::size_t>& idx) {
      Elements args;
      for (std::size_t i = 0; i < ar.size(); ++i) args.push_back(car[ar[i]][idx[i]]);
      os << "pred " << P;
      for (std::size_t i = 0; i < ar.size(); ++i) os << ' ' << tags[ar[i]][idx[i]];
      os << " = " << (m.phat.at(P)(args) ? 1 : 0) << '\n';
    });
  }
  return os.str();
}

}  // namespace bindlog

#include "fbk/hilden.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

#include "fbk/error.hpp"
#include "fbk/garside.hpp"
#include "fbk/plat.hpp"

namespace fbk {

namespace {

BraidWord sigmas(int strands, std::initializer_list<std::pair<int, int>> letters) {
  BraidWord w(strands);
  for (auto [i, e] : letters) w.push_back(Letter::sigma(i, e));
  return w;
}

void check_range(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " outside " +
                          std::to_string(lo) + ".." + std::to_string(hi));
  }
}

// P_i = s_{2i} s_{2i-1} s_{2i+1}^{-1} s_{2i}^{-1}, S_i = s_{2i} s_{2i-1} s_{2i+1} s_{2i}.
BraidWord exchange_word(int i, int n, int middle_sign) {
  return sigmas(2 * n, {{2 * i, 1}, {2 * i - 1, 1}, {2 * i + 1, middle_sign}, {2 * i, middle_sign}});
}

// ---------------------------------------------------------------------------
// Relation templates. A side is a space separated list of tokens
// "sym_{e}" / "sym_{e,e}" with optional "^-1"; e is a variable among i, j, k, l
// with an optional +d / -d offset.

using Assignment = std::array<int, 4>;
using Predicate = std::function<bool(const Assignment&)>;

struct Schema {
  std::string lhs;
  std::string rhs;
  Predicate when;
  std::string note;
};

struct IndexExpr {
  int var = 0;
  int offset = 0;
};

struct Token {
  std::string symbol;
  std::vector<IndexExpr> indices;
  int exponent = 1;
};

int var_slot(char c) {
  switch (c) {
    case 'i': return 0;
    case 'j': return 1;
    case 'k': return 2;
    case 'l': return 3;
    default: throw InternalError(std::string("bad template variable ") + c);
  }
}

std::vector<Token> parse_side(const std::string& text) {
  std::vector<Token> out;
  std::istringstream in(text);
  std::string raw;
  while (in >> raw) {
    Token t;
    const auto us = raw.find("_{");
    const auto close = raw.find('}', us);
    if (us == std::string::npos || close == std::string::npos) {
      throw InternalError("malformed relation token " + raw);
    }
    t.symbol = raw.substr(0, us);
    std::string inside = raw.substr(us + 2, close - us - 2);
    std::stringstream parts(inside);
    std::string part;
    while (std::getline(parts, part, ',')) {
      IndexExpr e;
      e.var = var_slot(part.at(0));
      if (part.size() > 1) e.offset = std::stoi(part.substr(1));
      t.indices.push_back(e);
    }
    const std::string rest = raw.substr(close + 1);
    if (rest == "^-1") {
      t.exponent = -1;
    } else if (!rest.empty()) {
      throw InternalError("malformed relation token " + raw);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::set<int> used_vars(const std::vector<Token>& a, const std::vector<Token>& b) {
  std::set<int> vars;
  for (const auto* side : {&a, &b}) {
    for (const auto& t : *side) {
      for (const auto& e : t.indices) vars.insert(e.var);
    }
  }
  return vars;
}

bool one_index_in_range(const std::string& symbol, int i, int n) {
  static const std::set<std::string> exchange{"P", "S", "p", "s"};
  const int hi = exchange.count(symbol) ? n - 1 : n;
  return i >= 1 && i <= hi;
}

// Instantiates a token; nullopt if an index falls outside the generator's
// range (the instance does not exist at this n).
std::optional<std::string> instantiate(const Token& t, const Assignment& a, int n) {
  std::vector<int> idx;
  for (const auto& e : t.indices) idx.push_back(a[static_cast<std::size_t>(e.var)] + e.offset);
  if (idx.size() == 1) {
    if (!one_index_in_range(t.symbol, idx[0], n)) return std::nullopt;
    return GeneratorDictionary::key(t.symbol, {idx[0]});
  }
  if (idx.size() == 2) {
    if (idx[0] == idx[1]) return std::nullopt;
    for (int v : idx) {
      if (v < 1 || v > n) return std::nullopt;
    }
    return GeneratorDictionary::key(t.symbol, {idx[0], idx[1]});
  }
  throw InternalError("generator tokens take one or two indices");
}

bool cyclic4(int a, int b, int c, int d) {
  return (a < b && b < c && c < d) || (b < c && c < d && d < a) || (c < d && d < a && a < b) ||
         (d < a && a < b && b < c);
}

int I(const Assignment& a) { return a[0]; }
int J(const Assignment& a) { return a[1]; }
int K(const Assignment& a) { return a[2]; }
int L(const Assignment& a) { return a[3]; }

Predicate always() {
  return [](const Assignment&) { return true; };
}

// Relations (1) over the given symbols for P, S, Theta.
std::vector<Schema> exchange_schemas(const std::string& P, const std::string& S,
                                     const std::string& T) {
  auto far = [](const Assignment& a) { return std::abs(I(a) - J(a)) > 1; };
  auto near = [](const Assignment& a) { return std::abs(I(a) - J(a)) == 1; };
  auto off_pair = [](const Assignment& a) { return J(a) != I(a) && J(a) != I(a) + 1; };
  auto pair = [](const Assignment& a) {
    return std::set<int>{I(a), I(a) + 1} == std::set<int>{J(a), K(a)} && J(a) != K(a);
  };
  auto g = [](const std::string& sym, const std::string& idx) { return sym + "_{" + idx + "}"; };

  std::vector<Schema> out;
  // The first five families are listed twice in the usual statement; both
  // copies are kept and collapse under deduplication.
  for (int copy = 0; copy < 2; ++copy) {
    out.push_back({g(P, "i") + " " + g(P, "j"), g(P, "j") + " " + g(P, "i"), far, ""});
    out.push_back({g(P, "i") + " " + g(P, "j") + " " + g(P, "i"),
                   g(P, "j") + " " + g(P, "i") + " " + g(P, "j"), near, ""});
    out.push_back({g(S, "i") + " " + g(S, "j"), g(S, "j") + " " + g(S, "i"), far, ""});
    out.push_back({g(S, "i") + " " + g(S, "j") + " " + g(S, "i"),
                   g(S, "j") + " " + g(S, "i") + " " + g(S, "j"), near, ""});
    out.push_back({g(P, "i") + " " + g(S, "j"), g(S, "j") + " " + g(P, "i"), far, ""});
  }
  out.push_back({g(P, "i") + " " + g(S, "i+1") + " " + g(S, "i"),
                 g(S, "i+1") + " " + g(S, "i") + " " + g(P, "i+1"), always(), ""});
  out.push_back({g(P, "i+1") + " " + g(P, "i") + " " + g(S, "i+1"),
                 g(S, "i") + " " + g(P, "i+1") + " " + g(P, "i"), always(), ""});
  out.push_back({g(P, "i+1") + " " + g(S, "i") + " " + g(S, "i+1"),
                 g(S, "i") + " " + g(S, "i+1") + " " + g(P, "i"), always(), ""});
  out.push_back({g(P, "i") + " " + g(T, "i") + " " + g(S, "i") + " " + g(P, "i"),
                 g(S, "i") + " " + g(T, "i"), always(), ""});
  out.push_back({g(P, "i") + " " + g(T, "j"), g(T, "j") + " " + g(P, "i"), off_pair, ""});
  out.push_back({g(P, "i") + " " + g(T, "i+1"), g(T, "i") + " " + g(P, "i"), always(),
                 "right side is Theta_i P_i; Theta_i P_{i+1} does not hold"});
  out.push_back({g(S, "i") + " " + g(T, "j"), g(T, "j") + " " + g(S, "i"), off_pair, ""});
  out.push_back({g(S, "i") + " " + g(T, "j"), g(T, "k") + " " + g(S, "i"), pair, ""});
  out.push_back({g(T, "i") + " " + g(T, "j"), g(T, "j") + " " + g(T, "i"), always(), ""});
  return out;
}

std::vector<Schema> framed_omega_schemas() {
  auto not_pair = [](const Assignment& a) { return I(a) != J(a) && I(a) != J(a) + 1; };
  auto differ = [](const Assignment& a) { return I(a) != J(a); };
  return {
      {"p_{j} omega_{j}", "omega_{j+1} p_{j}", always(), ""},
      {"p_{j} omega_{j+1}", "omega_{j} p_{j}", always(), ""},
      {"p_{j} omega_{i}", "omega_{i} p_{j}", not_pair, ""},
      {"s_{j} omega_{j}", "omega_{j+1} s_{j}", always(), ""},
      {"s_{j} omega_{j+1}", "omega_{j} s_{j}", always(), ""},
      {"s_{j} omega_{i}", "omega_{i} s_{j}", not_pair, ""},
      {"theta_{j} omega_{j}", "omega_{j}^-1 theta_{j}", always(), ""},
      {"theta_{j} omega_{i}", "omega_{i} theta_{j}", differ, ""},
      {"omega_{i} omega_{j}", "omega_{j} omega_{i}", always(), ""},
  };
}

std::vector<Schema> pure_schemas() {
  const std::array<std::string, 3> greek{"p", "x", "y"};
  auto two = [](const std::string& s, const std::string& a, const std::string& b) {
    return s + "_{" + a + "," + b + "}";
  };
  std::vector<Schema> out;
  auto ordered = [](const Assignment& a) { return I(a) < J(a); };
  out.push_back({"p_{i,j} g_{k}", "g_{k} p_{i,j}", ordered, ""});
  out.push_back({"g_{i} g_{j}", "g_{j} g_{i}", always(), ""});
  out.push_back({"x_{i,j} g_{k}", "g_{k} x_{i,j}",
                 [](const Assignment& a) { return I(a) < J(a) && K(a) != I(a); }, ""});
  out.push_back({"y_{i,j} g_{k}", "g_{k} y_{i,j}",
                 [](const Assignment& a) { return I(a) < J(a) && K(a) != J(a); }, ""});

  auto c4 = [](const Assignment& a) { return cyclic4(I(a), J(a), K(a), L(a)); };
  for (const auto& al : greek) {
    for (const auto& be : greek) {
      out.push_back({two(al, "i", "j") + " " + two(be, "k", "l"),
                     two(be, "k", "l") + " " + two(al, "i", "j"), c4, ""});
    }
  }

  // (alpha, beta, gamma) per ordering case of the cyclically ordered triple.
  struct Case {
    Predicate order;
    std::vector<std::string> triples;
  };
  const std::vector<Case> table{
      {[](const Assignment& a) { return I(a) < J(a) && J(a) < K(a); },
       {"ppp", "pyy", "xpp", "xxp", "xyy", "ypp", "ypx", "yyy"}},
      {[](const Assignment& a) { return J(a) < K(a) && K(a) < I(a); },
       {"ppp", "pxy", "xpp", "xpx", "xxy", "ypp", "yxy", "yyp"}},
      {[](const Assignment& a) { return K(a) < I(a) && I(a) < J(a); },
       {"ppp", "pxx", "xpp", "xxx", "xyp", "ypp", "ypy", "yxx"}},
  };
  for (const auto& c : table) {
    for (const auto& t : c.triples) {
      const std::string a(1, t[0]), b(1, t[1]), g(1, t[2]);
      out.push_back({two(a, "i", "j") + " " + two(b, "i", "k") + " " + two(g, "j", "k"),
                     two(b, "i", "k") + " " + two(g, "j", "k") + " " + two(a, "i", "j"), c.order,
                     ""});
    }
  }

  for (const auto& al : greek) {
    for (const auto& be : greek) {
      out.push_back({two(al, "i", "k") + " p_{j,k} " + two(be, "j", "l") + " p_{j,k}^-1",
                     "p_{j,k} " + two(be, "j", "l") + " p_{j,k}^-1 " + two(al, "i", "k"), c4,
                     "p_{j,k} enters as a conjugation of beta_{j,l}"});
    }
  }

  out.push_back({"x_{i,j} p_{i,j} g_{i}", "p_{i,j} g_{i} x_{i,j}", ordered, ""});
  out.push_back({"y_{i,j} p_{i,j} g_{i}", "p_{i,j} g_{i} y_{i,j}", ordered, ""});
  out.push_back({"omega_{i} omega_{j}", "omega_{j} omega_{i}", always(), ""});
  out.push_back({"omega_{i} p_{k,j}", "p_{k,j} omega_{i}", always(), ""});
  out.push_back({"omega_{i} x_{k,j}", "x_{k,j} omega_{i}", always(), ""});
  out.push_back({"omega_{i} y_{k,j}", "y_{k,j} omega_{i}", always(), ""});
  return out;
}

std::vector<Schema> schemas_for(RelationSuite suite) {
  switch (suite) {
    case RelationSuite::Hilden1:
      return exchange_schemas("P", "S", "Theta");
    case RelationSuite::FramedHilden: {
      auto out = exchange_schemas("p", "s", "theta");
      for (auto& s : framed_omega_schemas()) out.push_back(std::move(s));
      return out;
    }
    case RelationSuite::PureFramed:
      return pure_schemas();
  }
  throw InternalError("unknown relation suite");
}

std::string normal_form_key(const FramedBraid& b) {
  std::ostringstream os;
  for (auto v : b.lambda()) os << v << ',';
  const auto nf = to_normal_form(b.beta());
  os << '|' << nf.inf;
  for (const auto& f : nf.factors) {
    os << '|';
    for (int v : f.images()) os << v << ',';
  }
  return os.str();
}

std::string assignment_text(const std::set<int>& vars, const Assignment& a) {
  static constexpr std::array<char, 4> names{'i', 'j', 'k', 'l'};
  std::string out;
  for (int v : vars) {
    if (!out.empty()) out += ',';
    out += names[static_cast<std::size_t>(v)];
    out += '=' + std::to_string(a[static_cast<std::size_t>(v)]);
  }
  return out;
}

}  // namespace

FramedBraid hilden_generator(HildenGen name, int i, int n) {
  if (n < 1) throw InvalidArgument("half strand count must be >= 1");
  switch (name) {
    case HildenGen::P:
      check_range(i, 1, n - 1, "P");
      return normalize(exchange_word(i, n, -1));
    case HildenGen::S:
      check_range(i, 1, n - 1, "S");
      return normalize(exchange_word(i, n, 1));
    case HildenGen::Theta:
      check_range(i, 1, n, "Theta");
      return normalize(sigmas(2 * n, {{2 * i - 1, 1}}));
  }
  throw InvalidArgument("unknown Hilden generator");
}

FramedBraid framed_hilden_generator(FramedHildenGen name, int i, int n) {
  switch (name) {
    case FramedHildenGen::p:
      return hilden_generator(HildenGen::P, i, n);
    case FramedHildenGen::s:
      return hilden_generator(HildenGen::S, i, n);
    case FramedHildenGen::theta:
      check_range(i, 1, n, "theta");
      return normalize(BraidWord(2 * n, {Letter::tau(2 * i - 1), Letter::sigma(2 * i - 1)}));
    case FramedHildenGen::omega:
      check_range(i, 1, n, "omega");
      return normalize(BraidWord(2 * n, {Letter::tau(2 * i - 1), Letter::tau(2 * i, -1)}));
  }
  throw InvalidArgument("unknown framed Hilden generator");
}

FramedBraid pure_framed_generator(PureFramedGen name, int k, int n) {
  switch (name) {
    case PureFramedGen::g:
      check_range(k, 1, n, "g");
      return normalize(BraidWord(2 * n, {Letter::tau(2 * k - 1), Letter::tau(2 * k),
                                         Letter::sigma(2 * k - 1, 2)}));
    case PureFramedGen::omega:
      return framed_hilden_generator(FramedHildenGen::omega, k, n);
  }
  throw InvalidArgument("unknown pure framed generator");
}

std::string GeneratorDictionary::key(const std::string& symbol, std::initializer_list<int> indices) {
  std::vector<int> idx(indices);
  if (idx.size() == 2) std::sort(idx.begin(), idx.end());
  std::string out = symbol + "_";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(idx[k]);
  }
  return out;
}

GeneratorDictionary GeneratorDictionary::builtin(int n) {
  GeneratorDictionary d(n);
  for (int i = 1; i <= n - 1; ++i) {
    d.set(key("P", {i}), hilden_generator(HildenGen::P, i, n));
    d.set(key("S", {i}), hilden_generator(HildenGen::S, i, n));
    d.set(key("p", {i}), framed_hilden_generator(FramedHildenGen::p, i, n));
    d.set(key("s", {i}), framed_hilden_generator(FramedHildenGen::s, i, n));
  }
  for (int k = 1; k <= n; ++k) {
    d.set(key("Theta", {k}), hilden_generator(HildenGen::Theta, k, n));
    d.set(key("theta", {k}), framed_hilden_generator(FramedHildenGen::theta, k, n));
    d.set(key("omega", {k}), framed_hilden_generator(FramedHildenGen::omega, k, n));
    d.set(key("g", {k}), pure_framed_generator(PureFramedGen::g, k, n));
  }
  return d;
}

void GeneratorDictionary::set(const std::string& name, FramedBraid b) {
  if (b.strands() != 2 * n_) throw StrandMismatch(2 * n_, b.strands());
  entries_.insert_or_assign(name, std::move(b));
}

const FramedBraid* GeneratorDictionary::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string to_string(RelationSuite suite) {
  switch (suite) {
    case RelationSuite::Hilden1: return "hilden_1";
    case RelationSuite::FramedHilden: return "framed_hilden";
    case RelationSuite::PureFramed: return "pure_framed";
  }
  return "unknown";
}

std::optional<RelationSuite> relation_suite_from_string(const std::string& s) {
  for (auto suite : {RelationSuite::Hilden1, RelationSuite::FramedHilden, RelationSuite::PureFramed}) {
    if (to_string(suite) == s) return suite;
  }
  return std::nullopt;
}

std::vector<RelationReport> verify_relation_suite(const GeneratorDictionary& dict,
                                                  RelationSuite suite) {
  const int n = dict.n();
  std::vector<RelationReport> reports;
  std::set<std::string> seen;

  for (const auto& schema : schemas_for(suite)) {
    const auto lhs = parse_side(schema.lhs);
    const auto rhs = parse_side(schema.rhs);
    const auto vars = used_vars(lhs, rhs);
    const std::vector<int> var_list(vars.begin(), vars.end());

    Assignment a{1, 1, 1, 1};
    // Odometer over 1..n for every variable in use.
    while (true) {
      if (schema.when(a)) {
        std::vector<std::string> lhs_keys;
        std::vector<std::string> rhs_keys;
        bool exists = true;
        for (auto [side, keys] : {std::pair{&lhs, &lhs_keys}, std::pair{&rhs, &rhs_keys}}) {
          for (const auto& t : *side) {
            auto key = instantiate(t, a, n);
            if (!key) {
              exists = false;
              break;
            }
            keys->push_back(*key);
          }
        }
        if (exists) {
          RelationReport r;
          r.relation_id = schema.lhs + " = " + schema.rhs + " @ " + assignment_text(vars, a);
          r.note = schema.note;
          auto evaluate = [&](const std::vector<Token>& side, const std::vector<std::string>& keys) {
            FramedBraid acc = FramedBraid::identity(2 * n);
            for (std::size_t t = 0; t < side.size(); ++t) {
              const FramedBraid* g = dict.find(keys[t]);
              if (!g) {
                if (std::find(r.missing.begin(), r.missing.end(), keys[t]) == r.missing.end()) {
                  r.missing.push_back(keys[t]);
                }
                continue;
              }
              acc = multiply(acc, side[t].exponent > 0 ? *g : inverse(*g));
            }
            return acc;
          };
          FramedBraid l = evaluate(lhs, lhs_keys);
          FramedBraid rr = evaluate(rhs, rhs_keys);
          std::string dedupe;
          if (!r.missing.empty()) {
            r.skipped = true;
            std::string lk, rk;
            for (auto& k : lhs_keys) lk += k + ' ';
            for (auto& k : rhs_keys) rk += k + ' ';
            dedupe = "skip:" + std::min(lk, rk) + "=" + std::max(lk, rk);
          } else {
            const auto lk = normal_form_key(l);
            const auto rk = normal_form_key(rr);
            dedupe = std::min(lk, rk) + "=" + std::max(lk, rk);
            r.holds = lk == rk;
            r.lhs = std::move(l);
            r.rhs = std::move(rr);
          }
          if (seen.insert(dedupe).second) reports.push_back(std::move(r));
        }
      }
      std::size_t v = 0;
      for (; v < var_list.size(); ++v) {
        auto& slot = a[static_cast<std::size_t>(var_list[v])];
        if (++slot <= n) break;
        slot = 1;
      }
      if (v == var_list.size()) break;
    }
  }
  return reports;
}

bool plat_trivializes(const FramedBraid& h) {
  const auto sig = plat_signature(h);
  const auto n = static_cast<std::size_t>(h.strands() / 2);
  if (sig.component_count() != n) return false;
  for (const auto& c : sig.components) {
    if (c.framing != 0) return false;
  }
  for (const auto& row : sig.abs_linking) {
    for (auto v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

bool plat_trivializes_unframed(const BraidWord& h) {
  const FramedBraid b = normalize(h);
  const auto sig = plat_signature(b);
  if (sig.component_count() != static_cast<std::size_t>(h.strands() / 2)) return false;
  for (const auto& row : sig.abs_linking) {
    for (auto v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

}  // namespace fbk

#include "fiberfull/program.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "fiberfull/error.hpp"
#include "fiberfull/monomial_ideal.hpp"

namespace ffl {

bool OrderSpec::operator==(const OrderSpec& o) const {
  if (kind != o.kind || weights != o.weights) return false;
  if (!tiebreak || !o.tiebreak) return !tiebreak && !o.tiebreak;
  return *tiebreak == *o.tiebreak;
}

namespace {

const std::set<std::string> kCommands = {"gb",       "initial", "homogenize", "betti",   "localcoh", "decompose",
                                         "truncate", "saturate", "fiberfull", "compare", "thm35"};

class Parser {
 public:
  explicit Parser(const std::string& src) : s_(src) {}

  Program program() {
    Program p;
    while (true) {
      skip();
      if (at_end()) break;
      std::size_t start = pos_;
      std::string word = ident();
      if (word == "ring") {
        p.rings.push_back(ring_decl());
        for (std::size_t r = 0; r + 1 < p.rings.size(); ++r)
          if (p.rings[r].name == p.rings.back().name) error(start, "ring '" + p.rings.back().name + "' declared twice");
      } else if (word == "order") {
        if (p.rings.empty()) error(start, "order declared before any ring");
        if (!p.ideals.empty() && p.ideals.back().ring == p.rings.back().name)
          error(start, "the order must precede the ideals of its ring");
        if (p.rings.back().order) error(start, "ring '" + p.rings.back().name + "' already has an order");
        p.rings.back().order = order_decl();
      } else if (word == "ideal") {
        if (p.rings.empty()) error(start, "ideal declared before any ring");
        p.ideals.push_back(ideal_decl(p.rings.back()));
      } else if (kCommands.count(word)) {
        if (p.command) error(start, "more than one command");
        p.command = command(word, start);
      } else if (word.empty()) {
        error(start, std::string("unexpected character '") + s_[pos_] + "'");
      } else {
        error(start, "unknown statement '" + word + "'");
      }
      skip();
      if (!at_end()) expect(';');
    }
    for (std::size_t a = 0; a < p.ideals.size(); ++a)
      for (std::size_t b = a + 1; b < p.ideals.size(); ++b)
        if (p.ideals[a].name == p.ideals[b].name) fail_input("ideal '" + p.ideals[a].name + "' declared twice");
    return p;
  }

 private:
  [[noreturn]] void error(std::size_t at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail_input(std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void skip() {
    while (!at_end()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/')) {
        while (!at_end() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (peek() != c) error(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string ident() {
    skip();
    std::size_t b = pos_;
    if (!at_end() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    }
    return s_.substr(b, pos_ - b);
  }

  std::string need_ident(const char* what) {
    std::size_t at = pos_;
    std::string w = ident();
    if (w.empty()) error(at, std::string("expected ") + what);
    return w;
  }

  long integer() {
    skip();
    std::size_t b = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) error(b, "expected an integer");
    try {
      return std::stol(s_.substr(b, pos_ - b));
    } catch (const std::out_of_range&) {
      error(b, "integer out of range");
    }
  }

  std::vector<long> intlist() {
    std::vector<long> out;
    bool bracket = accept('[');
    out.push_back(integer());
    while (accept(',')) out.push_back(integer());
    if (bracket) expect(']');
    return out;
  }

  void keyword(const std::string& k) {
    std::size_t at = pos_;
    if (ident() != k) error(at, "expected '" + k + "'");
  }

  static std::pair<std::string, long> split_index(const std::string& v) {
    std::size_t k = v.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(v[k - 1]))) --k;
    if (k == v.size() || k == 0) return {v, -1};
    return {v.substr(0, k), std::stol(v.substr(k))};
  }

  RingDecl ring_decl() {
    RingDecl r;
    r.name = need_ident("a ring name");
    expect('=');
    skip();
    std::size_t fat = pos_;
    std::string f = ident();
    if (f == "Q" || f == "QQ") {
      r.field = "Q";
    } else if (f == "GF" || f == "ZZ") {
      long p;
      if (f == "GF") {
        expect('(');
        p = integer();
        expect(')');
      } else {
        expect('/');
        p = integer();
      }
      if (p < 2 || p >= (1L << 31)) error(fat, "characteristic out of range");
      try {
        Field::prime(static_cast<std::uint32_t>(p));
      } catch (const InputError& e) {
        error(fat, e.what());
      }
      r.field = "GF(" + std::to_string(p) + ")";
    } else {
      error(fat, "unknown field '" + f + "' (use Q or GF(p))");
    }
    expect('[');
    std::set<std::string> seen;
    do {
      skip();
      std::size_t at = pos_;
      std::string v = need_ident("a variable name");
      std::vector<std::string> expanded{v};
      skip();
      if (s_.compare(pos_, 2, "..") == 0) {
        pos_ += 2;
        std::string w = need_ident("a variable name after '..'");
        auto [pa, a] = split_index(v);
        auto [pb, b] = split_index(w);
        if (a < 0 || b < 0 || pa != pb || a > b) error(at, "bad variable range " + v + ".." + w);
        expanded.clear();
        for (long i = a; i <= b; ++i) expanded.push_back(pa + std::to_string(i));
      }
      for (auto& x : expanded) {
        if (x == "t") error(at, "'t' is reserved for the homogenizing variable");
        if (!seen.insert(x).second) error(at, "variable '" + x + "' declared twice");
        r.vars.push_back(x);
      }
    } while (accept(','));
    expect(']');
    skip();
    std::size_t save = pos_;
    if (ident() == "degrees") {
      expect('=');
      std::size_t at = pos_;
      r.degrees = intlist();
      if (r.degrees.size() != r.vars.size())
        error(at, "degrees list has " + std::to_string(r.degrees.size()) + " entries for " +
                      std::to_string(r.vars.size()) + " variables");
      for (long d : r.degrees)
        if (d < 1) error(at, "degrees must be positive");
    } else {
      pos_ = save;
    }
    return r;
  }

  OrderSpec order_spec() {
    skip();
    std::size_t at = pos_;
    std::string k = ident();
    OrderSpec o;
    if (k == "lex") {
      o.kind = OrderSpec::Kind::Lex;
    } else if (k == "grevlex") {
      o.kind = OrderSpec::Kind::Grevlex;
    } else if (k == "weight") {
      o.kind = OrderSpec::Kind::Weight;
      expect('(');
      expect('[');
      o.weights.push_back(integer());
      while (accept(',')) o.weights.push_back(integer());
      expect(']');
      expect(',');
      o.tiebreak = std::make_shared<OrderSpec>(order_spec());
      expect(')');
    } else {
      error(at, "unknown order '" + k + "' (use lex, grevlex or weight([..], order))");
    }
    return o;
  }

  OrderSpec order_decl() {
    expect('=');
    return order_spec();
  }

  IdealDecl ideal_decl(const RingDecl& ring) {
    IdealDecl d;
    d.name = need_ident("an ideal name");
    d.ring = ring.name;
    expect('=');
    skip();
    std::size_t save = pos_;
    if (ident() == "graph") {
      GraphSpec g;
      keyword("n");
      expect('=');
      g.n = integer();
      keyword("edges");
      expect('=');
      do {
        std::size_t at = pos_;
        long a = integer();
        expect('-');
        long b = integer();
        if (a < 1 || b < 1 || a > g.n || b > g.n) error(at, "edge vertex outside 1.." + std::to_string(g.n));
        if (a == b) error(at, "loop at vertex " + std::to_string(a));
        g.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
      } while (accept(','));
      std::set<std::string> vars(ring.vars.begin(), ring.vars.end());
      for (long i = 1; i <= g.n; ++i)
        for (char c : {'x', 'y'})
          if (!vars.count(c + std::to_string(i)))
            error(save, std::string("graph needs variable ") + c + std::to_string(i) + " in ring " + ring.name);
      d.graph = g;
      return d;
    }
    pos_ = save;
    RingPtr R = build_ring(ring);
    do {
      skip();
      std::size_t b = pos_;
      int depth = 0;
      while (!at_end()) {
        char c = s_[pos_];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == ';')) break;
        ++pos_;
      }
      std::string text = s_.substr(b, pos_ - b);
      while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
      if (text.empty()) error(b, "expected a polynomial");
      try {
        Polynomial f = parse_polynomial(text, R);
        d.generators.push_back(to_string(f));
      } catch (const InputError& e) {
        error(b, e.what());
      }
    } while (accept(','));
    return d;
  }

  CommandSpec command(const std::string& name, std::size_t start) {
    std::vector<std::string> words{name};
    while (true) {
      skip();
      if (at_end() || peek() == ';') break;
      std::size_t b = pos_;
      while (!at_end() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ';') ++pos_;
      words.push_back(s_.substr(b, pos_ - b));
    }
    try {
      return parse_command(words);
    } catch (const InputError& e) {
      error(start, e.what());
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

const std::map<std::string, bool> kFlags = {  // flag -> takes a value
    {"format", true}, {"field", true}, {"i", true},  {"j", true},          {"ideal", true},
    {"h", true},      {"N", true},     {"w", true},  {"definition", false}, {"mmax", true},
    {"no-timings", false}};

void print_order(std::ostream& os, const OrderSpec& o) {
  switch (o.kind) {
    case OrderSpec::Kind::Lex: os << "lex"; break;
    case OrderSpec::Kind::Grevlex: os << "grevlex"; break;
    case OrderSpec::Kind::Weight:
      os << "weight([";
      for (std::size_t i = 0; i < o.weights.size(); ++i) os << (i ? "," : "") << o.weights[i];
      os << "], ";
      print_order(os, *o.tiebreak);
      os << ")";
      break;
  }
}

}  // namespace

CommandSpec parse_command(const std::vector<std::string>& words) {
  if (words.empty()) fail_input("no command given");
  CommandSpec c;
  c.name = words[0];
  if (!kCommands.count(c.name)) fail_input("unknown command '" + c.name + "'");
  std::size_t k = 1;
  if (c.name == "compare") {
    if (words.size() < 2 || (words[1] != "betti" && words[1] != "localcoh"))
      fail_input("compare needs 'betti' or 'localcoh'");
    c.sub = words[1];
    k = 2;
  }
  for (; k < words.size(); ++k) {
    const std::string& w = words[k];
    if (w.rfind("--", 0) != 0) fail_input("unexpected argument '" + w + "'");
    std::string name = w.substr(2), value;
    auto eq = name.find('=');
    bool inline_value = eq != std::string::npos;
    if (inline_value) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
    }
    auto it = kFlags.find(name);
    if (it == kFlags.end()) fail_input("unknown flag --" + name);
    if (it->second && !inline_value) {
      if (k + 1 >= words.size()) fail_input("flag --" + name + " needs a value");
      value = words[++k];
    }
    if (!it->second && inline_value) fail_input("flag --" + name + " takes no value");
    if (c.flags.count(name)) fail_input("flag --" + name + " given twice");
    c.flags[name] = value;
  }
  return c;
}

std::string print_program(const Program& p) {
  std::ostringstream os;
  std::size_t next_ideal = 0;
  for (const auto& r : p.rings) {
    os << "ring " << r.name << " = " << r.field << "[";
    for (std::size_t i = 0; i < r.vars.size(); ++i) os << (i ? ", " : "") << r.vars[i];
    os << "]";
    if (!r.degrees.empty()) {
      os << " degrees = [";
      for (std::size_t i = 0; i < r.degrees.size(); ++i) os << (i ? ", " : "") << r.degrees[i];
      os << "]";
    }
    os << ";\n";
    if (r.order) {
      os << "order = ";
      print_order(os, *r.order);
      os << ";\n";
    }
    while (next_ideal < p.ideals.size() && p.ideals[next_ideal].ring == r.name) {
      const auto& d = p.ideals[next_ideal++];
      os << "ideal " << d.name << " = ";
      if (d.graph) {
        os << "graph n=" << d.graph->n << " edges=";
        for (std::size_t e = 0; e < d.graph->edges.size(); ++e)
          os << (e ? "," : "") << d.graph->edges[e].first << "-" << d.graph->edges[e].second;
      } else {
        for (std::size_t g = 0; g < d.generators.size(); ++g) os << (g ? ", " : "") << d.generators[g];
      }
      os << ";\n";
    }
  }
  if (p.command) {
    os << p.command->name;
    if (!p.command->sub.empty()) os << " " << p.command->sub;
    for (const auto& [k, v] : p.command->flags) {
      os << " --" << k;
      if (kFlags.at(k)) os << " " << v;
    }
    os << ";\n";
  }
  return os.str();
}

Program parse_program(const std::string& source) { return Parser(source).program(); }

MonomialOrder build_order(const OrderSpec& spec, const std::vector<long>& degrees, std::size_t n) {
  switch (spec.kind) {
    case OrderSpec::Kind::Lex: return MonomialOrder::lex(n);
    case OrderSpec::Kind::Grevlex: return degrees.empty() ? MonomialOrder::grevlex(n) : MonomialOrder::grevlex(degrees);
    case OrderSpec::Kind::Weight:
      if (spec.weights.size() != n)
        fail_input("weight order has " + std::to_string(spec.weights.size()) + " entries for " + std::to_string(n) +
                   " variables");
      return MonomialOrder::weight(spec.weights, build_order(*spec.tiebreak, degrees, n));
  }
  fail_input("unknown order");
}

namespace {

Field parse_field(const std::string& f) {
  if (f == "Q" || f == "q") return Field::rationals();
  std::string digits;
  if (f.rfind("GF(", 0) == 0 && f.back() == ')') digits = f.substr(3, f.size() - 4);
  if (f.rfind("fp:", 0) == 0) digits = f.substr(3);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    fail_input("unknown field '" + f + "' (use q or fp:<p>)");
  long p = std::stol(digits);
  if (p < 2 || p >= (1L << 31)) fail_input("characteristic out of range");
  return Field::prime(static_cast<std::uint32_t>(p));
}

}  // namespace

RingPtr build_ring(const RingDecl& d, const std::optional<std::string>& field_override) {
  const std::size_t n = d.vars.size();
  std::vector<long> deg = d.degrees.empty() ? std::vector<long>(n, 1) : d.degrees;
  MonomialOrder ord = build_order(d.order.value_or(OrderSpec{}), d.degrees, n);
  return Ring::make(d.vars, deg, parse_field(field_override.value_or(d.field)), ord);
}

Ideal build_ideal(const Program& p, const std::string& name, const std::optional<std::string>& field_override) {
  for (const auto& d : p.ideals) {
    if (d.name != name) continue;
    const RingDecl* rd = nullptr;
    for (const auto& r : p.rings)
      if (r.name == d.ring) rd = &r;
    if (!rd) fail_input("ideal '" + name + "' refers to unknown ring '" + d.ring + "'");
    RingPtr R = build_ring(*rd, field_override);
    if (d.graph) return binomial_edge_ideal(R, static_cast<std::size_t>(d.graph->n), d.graph->edges);
    return Ideal::parse(R, d.generators);
  }
  fail_input("unknown ideal '" + name + "'");
}

}  // namespace ffl

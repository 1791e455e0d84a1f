#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "fiberfull/degeneration.hpp"
#include "fiberfull/error.hpp"
#include "fiberfull/monomial_ideal.hpp"
#include "fiberfull/program.hpp"

namespace ffl {

std::string version_string() { return FFL_VERSION; }

namespace {

using json = nlohmann::ordered_json;

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled) {}
  template <class F>
  auto operator()(const std::string& label, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto out = f();
    if (enabled_) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      times_[label] = std::round(ms * 1000.0) / 1000.0;
    }
    return out;
  }
  json to_json() const { return times_; }

 private:
  bool enabled_;
  json times_ = json::object();
};

std::pair<long, long> parse_range(const std::string& flag, const std::string& v) {
  auto dots = v.find("..", v.empty() ? 0 : 1);
  try {
    if (dots == std::string::npos) {
      std::size_t used = 0;
      long a = std::stol(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return {a, a};
    }
    std::size_t u1 = 0, u2 = 0;
    std::string l = v.substr(0, dots), r = v.substr(dots + 2);
    long a = std::stol(l, &u1), b = std::stol(r, &u2);
    if (u1 != l.size() || u2 != r.size()) throw std::invalid_argument(v);
    if (a > b) fail_input("empty range for --" + flag + ": " + v);
    return {a, b};
  } catch (const std::logic_error&) {
    fail_input("bad range for --" + flag + ": '" + v + "' (use a..b)");
  }
}

long parse_int(const std::string& flag, const std::string& v) {
  try {
    std::size_t used = 0;
    long a = std::stol(v, &used);
    if (used == v.size()) return a;
  } catch (const std::logic_error&) {
  }
  fail_input("bad integer for --" + flag + ": '" + v + "'");
}

std::vector<long> parse_ints(const std::string& flag, const std::string& v) {
  std::vector<long> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(flag, item));
  if (out.empty()) fail_input("empty list for --" + flag);
  return out;
}

json strings(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

json degree_json(const Degree& d) {
  if (d.size() == 1) return d[0];
  return json(d);
}

json betti_json(const BettiTable& B) {
  json entries = json::array();
  for (const auto& [key, v] : B.entries())
    if (v) entries.push_back({{"i", key.first}, {"j", degree_json(key.second)}, {"value", v}});
  json totals = json::array();
  for (std::size_t i = 0; i <= B.length(); ++i) totals.push_back(B.total(i));
  return {{"entries", entries}, {"totals", totals}};
}

std::string dims_text(const std::vector<std::size_t>& is, const std::vector<GradedDims>& dims,
                      const std::vector<Degree>& window, const std::string& label) {
  std::ostringstream os;
  os << std::setw(8) << ("j:");
  for (const auto& d : window) os << std::setw(5) << d[0];
  os << "\n";
  for (std::size_t k = 0; k < is.size(); ++k) {
    os << std::setw(6) << (label + std::to_string(is[k])) << ": ";
    for (const auto& d : window) os << std::setw(5) << dims[k].at(d);
    os << "\n";
  }
  return os.str();
}

json dims_json(const GradedDims& g) {
  json a = json::array();
  for (const auto& d : g.window()) a.push_back(g.at(d));
  return a;
}

std::string lines(const std::vector<Polynomial>& ps, const std::string& indent = "  ") {
  std::string out;
  for (const auto& p : ps) out += indent + to_string(p) + "\n";
  return out;
}

struct Context {
  const Program& program;
  const CommandSpec& cmd;
  std::optional<std::string> field;
  Ideal I;
  std::string ideal_name;
  const RingDecl* ring_decl = nullptr;

  bool has(const std::string& f) const { return cmd.flags.count(f) > 0; }
  const std::string& flag(const std::string& f) const { return cmd.flags.at(f); }
};

std::vector<Degree> window_from(const Context& c, const std::vector<Degree>& fallback) {
  if (!c.has("j")) return fallback;
  auto [a, b] = parse_range("j", c.flag("j"));
  return GradedDims::range(a, b);
}

std::vector<std::size_t> is_from(const Context& c, std::size_t lo, std::size_t hi) {
  if (c.has("i")) {
    auto [a, b] = parse_range("i", c.flag("i"));
    if (a < 0) fail_input("--i must be non-negative");
    lo = static_cast<std::size_t>(a);
    hi = static_cast<std::size_t>(b);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

long regularity_of(const BettiTable& B) {
  long reg = 0;
  for (const auto& [key, v] : B.entries())
    if (v > 0) reg = std::max(reg, key.second[0] - static_cast<long>(key.first));
  return reg;
}

DegenerationSetup setup_for(const Context& c, std::optional<std::size_t> h = std::nullopt) {
  std::optional<WeightVector> w;
  if (c.has("w")) w = parse_ints("w", c.flag("w"));
  return build_setup(c.I, w, h);
}

std::optional<std::size_t> h_flag(const Context& c) {
  if (!c.has("h")) return std::nullopt;
  long h = parse_int("h", c.flag("h"));
  if (h < 0) fail_input("--h must be non-negative");
  return static_cast<std::size_t>(h);
}

using Handler = std::function<void(const Context&, Timer&, Report&, json& result, json& verdicts)>;

void cmd_gb(const Context& c, Timer& T, Report& r, json& result, json&) {
  GroebnerBasis G = T("groebner", [&] { return buchberger(c.I); });
  result["order"] = c.I.ring()->order().to_string();
  result["basis"] = strings(G.elements());
  r.text = "Groebner basis (" + std::to_string(G.size()) + " elements, " + c.I.ring()->order().to_string() + "):\n" +
           lines(G.elements());
}

void cmd_initial(const Context& c, Timer& T, Report& r, json& result, json&) {
  Ideal in = T("initial", [&] { return initial_ideal(c.I, c.I.ring()->order()); });
  result["order"] = c.I.ring()->order().to_string();
  result["generators"] = strings(in.generators());
  bool sqf = is_squarefree(MonomialIdeal::from_ideal(in));
  result["squarefree"] = sqf;
  r.text = "initial ideal (" + std::to_string(in.generators().size()) + " generators" +
           (sqf ? ", square-free" : "") + "):\n" + lines(in.generators());
}

void cmd_homogenize(const Context& c, Timer& T, Report& r, json& result, json&) {
  auto s = T("setup", [&] { return setup_for(c); });
  result["weight"] = s.w;
  result["ring"] = s.P->vars();
  result["generators"] = strings(s.homI.generators());
  result["initial"] = strings(s.inI.generators());
  std::ostringstream os;
  os << "w = (";
  for (std::size_t i = 0; i < s.w.size(); ++i) os << (i ? ", " : "") << s.w[i];
  os << ")\nhom_w(I):\n" << lines(s.homI.generators()) << "in_w(I):\n" << lines(s.inI.generators());
  r.text = os.str();
}

void cmd_betti(const Context& c, Timer& T, Report& r, json& result, json&) {
  BettiTable B = T("resolution", [&] { return betti_table(c.I); });
  result["betti"] = betti_json(B);
  r.text = c.I.ring()->grading_rank() == 1 ? B.to_text() : result["betti"].dump(2) + "\n";
}

void cmd_localcoh(const Context& c, Timer& T, Report& r, json& result, json&) {
  const std::size_t n = c.I.ring()->nvars();
  auto res = T("resolution", [&] { return free_resolution(quotient_presentation(c.I), n); });
  auto window = window_from(c, GradedDims::range(-static_cast<long>(n) - 1, regularity_of(BettiTable(res)) + 1));
  auto is = is_from(c, 0, n);
  std::vector<GradedDims> dims = T("local_cohomology", [&] {
    std::vector<GradedDims> out;
    for (auto i : is) out.push_back(local_cohomology_dims(res, i, window));
    return out;
  });
  result["window"] = {window.front()[0], window.back()[0]};
  json rows = json::array();
  for (std::size_t k = 0; k < is.size(); ++k) rows.push_back({{"i", is[k]}, {"dims", dims_json(dims[k])}});
  result["local_cohomology"] = rows;
  r.text = "dim H^i_m(R/I)_j\n" + dims_text(is, dims, window, "H^");
}

MonomialIdeal monomial_input(const Context& c) {
  if (!c.I.is_monomial()) fail_input("this command needs a monomial ideal");
  return MonomialIdeal::from_ideal(c.I);
}

json prime_json(const Ring& R, const std::vector<std::size_t>& prime) {
  json a = json::array();
  for (auto v : prime) a.push_back(R.var(v));
  return a;
}

void cmd_decompose(const Context& c, Timer& T, Report& r, json& result, json&) {
  auto M = monomial_input(c);
  auto comps = T("decomposition", [&] { return primary_decomposition_monomial(M); });
  json a = json::array();
  std::ostringstream os;
  os << comps.size() << " primary components:\n";
  for (const auto& q : comps) {
    a.push_back({{"generators", strings(q.ideal.to_ideal().generators())},
                 {"prime", prime_json(*c.I.ring(), q.prime)},
                 {"height", q.height()}});
    os << "  (";
    const Ideal qi = q.ideal.to_ideal();
    const auto& g = qi.generators();
    for (std::size_t k = 0; k < g.size(); ++k) os << (k ? ", " : "") << to_string(g[k]);
    os << ")  prime (";
    for (std::size_t k = 0; k < q.prime.size(); ++k) os << (k ? ", " : "") << c.I.ring()->var(q.prime[k]);
    os << ")  height " << q.height() << "\n";
  }
  result["components"] = a;
  r.text = os.str();
}

void cmd_truncate(const Context& c, Timer& T, Report& r, json& result, json&) {
  if (!c.has("h")) fail_input("truncate needs --h");
  auto h = *h_flag(c);
  auto M = monomial_input(c);
  auto J = T("truncation", [&] { return truncate_components(M, h); });
  result["h"] = h;
  result["generators"] = strings(J.to_ideal().generators());
  result["squarefree"] = is_squarefree(J);
  r.text = "I^{<=" + std::to_string(h) + "}:\n" + lines(J.to_ideal().generators());
}

void cmd_saturate(const Context& c, Timer& T, Report& r, json& result, json&) {
  Ideal S = T("saturation", [&] {
    if (c.I.is_monomial()) return monomial_saturation(MonomialIdeal::from_ideal(c.I)).to_ideal();
    return saturation_by_maximal(c.I);
  });
  result["generators"] = strings(S.generators());
  r.text = "sat I:\n" + lines(S.generators());
}

void cmd_fiberfull(const Context& c, Timer& T, Report& r, json& result, json& verdicts) {
  Coefficients N = Coefficients::P;
  if (c.has("N")) {
    if (c.flag("N") == "P") {
      N = Coefficients::P;
    } else if (c.flag("N") == "Kt") {
      N = Coefficients::Kt;
    } else {
      fail_input("--N must be P or Kt");
    }
  }
  bool definition = c.has("definition");
  long mmax = 4;
  if (c.has("mmax")) {
    if (!definition) fail_input("--mmax needs --definition");
    mmax = parse_int("mmax", c.flag("mmax"));
    if (mmax < 2) fail_input("--mmax must be at least 2");
  }
  std::vector<long> ms;
  for (long m = 2; m <= mmax; ++m) ms.push_back(m);
  auto s = T("setup", [&] { return setup_for(c, h_flag(c)); });
  auto rep = T("fiberfull", [&] { return fiberfull_report(s, N, definition, ms); });
  result["N"] = to_string(N);
  result["h"] = s.h;
  result["weight"] = s.w;
  result["flat"] = rep.flat;
  std::ostringstream os;
  os << "N = " << to_string(N) << ", h = " << s.h << "\nExt^i_P(S, N) flat over K[t], i = 0.." << s.h - 1 << ": ";
  for (std::size_t i = 0; i < rep.flat.size(); ++i) os << (i ? " " : "") << (rep.flat[i] ? "yes" : "NO");
  os << "\n";
  if (definition) {
    json inj = json::array();
    os << "injectivity of Ext^i(S/tS, N) -> Ext^i(S/t^mS, N):\n";
    for (long m : ms) {
      os << "  m = " << m << ":";
      for (const auto& v : rep.injectivity) {
        if (v.m != m) continue;
        inj.push_back({{"i", v.i}, {"m", v.m}, {"injective", v.injective}});
        os << " " << (v.injective ? "yes" : "NO");
      }
      os << "\n";
    }
    result["injectivity"] = inj;
    bool mult = multiplication_injective(s, mmax);
    result["multiplication_injective"] = mult;
    verdicts["multiplication_injective"] = mult;
  }
  verdicts["fiber_full"] = rep.fiber_full();
  os << (rep.fiber_full() ? "S is " : "S is NOT ") << to_string(N) << "-fiber-full up to h\n";
  r.text = os.str();
  if (!rep.fiber_full()) r.exit_code = kNegative;
}

void cmd_compare(const Context& c, Timer& T, Report& r, json& result, json& verdicts) {
  auto s = T("setup", [&] { return setup_for(c); });
  result["weight"] = s.w;
  result["initial"] = strings(s.inI.generators());
  if (c.cmd.sub == "betti") {
    auto B = T("betti", [&] { return compare_betti(s); });
    result["general"] = betti_json(B.general);
    result["special"] = betti_json(B.special);
    json d = json::array();
    for (const auto& [i, j] : B.disagreements)
      d.push_back({{"i", i}, {"j", degree_json(j)}, {"general", B.general.at(i, j)}, {"special", B.special.at(i, j)}});
    result["disagreements"] = d;
    verdicts["equal"] = B.disagreements.empty();
    std::ostringstream os;
    os << "R/I:\n" << B.general.to_text() << "\nR/in_w(I):\n" << B.special.to_text() << "\ntotals:\n";
    for (std::size_t i = 0; i <= std::max(B.general.length(), B.special.length()); ++i)
      os << "  i = " << i << ": " << B.general.total(i) << " vs " << B.special.total(i)
         << (B.general.total(i) == B.special.total(i) ? "" : "   differ") << "\n";
    os << (B.disagreements.empty() ? "Betti tables agree\n" : "Betti tables differ\n");
    r.text = os.str();
    if (!B.disagreements.empty()) r.exit_code = kNegative;
    return;
  }
  const std::size_t n = c.I.ring()->nvars();
  auto window = window_from(c, default_window(s));
  auto is = is_from(c, 0, n);
  auto L = T("local_cohomology", [&] { return compare_local_cohomology(s, is, window); });
  result["window"] = {window.front()[0], window.back()[0]};
  json rows = json::array();
  for (std::size_t k = 0; k < is.size(); ++k)
    rows.push_back({{"i", is[k]}, {"general", dims_json(L.general[k])}, {"special", dims_json(L.special[k])}});
  result["local_cohomology"] = rows;
  result["agreeing"] = L.agreeing;
  verdicts["equal"] = L.all_agree();
  r.text = "dim H^i_m(R/I)_j\n" + dims_text(is, L.general, window, "H^") + "dim H^i_m(R/in_w(I))_j\n" +
           dims_text(is, L.special, window, "H^") + (L.all_agree() ? "agree on the window\n" : "differ on the window\n");
  if (!L.all_agree()) r.exit_code = kNegative;
}

void cmd_thm35(const Context& c, Timer& T, Report& r, json& result, json& verdicts) {
  if (!c.has("h")) fail_input("thm35 needs --h");
  auto h = *h_flag(c);
  auto s = T("setup", [&] { return setup_for(c); });
  auto window = window_from(c, default_window(s));
  auto res = T("pipeline", [&] { return theorem35_pipeline(s, h, window); });
  result["h"] = h;
  result["weight"] = s.w;
  result["condition"] = to_string(res.condition);
  if (res.truncation) result["truncation"] = strings(res.truncation->to_ideal().generators());
  std::ostringstream os;
  os << "in_w(I)^{<=" << h << "}: " << to_string(res.condition) << "\n";
  if (res.truncation) os << lines(res.truncation->to_ideal().generators());
  verdicts["condition"] = to_string(res.condition);
  if (res.comparison) {
    result["window"] = {window.front()[0], window.back()[0]};
    result["checked_i"] = res.comparison->degrees_i;
    result["agreeing"] = res.comparison->agreeing;
    verdicts["verified"] = res.verified();
    os << "local cohomology for i > " << static_cast<long>(c.I.ring()->nvars()) - static_cast<long>(h)
       << " on j in [" << window.front()[0] << ", " << window.back()[0] << "]: "
       << (res.verified() ? "equal" : "DIFFERENT") << "\n";
    if (!res.verified()) r.exit_code = kNegative;
  }
  r.text = os.str();
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"gb", cmd_gb},           {"initial", cmd_initial},     {"homogenize", cmd_homogenize},
      {"betti", cmd_betti},     {"localcoh", cmd_localcoh},   {"decompose", cmd_decompose},
      {"truncate", cmd_truncate}, {"saturate", cmd_saturate}, {"fiberfull", cmd_fiberfull},
      {"compare", cmd_compare}, {"thm35", cmd_thm35}};
  return h;
}

json command_json(const CommandSpec& c) {
  json flags = json::object();
  for (const auto& [k, v] : c.flags) flags[k] = v;
  json j = {{"name", c.name}};
  if (!c.sub.empty()) j["sub"] = c.sub;
  j["flags"] = flags;
  return j;
}

}  // namespace

Report execute(const Program& p) {
  Report r;
  json cmd_json = p.command ? command_json(*p.command) : json::object();
  bool timings = !(p.command && p.command->flags.count("no-timings"));
  Timer T(timings);
  json inputs = json::object(), result = json::object(), verdicts = json::object();
  auto finish = [&](json error) {
    r.json = json::object();
    r.json["command"] = cmd_json;
    r.json["inputs"] = inputs;
    r.json["result"] = result;
    r.json["verdicts"] = verdicts;
    r.json["runtimes_ms"] = T.to_json();
    r.json["version"] = version_string();
    if (!error.is_null()) r.json["error"] = error;
  };
  try {
    if (!p.command) fail_input("no command given");
    if (p.ideals.empty()) fail_input("no ideal declared");
    const CommandSpec& c = *p.command;
    if (c.flags.count("format") && c.flags.at("format") != "text" && c.flags.at("format") != "json")
      fail_input("--format must be text or json");
    std::string name = c.flags.count("ideal") ? c.flags.at("ideal") : p.ideals.back().name;
    std::optional<std::string> field;
    if (c.flags.count("field")) field = c.flags.at("field");
    Context ctx{p, c, field, build_ideal(p, name, field), name, nullptr};
    for (const auto& d : p.ideals)
      if (d.name == name)
        for (const auto& rd : p.rings)
          if (rd.name == d.ring) ctx.ring_decl = &rd;
    const Ring& R = *ctx.I.ring();
    inputs["ring"] = {{"name", ctx.ring_decl->name},
                      {"field", R.field().name()},
                      {"variables", R.vars()},
                      {"degrees", R.primary_degrees()},
                      {"order", R.order().to_string()}};
    inputs["ideal"] = {{"name", name}, {"generators", strings(ctx.I.generators())}};
    handlers().at(c.name)(ctx, T, r, result, verdicts);
    finish(nullptr);
  } catch (const InputError& e) {
    r = Report{};
    r.exit_code = kInputError;
    r.text = std::string("input error: ") + e.what() + "\n";
    finish({{"kind", "input"}, {"message", e.what()}});
  } catch (const InternalError& e) {
    r = Report{};
    r.exit_code = kInternalError;
    r.text = std::string("internal error: ") + e.what() + "\n";
    finish({{"kind", "internal"}, {"message", e.what()}});
  } catch (const std::exception& e) {
    r = Report{};
    r.exit_code = kInternalError;
    r.text = std::string("internal error: ") + e.what() + "\n";
    finish({{"kind", "internal"}, {"message", e.what()}});
  }
  return r;
}

Report run_source(const std::string& source, const std::vector<std::string>& command_words) {
  Program p;
  std::optional<CommandSpec> command;
  try {
    if (!command_words.empty()) command = parse_command(command_words);
    p = parse_program(source);
    if (command) {
      if (p.command) fail_input("the source already contains a command");
      p.command = command;
    }
  } catch (const InputError& e) {
    Report r;
    r.exit_code = kInputError;
    r.text = std::string("input error: ") + e.what() + "\n";
    r.json = {{"command", command ? command_json(*command) : json::object()},
              {"inputs", json::object()},
              {"result", json::object()},
              {"verdicts", json::object()},
              {"runtimes_ms", json::object()},
              {"version", version_string()},
              {"error", {{"kind", "input"}, {"message", e.what()}}}};
    return r;
  }
  return execute(p);
}

}  // namespace ffl

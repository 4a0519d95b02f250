#include "radhom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "radhom/coresolve.hpp"
#include "radhom/io.hpp"

namespace radhom {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::PassAtBound: return "pass_at_bound";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Fail: return "fail";
    case Verdict::CounterexampleCandidate: return "counterexample_candidate";
  }
  return "?";
}

nlohmann::json VerdictReport::to_json(bool with_timing) const {
  nlohmann::json j{{"fingerprint", fingerprint}, {"check", check},   {"verdict", verdict_name(verdict)},
                   {"reason", reason},           {"bound", bound},   {"witness", witness}};
  if (with_timing) j["timing"] = {{"seconds", seconds}};
  return j;
}

// Tally ----------------------------------------------------------------------

namespace {
constexpr std::size_t kKeepWitnesses = 8;

void keep(nlohmann::json& list, const nlohmann::json& detail) {
  if (!detail.is_null() && list.size() < kKeepWitnesses) list.push_back(detail);
}
}  // namespace

void Tally::add(Item it, const nlohmann::json& detail) {
  ++counts_[static_cast<int>(it)];
  switch (it) {
    case Item::Violation:
    case Item::Candidate: keep(violations_, detail); break;
    case Item::Undecided: keep(undecided_, detail); break;
    case Item::OkAtBound: keep(at_bound_, detail); break;
    case Item::Ok: break;
  }
}

Verdict Tally::verdict() const {
  if (count(Item::Candidate)) return Verdict::CounterexampleCandidate;
  if (count(Item::Violation)) return Verdict::Fail;
  if (count(Item::Undecided)) return Verdict::Inconclusive;
  if (count(Item::OkAtBound)) return Verdict::PassAtBound;
  return Verdict::Pass;
}

nlohmann::json Tally::summary() const {
  nlohmann::json j{{"ok", count(Item::Ok)},
                   {"ok_at_bound", count(Item::OkAtBound)},
                   {"undecided", count(Item::Undecided)},
                   {"violations", count(Item::Violation)},
                   {"candidates", count(Item::Candidate)}};
  if (!violations_.empty()) j["violation_items"] = violations_;
  if (!undecided_.empty()) j["undecided_items"] = undecided_;
  if (!at_bound_.empty()) j["at_bound_items"] = at_bound_;
  return j;
}

Item compare_equal(const DimValue& a, const DimValue& b) {
  const DimValue x = a.zero_as_exact(), y = b.zero_as_exact();
  if (x.is_exact() && y.is_exact()) return x.value() == y.value() ? Item::Ok : Item::Violation;
  if (x.is_at_least() && y.is_at_least()) return Item::OkAtBound;
  const DimValue& e = x.is_exact() ? x : y;
  const DimValue& l = x.is_exact() ? y : x;
  if (l.certified_infinite() || e.value() <= l.value()) return Item::Violation;
  return Item::Undecided;
}

namespace {

// a >= b under the comparability rules.
Item compare_at_least(const DimValue& a, const DimValue& b) {
  switch (compare(a.zero_as_exact(), b.zero_as_exact())) {
    case Ordering::Greater:
    case Ordering::Equal: return Item::Ok;
    case Ordering::Less: return Item::Violation;
    case Ordering::Incomparable: break;
  }
  return a.is_at_least() && b.is_at_least() ? Item::OkAtBound : Item::Undecided;
}

// Sum of dimensions; AtLeast(k) means "exceeds k".
DimValue add(const DimValue& a, const DimValue& b) {
  const DimValue x = a.zero_as_exact(), y = b.zero_as_exact();
  if (x.is_exact() && y.is_exact()) return DimValue::exact(x.value() + y.value());
  const bool inf = x.certified_infinite() || y.certified_infinite();
  const BoundReason why = inf ? (x.certified_infinite() ? x.reason() : y.reason()) : BoundReason::Truncated;
  if (x.is_at_least() && y.is_at_least()) return DimValue::at_least(x.value() + y.value() + 1, why);
  return DimValue::at_least(x.value() + y.value(), why);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

VerdictReport finish(const AlgebraPtr& a, const char* check, int bound, const Tally& t, const Timer& timer,
                     nlohmann::json extra = nlohmann::json::object()) {
  VerdictReport r;
  r.fingerprint = fingerprint_hex(*a);
  r.check = check;
  r.bound = bound;
  r.verdict = t.verdict();
  r.witness = std::move(extra);
  r.witness["items"] = t.summary();
  switch (r.verdict) {
    case Verdict::Pass:
      r.reason = t.count(Item::Ok) ? "all comparisons exact and equal" : "vacuous";
      break;
    case Verdict::PassAtBound: r.reason = "consistent, some values only bounded below"; break;
    case Verdict::Inconclusive: r.reason = "some comparisons undecided within the bound"; break;
    case Verdict::Fail: r.reason = "a proved statement is violated (engine bug)"; break;
    case Verdict::CounterexampleCandidate: r.reason = "exact disagreement in the open question"; break;
  }
  r.seconds = timer.seconds();
  return r;
}

std::optional<bool> pd_at_most(const DimValue& pd, int d) {
  if (pd.is_zero_module()) return true;
  if (pd.is_exact()) return pd.value() <= d;
  if (pd.certified_infinite() || pd.value() >= d) return false;
  return std::nullopt;
}

nlohmann::json opt_json(const std::optional<bool>& b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); }

}  // namespace

// Checks ---------------------------------------------------------------------

VerdictReport check_prop22(const AlgebraPtr& a, const std::vector<Rep>& modules, int bound) {
  Timer timer;
  Tally t;
  for (const Rep& m : modules) {
    const DimValue pd = proj_dim(m, bound);
    Rep lm = as_left(m);
    ExtComplex ext(ResolutionView(resolution_of(lm)), radical_module(lm.algebra(), Side::Left));
    ExtMapSurjectivity surj(m);
    for (int d = 0; d <= bound; ++d) {
      std::optional<bool> c1 = pd_at_most(pd, d);
      std::optional<bool> c2;
      try {
        if (auto e = ext.ext_dim(d + 1)) c2 = *e == 0;
      } catch (const Inconclusive&) {
      }
      std::optional<bool> c3 = surj.at(d);
      std::vector<bool> known;
      for (const auto& c : {c1, c2, c3})
        if (c) known.push_back(*c);
      const bool disagree = std::adjacent_find(known.begin(), known.end(), std::not_equal_to<>()) != known.end();
      auto detail = [&] {
        return nlohmann::json{{"module", module_literal(m)}, {"d", d},         {"pd", pd.to_json()},
                              {"pd_le_d", opt_json(c1)},     {"ext_vanishes", opt_json(c2)}, {"surjective", opt_json(c3)}};
      };
      if (disagree)
        t.add(Item::Violation, detail());
      else if (known.size() == 3)
        t.add(Item::Ok);
      else
        t.add(Item::Undecided, detail());
      // Past the cap nothing further is decidable for this module.
      if (!c2 && !c3) break;
    }
  }
  return finish(a, "prop22", bound, t, timer, {{"modules", modules.size()}});
}

VerdictReport check_prop22(const AlgebraPtr& a, int bound) {
  return check_prop22(a, sample_modules(a, SampleSpec{std::min(bound, 10), Side::Left}), bound);
}

VerdictReport check_thm_injdim_radical(const AlgebraPtr& a, int bound) {
  Timer timer;
  Tally t;
  const DimValue g = gl_dim(a, bound);
  const DimValue l = inj_dim_radical(a, Side::Left, bound);
  const DimValue r = inj_dim_radical(a, Side::Right, bound);
  auto pair = [&](const char* what, const DimValue& x, const DimValue& y) {
    Item it = compare_equal(x, y);
    t.add(it, it == Item::Ok ? nlohmann::json(nullptr) : nlohmann::json{{"pair", what}, {"a", x.to_json()}, {"b", y.to_json()}});
  };
  pair("gl_dim vs inj_dim_J_left", g, l);
  pair("gl_dim vs inj_dim_J_right", g, r);
  pair("inj_dim_J_left vs inj_dim_J_right", l, r);
  return finish(a, "thm_injdim_radical", bound, t, timer,
                {{"gl_dim", g.to_json()}, {"inj_dim_J_left", l.to_json()}, {"inj_dim_J_right", r.to_json()}});
}

VerdictReport check_question_syzygy(const AlgebraPtr& a, int bound) {
  Timer timer;
  Tally t;
  const DimValue g = gl_dim(a, bound);
  const Rep top = top_of_algebra(a, Side::Left);
  int reached = -1;
  for (int n = 0; n <= bound; ++n) {
    Rep om;
    try {
      om = syzygy(top, n);
    } catch (const Inconclusive&) {
      t.add(Item::Undecided, {{"n", n}, {"reason", "syzygy past the size cap"}});
      break;
    }
    if (om.is_zero()) break;
    reached = n;
    const DimValue id = inj_dim(om, bound);
    Item it = compare_equal(id, g);
    if (it == Item::Violation && n >= 2) it = Item::Candidate;
    nlohmann::json detail = nullptr;
    if (it != Item::Ok) detail = {{"n", n}, {"inj_dim", id.to_json()}, {"gl_dim", g.to_json()}};
    if (it == Item::Candidate || it == Item::Violation) detail["module"] = module_literal(om);
    t.add(it, detail);
  }
  // fi dim <= 1 would settle every n, but lower bounds cannot certify it.
  return finish(a, "question_syzygy", bound, t, timer,
                {{"gl_dim", g.to_json()}, {"last_n", reached}, {"fi_dim_at_most_one", "structurally inconclusive"}});
}

VerdictReport check_gorenstein_gpd(const AlgebraPtr& a, int bound) {
  Timer timer;
  Tally t;
  const GorensteinResult g = detect_gorenstein(a, bound);
  if (g.yes()) {
    t.add(compare_equal(g.left, DimValue::exact(g.d)), {{"zaks", "left"}, {"value", g.left.to_json()}});
    t.add(compare_equal(g.right, DimValue::exact(g.d)), {{"zaks", "right"}, {"value", g.right.to_json()}});
    for (Side s : {Side::Left, Side::Right}) {
      try {
        DimValue top = gproj_dim_gorenstein(top_of_algebra(a, s), g);
        Item it = compare_equal(top, DimValue::exact(g.d));
        t.add(it, {{"module", "A0"}, {"side", side_name(s)}, {"gproj", top.to_json()}, {"expected", g.d}});
        Rep j = radical_module(a, s);
        if (!j.is_zero()) {
          DimValue gj = gproj_dim_gorenstein(j, g);
          const int want = std::max(g.d - 1, 0);
          t.add(compare_equal(gj, DimValue::exact(want)),
                {{"module", "J"}, {"side", side_name(s)}, {"gproj", gj.to_json()}, {"expected", want}});
        }
      } catch (const Inconclusive& e) {
        t.add(Item::Undecided, {{"side", side_name(s)}, {"reason", e.what()}});
      }
    }
  } else if (g.kind == GorensteinResult::Kind::NoWithinBound) {
    for (Side s : {Side::Left, Side::Right}) {
      const DimValue& id = s == Side::Left ? g.left : g.right;
      if (!id.certified_infinite()) continue;
      // Infinite inj dim: every term I^i of the coresolution is nonzero.
      Rep top = top_of_algebra(a, s), reg = regular_module(a, s);
      int checked = -1;
      std::optional<int> zero_at;
      for (int i = 0; i <= bound; ++i) {
        auto e = ext_dim(top, reg, i);
        if (!e) break;
        checked = i;
        if (*e == 0) {
          zero_at = i;
          break;
        }
      }
      nlohmann::json detail{{"side", side_name(s)}, {"checked_through", checked}};
      if (zero_at)
        t.add(Item::Violation, detail);
      else
        t.add(checked == bound ? Item::OkAtBound : Item::Undecided, detail);
    }
  } else {
    t.add(Item::Undecided, {{"reason", "Gorenstein property undecided"}});
  }
  return finish(a, "gorenstein_gpd", bound, t, timer, {{"gorenstein", g.to_json()}});
}

VerdictReport check_ginj_radical(const AlgebraPtr& a, int bound) {
  Timer timer;
  Tally t;
  const GorensteinResult g = detect_gorenstein(a, bound);
  if (g.yes()) {
    for (Side s : {Side::Left, Side::Right}) {
      Rep j = radical_module(a, s);
      if (j.is_zero()) continue;
      GinjBounds b = ginj_dim_bounds(j, bound, g);
      if (!b.exact) {
        t.add(Item::Undecided, {{"side", side_name(s)}, {"lower", b.lower}, {"examined", b.examined}});
        continue;
      }
      t.add(compare_equal(*b.exact, DimValue::exact(g.d)),
            {{"side", side_name(s)}, {"ginj", b.exact->to_json()}, {"expected", g.d}});
    }
  } else if (g.kind == GorensteinResult::Kind::Inconclusive) {
    t.add(Item::Undecided, {{"reason", "Gorenstein property undecided"}});
  }
  return finish(a, "ginj_radical", bound, t, timer, {{"gorenstein", g.to_json()}});
}

VerdictReport check_domdim_suite(const AlgebraPtr& a, int bound) {
  Timer timer;
  Tally t;
  const DimValue dom_a = dominant_dimension(regular_module(a, Side::Left), bound);
  const DimValue dom_op = dominant_dimension(regular_module(a, Side::Right), bound);
  t.add(compare_equal(dom_a, dom_op), {{"dom_dim_left", dom_a.to_json()}, {"dom_dim_right", dom_op.to_json()}});
  const GorensteinResult g = detect_gorenstein(a, bound);
  std::optional<bool> minimal_ag;
  if (g.kind == GorensteinResult::Kind::NoWithinBound)
    minimal_ag = false;
  else if (g.yes())
    minimal_ag = decided_le(DimValue::exact(g.d), dom_a);
  const bool connected = a->is_connected();

  for (const Rep& m : sample_modules(a, SampleSpec{std::min(bound, 10), Side::Left})) {
    const DimValue pd = proj_dim(m, bound), id = inj_dim(m, bound);
    const DimValue dom = dominant_dimension(m, bound), codom = codominant_dimension(m, bound);
    const bool pi = is_projective_injective(m);
    auto detail = [&](const char* what) {
      return nlohmann::json{{"part", what},           {"module", module_literal(m)}, {"pd", pd.to_json()},
                            {"inj_dim", id.to_json()}, {"dom_dim", dom.to_json()},     {"codom_dim", codom.to_json()},
                            {"dom_dim_A", dom_a.to_json()}};
    };
    // Proof of the finitistic bound: Omega^{-u} M has pd u + r.
    if (!pi && pd.is_exact() && dom.is_exact() && dom.value() >= 1) {
      try {
        DimValue p2 = proj_dim(cosyzygy(m, dom.value()), bound);
        Item it = compare_equal(p2, DimValue::exact(dom.value() + pd.value()));
        auto d = detail("cosyzygy_pd");
        d["observed"] = p2.to_json();
        t.add(it, d);
      } catch (const Inconclusive&) {
        t.add(Item::Undecided, detail("cosyzygy_pd"));
      }
    }
    if (!pi && id.is_exact() && codom.is_exact() && codom.value() >= 1) {
      try {
        DimValue i2 = inj_dim(syzygy(m, codom.value()), bound);
        Item it = compare_equal(i2, DimValue::exact(codom.value() + id.value()));
        auto d = detail("syzygy_inj_dim");
        d["observed"] = i2.to_json();
        t.add(it, d);
      } catch (const Inconclusive&) {
        t.add(Item::Undecided, detail("syzygy_inj_dim"));
      }
    }
    t.add(compare_at_least(add(pd, dom), dom_a), detail("pd_plus_dom_ge_dom_A"));
    t.add(compare_at_least(add(id, codom), dom_a), detail("id_plus_codom_ge_dom_A"));
    if (minimal_ag == true && connected && !pi && pd.is_exact()) {
      t.add(compare_equal(add(pd, dom), dom_a), detail("pd_plus_dom_eq_dom_A"));
      t.add(compare_equal(add(id, codom), dom_a), detail("id_plus_codom_eq_dom_A"));
    }
  }
  if (minimal_ag == true) {
    const DimValue gl = gl_dim(a, bound);
    const Rep top = top_of_algebra(a, Side::Left);
    for (int n = 0; n <= bound; ++n) {
      Rep om;
      try {
        om = syzygy(top, n);
      } catch (const Inconclusive&) {
        t.add(Item::Undecided, {{"part", "syzygy_inj_dim_eq_gl_dim"}, {"n", n}, {"reason", "size cap"}});
        break;
      }
      if (om.is_zero()) break;
      DimValue id = inj_dim(om, bound);
      t.add(compare_equal(id, gl), {{"part", "syzygy_inj_dim_eq_gl_dim"}, {"n", n}, {"inj_dim", id.to_json()}, {"gl_dim", gl.to_json()}});
    }
  } else if (!minimal_ag) {
    t.add(Item::Undecided, {{"part", "minimal_AG"}, {"reason", "minimal Auslander-Gorenstein property undecided"}});
  }
  return finish(a, "domdim_suite", bound, t, timer,
                {{"dom_dim_A", dom_a.to_json()},
                 {"minimal_AG", minimal_ag ? nlohmann::json(*minimal_ag) : nlohmann::json("inconclusive")},
                 {"connected", connected}});
}

VerdictReport check_koszul(const AlgebraPtr& a, int bound) {
  Timer timer;
  Tally t;
  if (a->vertex_count() != 1 || !a->is_commutative()) return finish(a, "koszul", bound, t, timer, {{"applicable", false}});
  KoszulResult k = koszul_complex_test(a, bound);
  const GorensteinResult g = detect_gorenstein(a, bound);
  t.add(k.top_homology != 0 ? Item::Ok : Item::Violation, {{"top_homology", k.top_homology}});
  std::optional<bool> expect;
  if (g.yes()) expect = true;
  if (g.kind == GorensteinResult::Kind::NoWithinBound) expect = false;
  nlohmann::json d{{"koszul", opt_json(k.finite_pd)}, {"gorenstein", g.str()}};
  if (!expect || !k.finite_pd)
    t.add(Item::Undecided, d);
  else
    t.add(*expect == *k.finite_pd ? Item::Ok : Item::Violation, d);
  return finish(a, "koszul", bound, t, timer,
                {{"applicable", true}, {"top_homology", k.top_homology}, {"koszul", opt_json(k.finite_pd)}, {"gorenstein", g.str()}});
}

const std::vector<std::pair<std::string, CheckFn>>& check_registry() {
  static const std::vector<std::pair<std::string, CheckFn>> reg{
      {"prop22", [](const AlgebraPtr& a, int b) { return check_prop22(a, b); }},
      {"thm_injdim_radical", check_thm_injdim_radical},
      {"question_syzygy", check_question_syzygy},
      {"gorenstein_gpd", check_gorenstein_gpd},
      {"ginj_radical", check_ginj_radical},
      {"domdim_suite", check_domdim_suite},
      {"koszul", check_koszul},
  };
  return reg;
}

std::optional<CheckFn> find_check(const std::string& name) {
  for (const auto& [n, f] : check_registry())
    if (n == name) return f;
  return std::nullopt;
}

std::vector<std::string> default_checks() {
  return {"prop22", "thm_injdim_radical", "question_syzygy", "gorenstein_gpd", "ginj_radical", "domdim_suite"};
}

VerdictReport run_check(const std::string& name, const AlgebraPtr& a, int bound) {
  auto f = find_check(name);
  if (!f) throw ContractViolation("unknown check '" + name + "'");
  Timer timer;
  try {
    return (*f)(a, bound);
  } catch (const Inconclusive& e) {
    VerdictReport r;
    r.fingerprint = fingerprint_hex(*a);
    r.check = name;
    r.bound = bound;
    r.verdict = Verdict::Inconclusive;
    r.reason = std::string("size cap: ") + e.what();
    r.seconds = timer.seconds();
    return r;
  }
}

int exit_status(const std::vector<VerdictReport>& reports) {
  bool candidate = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return kExitFail;
    candidate |= r.verdict == Verdict::CounterexampleCandidate;
  }
  return candidate ? kExitCandidate : 0;
}

// Generators -----------------------------------------------------------------

nlohmann::json GeneratorSpec::to_json() const {
  return {{"family", family},         {"count", count},     {"max_vertices", max_vertices},
          {"max_arrows", max_arrows}, {"max_length", max_length}, {"density", density},
          {"max_dim", max_dim},       {"field", field}};
}

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  GeneratorSpec s;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 2 || parts.size() > 3) throw ContractViolation("family spec must be name:count[:key=value,...]");
  s.family = parts[0];
  if (s.family != "nakayama" && s.family != "truncated" && s.family != "monomial" && s.family != "commutative_local")
    throw ContractViolation("unknown family '" + s.family + "'");
  try {
    s.count = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw ContractViolation("bad count in family spec '" + text + "'");
  }
  if (s.count < 0) throw ContractViolation("negative count in family spec");
  if (parts.size() == 3) {
    std::stringstream kv(parts[2]);
    while (std::getline(kv, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw ContractViolation("expected key=value in '" + item + "'");
      std::string k = item.substr(0, eq), v = item.substr(eq + 1);
      try {
        if (k == "vertices") s.max_vertices = std::stoi(v);
        else if (k == "arrows") s.max_arrows = std::stoi(v);
        else if (k == "length") s.max_length = std::stoi(v);
        else if (k == "density") s.density = std::stod(v);
        else if (k == "max_dim") s.max_dim = std::stoi(v);
        else if (k == "field") s.field = v;
        else throw ContractViolation("unknown key '" + k + "'");
      } catch (const std::invalid_argument&) {
        throw ContractViolation("bad value for '" + k + "'");
      }
    }
  }
  if (s.max_vertices < 1 || s.max_arrows < 1 || s.max_length < 2 || s.max_dim < 1)
    throw ContractViolation("family parameters out of range");
  Field::parse(s.field);
  return s;
}

AlgebraPtr truncated_algebra(Quiver q, int nilbound, const std::string& field) {
  if (nilbound < 2) throw ContractViolation("truncation length must be at least 2");
  return build_algebra(std::move(q), {}, nilbound, Field::parse(field));
}

AlgebraPtr nakayama_algebra(const std::vector<int>& c, bool cyclic, const std::string& field) {
  const int n = static_cast<int>(c.size());
  if (n == 0) throw ContractViolation("empty Kupisch series");
  for (int i = 0; i < n; ++i) {
    const bool last = !cyclic && i == n - 1;
    if (last ? c[i] != 1 : c[i] < 2) throw ContractViolation("Kupisch series entry out of range");
    if (!last && c[i] > c[(i + 1) % n] + 1) throw ContractViolation("Kupisch series is not admissible");
  }
  const int nil = std::max(2, *std::max_element(c.begin(), c.end()));
  Quiver q;
  q.vertices = n;
  const int arrows = cyclic ? n : n - 1;
  for (int i = 0; i < arrows; ++i) q.arrows.push_back({"c" + std::to_string(i), i, (i + 1) % n});
  const Field f = Field::parse(field);
  std::vector<Relation> rels;
  for (int i = 0; i < arrows; ++i) {
    const int len = c[i];
    if (len >= nil) continue;
    if (!cyclic && i + len > n - 1) continue;
    if (len == c[(i + 1) % n] + 1) continue;  // implied by the relation at i + 1
    Path p;
    for (int k = 0; k < len; ++k) p.push_back((i + k) % n);
    rels.push_back(Relation{{RelationTerm{Scalar(f, 1), p}}});
  }
  return build_algebra(std::move(q), std::move(rels), nil, f);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, const std::string& family, int index) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : family) h = (h ^ ch) * 1099511628211ull;
  return splitmix(splitmix(seed) ^ splitmix(h) ^ splitmix(static_cast<std::uint64_t>(index) + 1));
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Generated skip(std::string why) { return Generated{nullptr, std::move(why)}; }

Generated draw_nakayama(const GeneratorSpec& s, std::mt19937_64& rng) {
  const int n = uniform(rng, 1, s.max_vertices);
  const bool cyclic = uniform(rng, 0, 1) == 1;
  const int L = s.max_length;
  std::vector<int> c(n);
  if (!cyclic) {
    c[n - 1] = 1;
    for (int i = n - 2; i >= 0; --i) c[i] = uniform(rng, 2, std::min(c[i + 1] + 1, L));
  } else {
    c[n - 1] = uniform(rng, 2, L);
    for (int i = n - 2; i >= 0; --i) c[i] = uniform(rng, 2, std::min(c[i + 1] + 1, L));
    if (c[n - 1] > c[0] + 1) return skip("inadmissible cyclic Kupisch series");
  }
  return {nakayama_algebra(c, cyclic, s.field), {}};
}

Quiver random_quiver(const GeneratorSpec& s, std::mt19937_64& rng, int vertices) {
  Quiver q;
  q.vertices = vertices;
  const int m = uniform(rng, 1, s.max_arrows);
  for (int i = 0; i < m; ++i)
    q.arrows.push_back({"a" + std::to_string(i), uniform(rng, 0, vertices - 1), uniform(rng, 0, vertices - 1)});
  return q;
}

// Counts the paths of length < nil containing no relation path, stopping
// once the count passes `limit`; this is the dimension of the monomial
// quotient, so oversized draws are rejected before they are built.
bool monomial_dim_exceeds(const Quiver& q, const std::vector<Path>& rels, int nil, int limit) {
  int count = q.vertices;
  std::vector<Path> frontier{{}};
  for (int len = 1; len < nil && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        if (!p.empty() && q.arrows[a].source != q.arrows[p.back()].target) continue;
        Path x = p;
        x.push_back(a);
        const bool dead = std::any_of(rels.begin(), rels.end(), [&](const Path& r) {
          return r.size() <= x.size() && std::equal(r.rbegin(), r.rend(), x.rbegin());
        });
        if (dead) continue;
        if (++count > limit) return true;
        next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  return false;
}

Generated too_big(const GeneratorSpec& s) { return skip("dimension exceeds " + std::to_string(s.max_dim)); }

Generated draw_truncated(const GeneratorSpec& s, std::mt19937_64& rng) {
  Quiver q = random_quiver(s, rng, uniform(rng, 1, s.max_vertices));
  const int nil = uniform(rng, 2, s.max_length);
  if (monomial_dim_exceeds(q, {}, nil, s.max_dim)) return too_big(s);
  return {truncated_algebra(std::move(q), nil, s.field), {}};
}

void all_paths(const Quiver& q, int max_len, std::size_t cap, std::vector<Path>& out) {
  std::vector<Path> frontier;
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) frontier.push_back({a});
  for (int len = 2; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
        if (q.arrows[a].source == q.arrows[p.back()].target) {
          Path x = p;
          x.push_back(a);
          next.push_back(std::move(x));
          if (next.size() > cap) return;
        }
    for (const Path& p : next) out.push_back(p);
    frontier = std::move(next);
  }
}

Generated draw_monomial(const GeneratorSpec& s, std::mt19937_64& rng) {
  Quiver q = random_quiver(s, rng, uniform(rng, 1, s.max_vertices));
  if (s.max_length < 3) return skip("nilbound too small for relations");
  const int nil = uniform(rng, 3, s.max_length);
  std::vector<Path> cands;
  all_paths(q, nil - 1, 4000, cands);
  const Field f = Field::parse(s.field);
  std::vector<Relation> rels;
  std::bernoulli_distribution pick(s.density);
  std::vector<Path> chosen;
  for (const Path& p : cands)
    if (pick(rng)) chosen.push_back(p);
  if (chosen.empty()) return skip("no relation drawn");
  if (monomial_dim_exceeds(q, chosen, nil, s.max_dim)) return too_big(s);
  for (const Path& p : chosen) rels.push_back(Relation{{RelationTerm{Scalar(f, 1), p}}});
  return {build_algebra(std::move(q), std::move(rels), nil, f), {}};
}

// A commutative monomial in the loops, as a path (exponent vector order).
Path monomial_path(const std::vector<int>& exps) {
  Path p;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (int k = 0; k < exps[i]; ++k) p.push_back(static_cast<int>(i));
  return p;
}

Generated draw_commutative_local(const GeneratorSpec& s, std::mt19937_64& rng) {
  const int k = uniform(rng, 1, std::min(3, s.max_arrows));
  if (k > 1 && s.max_length < 3) return skip("nilbound too small for commutators");
  const int nil = uniform(rng, k > 1 ? 3 : 2, s.max_length);
  Quiver q;
  q.vertices = 1;
  for (int i = 0; i < k; ++i) q.arrows.push_back({std::string(1, "xyz"[i]), 0, 0});
  const Field f = Field::parse(s.field);
  std::vector<Relation> rels;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      rels.push_back(Relation{{RelationTerm{Scalar(f, 1), Path{i, j}}, RelationTerm{Scalar(f, -1), Path{j, i}}}});
  auto random_exps = [&](int degree) {
    std::vector<int> e(k, 0);
    for (int d = 0; d < degree; ++d) ++e[uniform(rng, 0, k - 1)];
    return e;
  };
  if (nil > 2) {
    for (int i = 0; i < k; ++i)
      if (uniform(rng, 0, 1)) {
        std::vector<int> e(k, 0);
        e[i] = uniform(rng, 2, nil - 1);
        rels.push_back(Relation{{RelationTerm{Scalar(f, 1), monomial_path(e)}}});
      }
    std::bernoulli_distribution extra(s.density);
    if (extra(rng)) rels.push_back(Relation{{RelationTerm{Scalar(f, 1), monomial_path(random_exps(uniform(rng, 2, nil - 1)))}}});
    if (k > 1 && extra(rng)) {
      const int deg = uniform(rng, 2, nil - 1);
      std::vector<int> e1 = random_exps(deg), e2 = random_exps(deg);
      if (e1 != e2) {
        const long c = uniform(rng, 1, 6);
        rels.push_back(Relation{{RelationTerm{Scalar(f, 1), monomial_path(e1)}, RelationTerm{Scalar(f, -c), monomial_path(e2)}}});
      }
    }
  }
  auto a = build_algebra(std::move(q), std::move(rels), nil, f);
  if (!a->is_commutative()) return skip("draw is not commutative");
  return {a, {}};
}

}  // namespace

Generated generate_one(const GeneratorSpec& spec, std::uint64_t seed, int index) {
  std::mt19937_64 rng(stream_seed(seed, spec.family, index));
  Generated g;
  try {
    if (spec.family == "nakayama")
      g = draw_nakayama(spec, rng);
    else if (spec.family == "truncated")
      g = draw_truncated(spec, rng);
    else if (spec.family == "monomial")
      g = draw_monomial(spec, rng);
    else if (spec.family == "commutative_local")
      g = draw_commutative_local(spec, rng);
    else
      throw ContractViolation("unknown family '" + spec.family + "'");
  } catch (const PresentationError& e) {
    return skip(std::string("inadmissible draw: ") + e.what());
  }
  if (g.algebra && g.algebra->dim() > spec.max_dim)
    return too_big(spec);
  return g;
}

GeneratedBatch generate(const GeneratorSpec& spec, std::uint64_t seed) {
  GeneratedBatch b;
  for (int i = 0; i < spec.count; ++i) {
    Generated g = generate_one(spec, seed, i);
    if (g.algebra)
      b.algebras.push_back(g.algebra);
    else
      b.skipped.push_back(spec.family + "#" + std::to_string(i) + ": " + g.skipped);
  }
  return b;
}

// Sweep ----------------------------------------------------------------------

nlohmann::json SweepResult::summary_with_timing() const {
  nlohmann::json j = summary;
  j["timing"] = {{"wall_time_s", wall_time_s}};
  return j;
}

SweepResult sweep(const SweepConfig& cfg) {
  Timer timer;
  SweepResult out;
  for (const auto& c : cfg.checks)
    if (!find_check(c)) throw ContractViolation("unknown check '" + c + "'");

  struct Job {
    AlgebraPtr algebra;
    std::string fp;
    std::size_t family;
    int index;
  };
  std::vector<Job> jobs;
  nlohmann::json fams = nlohmann::json::array();
  std::vector<std::string> skipped;
  for (std::size_t fi = 0; fi < cfg.families.size(); ++fi) {
    const auto& spec = cfg.families[fi];
    int made = 0, dropped = 0;
    for (int i = 0; i < spec.count; ++i) {
      Generated g = generate_one(spec, cfg.seed, i);
      if (!g.algebra) {
        ++dropped;
        skipped.push_back(spec.family + "#" + std::to_string(i) + ": " + g.skipped);
        continue;
      }
      ++made;
      jobs.push_back({g.algebra, fingerprint_hex(*g.algebra), fi, i});
    }
    nlohmann::json fj = spec.to_json();
    fj["generated"] = made;
    fj["skipped"] = dropped;
    fams.push_back(fj);
  }

  std::vector<std::vector<VerdictReport>> results(jobs.size());
  std::vector<char> done(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<int> finished{0};
  std::atomic<bool> stop{false};
  std::mutex progress_mutex;
  auto worker = [&] {
    while (!stop) {
      const std::size_t k = next++;
      if (k >= jobs.size()) break;
      for (const auto& c : cfg.checks) {
        VerdictReport r;
        try {
          r = run_check(c, jobs[k].algebra, cfg.bound);
        } catch (const std::exception& e) {
          r.fingerprint = jobs[k].fp;
          r.check = c;
          r.bound = cfg.bound;
          r.verdict = Verdict::Fail;
          r.reason = std::string("engine error: ") + e.what();
        }
        if (r.verdict == Verdict::Fail && cfg.abort_on_fail) stop = true;
        results[k].push_back(std::move(r));
      }
      done[k] = 1;
      clear_resolution_cache();
      const int f = ++finished;
      if (cfg.progress) {
        std::lock_guard lock(progress_mutex);
        cfg.progress(f, static_cast<int>(jobs.size()));
      }
    }
  };
  const int nw = std::max(1, cfg.workers);
  if (nw == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  out.aborted = stop;

  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(jobs[x].fp, jobs[x].family, jobs[x].index) < std::tie(jobs[y].fp, jobs[y].family, jobs[y].index);
  });
  struct Counts {
    int pass = 0, at_bound = 0, fail = 0, inconclusive = 0;
    std::set<std::string> candidates, fails;
  };
  std::map<std::string, Counts> counts;
  int processed = 0;
  for (std::size_t k : order) {
    if (!done[k]) continue;
    ++processed;
    out.algebras.emplace(jobs[k].fp, jobs[k].algebra);
    for (auto& r : results[k]) {
      Counts& c = counts[r.check];
      switch (r.verdict) {
        case Verdict::Pass: ++c.pass; break;
        case Verdict::PassAtBound: ++c.at_bound; break;
        case Verdict::Inconclusive: ++c.inconclusive; break;
        case Verdict::Fail:
          ++c.fail;
          c.fails.insert(r.fingerprint);
          out.any_fail = true;
          break;
        case Verdict::CounterexampleCandidate:
          c.candidates.insert(r.fingerprint);
          out.any_candidate = true;
          break;
      }
      out.reports.push_back(std::move(r));
    }
  }
  std::stable_sort(out.reports.begin(), out.reports.end(), [](const VerdictReport& x, const VerdictReport& y) {
    return std::tie(x.fingerprint, x.check) < std::tie(y.fingerprint, y.check);
  });

  nlohmann::json checks = nlohmann::json::array();
  for (const auto& name : cfg.checks) {
    const Counts& c = counts[name];
    checks.push_back({{"name", name},
                      {"pass", c.pass},
                      {"pass_at_bound", c.at_bound},
                      {"fail", c.fail},
                      {"inconclusive", c.inconclusive},
                      {"candidates", nlohmann::json(std::vector<std::string>(c.candidates.begin(), c.candidates.end()))},
                      {"fails", nlohmann::json(std::vector<std::string>(c.fails.begin(), c.fails.end()))}});
  }
  out.summary = {{"bound", cfg.bound},
                 {"seed", cfg.seed},
                 {"max_projective_dim", engine_limits().max_projective_dim},
                 {"families", fams},
                 {"algebras", processed},
                 {"aborted", out.aborted},
                 {"checks", checks},
                 {"skipped", skipped.size()}};
  out.summary["skipped_draws"] = skipped;
  out.wall_time_s = timer.seconds();
  return out;
}

std::vector<std::string> persist_witnesses(const SweepResult& r, const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> written;
  fs::create_directories(dir);
  for (const auto& rep : r.reports) {
    if (rep.verdict != Verdict::Fail && rep.verdict != Verdict::CounterexampleCandidate) continue;
    const std::string kind = rep.verdict == Verdict::Fail ? "fail" : "candidate";
    const std::string stem = (fs::path(dir) / (kind + "_" + rep.fingerprint + "_" + rep.check)).string();
    if (auto it = r.algebras.find(rep.fingerprint); it != r.algebras.end()) {
      std::ofstream(stem + ".alg") << print_algebra(*it->second);
      written.push_back(stem + ".alg");
    }
    std::ofstream(stem + ".json") << rep.to_json().dump(2) << '\n';
    written.push_back(stem + ".json");
  }
  return written;
}

}  // namespace radhom

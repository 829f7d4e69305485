#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hypertrace/combinatorics.hpp"
#include "hypertrace/degeneracy.hpp"
#include "hypertrace/distinguishing.hpp"
#include "hypertrace/domination.hpp"
#include "hypertrace/errors.hpp"
#include "hypertrace/graph.hpp"
#include "hypertrace/hypergraph.hpp"
#include "hypertrace/trace_function.hpp"
#include "hypertrace/vc_dimension.hpp"
#include "hypertrace/version.hpp"

namespace hypertrace {

using json = nlohmann::json;

inline constexpr int report_schema = 1;

/// One numeric result with its exactness flag: "exact", "bound",
/// "safe-weakened", "interval" (lo/hi set), "skipped" or "infeasible" (no value).
struct Quantity {
  std::string name;
  std::optional<std::int64_t> value;
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  std::string exactness = "exact";

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

struct BoundEntry {
  std::string name;
  std::optional<std::int64_t> j;
  /// "lower" bounds are ceiled, "upper" bounds floored, into value.
  std::string direction = "lower";
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  std::int64_t value = 0;
  std::string form;
  std::string delta_estimate_used;
  std::string exactness = "bound";

  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct Section {
  std::string name;
  std::string subject;
  std::vector<Quantity> values;
  std::vector<vertex_id> witness;
  std::vector<BoundEntry> bounds;
  std::vector<std::string> notes;

  const Quantity* quantity(const std::string& q) const {
    for (const auto& v : values)
      if (v.name == q) return &v;
    return nullptr;
  }

  friend bool operator==(const Section&, const Section&) = default;
};

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Skip {
  std::string stage;
  std::string reason;

  friend bool operator==(const Skip&, const Skip&) = default;
};

struct Timing {
  std::string stage;
  double ms = 0;

  friend bool operator==(const Timing&, const Timing&) = default;
};

struct InstanceInfo {
  std::string kind;
  std::string source;
  std::optional<std::uint64_t> seed;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t incidence = 0;
  std::vector<std::string> warnings;

  friend bool operator==(const InstanceInfo&, const InstanceInfo&) = default;
};

struct AnalysisReport {
  int schema = report_schema;
  std::string tool = "hypertrace";
  std::string version = hypertrace_version;
  InstanceInfo instance;
  std::vector<Section> sections;
  std::vector<Check> checks;
  std::vector<Skip> skipped;
  std::vector<Timing> timings;

  const Section* find(const std::string& name, const std::string& subject) const {
    for (const auto& s : sections)
      if (s.name == name && s.subject == subject) return &s;
    return nullptr;
  }

  std::optional<std::int64_t> value(const std::string& name, const std::string& subject, const std::string& q) const {
    const Section* s = find(name, subject);
    if (!s) return std::nullopt;
    const Quantity* v = s->quantity(q);
    return v ? v->value : std::nullopt;
  }

  bool all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  /// 0 success, 2 an inequality check failed, 3 some exact stage hit the budget.
  int exit_code() const {
    if (!all_checks_pass()) return 2;
    if (!skipped.empty()) return 3;
    return 0;
  }

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// JSON mapping. Absent optionals are written as null.

namespace detail {

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null())
    v = j.at(key).get<T>();
  else
    v.reset();
}

}  // namespace detail

inline void to_json(json& j, const Quantity& q) {
  j = json{{"name", q.name}, {"exactness", q.exactness}};
  detail::put_optional(j, "value", q.value);
  if (q.lo || q.hi) {
    detail::put_optional(j, "lo", q.lo);
    detail::put_optional(j, "hi", q.hi);
  }
}
inline void from_json(const json& j, Quantity& q) {
  j.at("name").get_to(q.name);
  j.at("exactness").get_to(q.exactness);
  detail::get_optional(j, "value", q.value);
  detail::get_optional(j, "lo", q.lo);
  detail::get_optional(j, "hi", q.hi);
}

inline void to_json(json& j, const BoundEntry& b) {
  j = json{{"name", b.name},
           {"direction", b.direction},
           {"numerator", b.numerator},
           {"denominator", b.denominator},
           {"value", b.value},
           {"form", b.form},
           {"delta_estimate_used", b.delta_estimate_used},
           {"exactness", b.exactness}};
  detail::put_optional(j, "j", b.j);
}
inline void from_json(const json& j, BoundEntry& b) {
  j.at("name").get_to(b.name);
  j.at("direction").get_to(b.direction);
  j.at("numerator").get_to(b.numerator);
  j.at("denominator").get_to(b.denominator);
  j.at("value").get_to(b.value);
  j.at("form").get_to(b.form);
  j.at("delta_estimate_used").get_to(b.delta_estimate_used);
  j.at("exactness").get_to(b.exactness);
  detail::get_optional(j, "j", b.j);
}

inline void to_json(json& j, const Section& s) {
  j = json{{"name", s.name}, {"subject", s.subject}, {"values", s.values},
           {"witness", s.witness}, {"bounds", s.bounds}, {"notes", s.notes}};
}
inline void from_json(const json& j, Section& s) {
  j.at("name").get_to(s.name);
  j.at("subject").get_to(s.subject);
  j.at("values").get_to(s.values);
  j.at("witness").get_to(s.witness);
  j.at("bounds").get_to(s.bounds);
  j.at("notes").get_to(s.notes);
}

inline void to_json(json& j, const Check& c) { j = json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }
inline void from_json(const json& j, Check& c) {
  j.at("name").get_to(c.name);
  j.at("pass").get_to(c.pass);
  j.at("detail").get_to(c.detail);
}

inline void to_json(json& j, const Skip& s) { j = json{{"stage", s.stage}, {"reason", s.reason}}; }
inline void from_json(const json& j, Skip& s) {
  j.at("stage").get_to(s.stage);
  j.at("reason").get_to(s.reason);
}

inline void to_json(json& j, const Timing& t) { j = json{{"stage", t.stage}, {"ms", t.ms}}; }
inline void from_json(const json& j, Timing& t) {
  j.at("stage").get_to(t.stage);
  j.at("ms").get_to(t.ms);
}

inline void to_json(json& j, const InstanceInfo& i) {
  j = json{{"kind", i.kind}, {"source", i.source}, {"n", i.n}, {"m", i.m}, {"incidence", i.incidence},
           {"warnings", i.warnings}};
  detail::put_optional(j, "seed", i.seed);
}
inline void from_json(const json& j, InstanceInfo& i) {
  j.at("kind").get_to(i.kind);
  j.at("source").get_to(i.source);
  j.at("n").get_to(i.n);
  j.at("m").get_to(i.m);
  j.at("incidence").get_to(i.incidence);
  j.at("warnings").get_to(i.warnings);
  detail::get_optional(j, "seed", i.seed);
}

inline void to_json(json& j, const AnalysisReport& r) {
  j = json{{"schema", r.schema},     {"tool", r.tool},     {"version", r.version}, {"instance", r.instance},
           {"sections", r.sections}, {"checks", r.checks}, {"skipped", r.skipped}, {"timings_ms", r.timings}};
}
inline void from_json(const json& j, AnalysisReport& r) {
  j.at("schema").get_to(r.schema);
  if (r.schema != report_schema) throw invalid_input("unsupported report schema " + std::to_string(r.schema));
  j.at("tool").get_to(r.tool);
  j.at("version").get_to(r.version);
  j.at("instance").get_to(r.instance);
  j.at("sections").get_to(r.sections);
  j.at("checks").get_to(r.checks);
  j.at("skipped").get_to(r.skipped);
  j.at("timings_ms").get_to(r.timings);
}

// ---------------------------------------------------------------------------
// Orchestration

struct Instance {
  std::variant<Graph, Hypergraph> data;
  std::string source;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> warnings;

  bool is_graph() const noexcept { return std::holds_alternative<Graph>(data); }
};

struct Analyses {
  bool degeneracy = true;
  bool traces = true;
  bool vc = true;
  bool dt = true;
  bool domination = true;
  bool tree = true;
};

struct ReportOptions {
  Analyses analyses;
  Budget budget;
  std::size_t exact_limit = default_exact_limit;
  std::size_t j_max = 6;
  std::size_t k_max = 12;
};

namespace detail {

inline Quantity exact_q(std::string name, std::int64_t v) { return {std::move(name), v, {}, {}, "exact"}; }
inline Quantity bound_q(std::string name, std::int64_t v, bool weakened = false) {
  return {std::move(name), v, {}, {}, weakened ? "safe-weakened" : "bound"};
}
inline Quantity skipped_q(std::string name) { return {std::move(name), {}, {}, {}, "skipped"}; }

inline Quantity reduced_q(const DegeneracyTriple& t) {
  if (t.reduced_exact) return exact_q("reduced", static_cast<std::int64_t>(t.reduced_lo));
  return {"reduced", {}, static_cast<std::int64_t>(t.reduced_lo), static_cast<std::int64_t>(t.reduced_hi), "interval"};
}

inline BoundEntry lower_entry(const NamedBound& b) {
  BoundEntry e;
  e.name = b.name;
  if (b.j) e.j = static_cast<std::int64_t>(*b.j);
  e.numerator = b.value.num;
  e.denominator = b.value.den;
  e.value = b.value.ceil();
  e.form = b.form;
  e.delta_estimate_used = b.delta_estimate_used;
  e.exactness = b.safe_weakened ? "safe-weakened" : "bound";
  return e;
}

inline BoundEntry dt_entry(const DtBound& b) {
  return lower_entry({"dt", b.j, b.value, to_string(b.form),
                      (b.safe_weakened ? "classic=" : "reduced=") + std::to_string(b.delta_used), b.safe_weakened});
}

inline BoundEntry upper_entry(std::string name, std::optional<std::size_t> j, Fraction v, std::string form,
                              std::string delta) {
  BoundEntry e;
  e.name = std::move(name);
  if (j) e.j = static_cast<std::int64_t>(*j);
  e.direction = "upper";
  e.numerator = v.num;
  e.denominator = v.den;
  e.value = v.floor();
  e.form = std::move(form);
  e.delta_estimate_used = std::move(delta);
  return e;
}

class ReportBuilder {
 public:
  ReportBuilder(AnalysisReport& r, const ReportOptions& opt) : r_(r), opt_(opt) {}

  /// Runs a stage, recording its time; budget overruns become skip entries.
  void stage(const std::string& name, const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const budget_exceeded& e) {
      skip(name, e.what());
    }
    const auto t1 = std::chrono::steady_clock::now();
    r_.timings.push_back({name, std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }

  void skip(const std::string& stage, const std::string& reason) { r_.skipped.push_back({stage, reason}); }
  void check(std::string name, bool pass, std::string detail = {}) {
    r_.checks.push_back({std::move(name), pass, std::move(detail)});
  }
  Section& section(std::string name, std::string subject) {
    r_.sections.push_back(Section{std::move(name), std::move(subject), {}, {}, {}, {}});
    return r_.sections.back();
  }

  const ReportOptions& options() const { return opt_; }

  void degeneracy(const Hypergraph& h, const std::string& subject, const DegeneracyTriple& t) {
    auto& s = section("degeneracy", subject);
    s.values = {exact_q("pseudo", static_cast<std::int64_t>(t.pseudo)), reduced_q(t),
                exact_q("classic", static_cast<std::int64_t>(t.classic))};
    check("sandwich pseudo <= reduced <= classic (" + subject + ")",
          t.pseudo <= t.reduced_lo && t.reduced_lo <= t.reduced_hi && t.reduced_hi <= t.classic);
    const std::size_t distinct = h.distinct_edges(true).size();
    check("distinct edges <= n * classic (" + subject + ")", distinct <= h.num_vertices() * t.classic,
          std::to_string(distinct) + " <= " + std::to_string(h.num_vertices() * t.classic));
  }

  std::optional<std::size_t> vc_section(const VcResult& v, const std::string& subject, const Hypergraph& h) {
    auto& s = section("vc", subject);
    s.values = {exact_q("dimension", static_cast<std::int64_t>(v.dimension)),
                bound_q("upper_bound", static_cast<std::int64_t>(v.upper_bound_used)),
                exact_q("nodes_enumerated", static_cast<std::int64_t>(v.nodes_enumerated))};
    s.witness = v.witness;
    check("vc <= floor(log2 classic) + 1 (" + subject + ")", v.dimension <= v.upper_bound_used);
    const std::size_t distinct = h.distinct_edges(false).size();
    check("2^vc <= distinct edges (" + subject + ")", v.dimension == 0 || (std::size_t{1} << v.dimension) <= distinct);
    check("vc witness is shattered (" + subject + ")", v.witness.empty() || is_shattered(h, v.witness));
    return v.dimension;
  }

  void traces(const Hypergraph& h, const std::string& subject, const DegeneracyTriple& t, std::optional<std::size_t> vc) {
    TraceCache cache(h);
    const std::size_t kmax = std::min(h.num_vertices(), opt_.k_max);
    for (std::size_t k = 0; k <= kmax; ++k) {
      if (saturating_mul(binomial(h.num_vertices(), k), 2) > opt_.budget.subsets) {
        skip("trace_function " + subject + " k=" + std::to_string(k), "C(n,k) exceeds the subset budget");
        continue;
      }
      const BoundProfile p = bound_profile(h, k, t, vc, cache, opt_.budget);
      auto& s = section("trace_function", subject + " k=" + std::to_string(k));
      s.values.push_back(p.exact ? exact_q("T", static_cast<std::int64_t>(*p.exact)) : skipped_q("T"));
      s.values.push_back(p.exact_with_empty ? exact_q("T_with_empty", static_cast<std::int64_t>(*p.exact_with_empty))
                                            : skipped_q("T_with_empty"));
      s.witness = p.witness;
      s.bounds.push_back(upper_entry("max-degree", std::nullopt, p.max_degree, "k(D+1)/2+1", "max degree"));
      const std::string dname = (t.reduced_exact ? "reduced=" : "classic=") + std::to_string(p.lemma_chain.delta_used);
      s.bounds.push_back(upper_entry("reduced*k", std::nullopt,
                                     Fraction(static_cast<std::int64_t>(p.lemma_chain.reduced_times_k)), "delta*k", dname));
      s.bounds.push_back(upper_entry("classic*k", std::nullopt,
                                     Fraction(static_cast<std::int64_t>(p.lemma_chain.classic_times_k)), "delta*k",
                                     "classic=" + std::to_string(t.classic)));
      for (const auto& e : p.lemma_chain.entries)
        s.bounds.push_back(upper_entry("lemma chain", e.j, Fraction(static_cast<std::int64_t>(e.bound)),
                                       e.t_exact ? "exact-T" : "power-of-two", dname));
      if (p.sauer_shelah) {
        auto e = upper_entry("sauer-shelah", std::nullopt, Fraction(static_cast<std::int64_t>(*p.sauer_shelah)),
                             "counts empty trace", "vc=" + std::to_string(*vc));
        s.bounds.push_back(e);
      }
      if (p.lower_L) {
        BoundEntry e;
        e.name = "L(H,k)";
        e.numerator = e.value = static_cast<std::int64_t>(*p.lower_L);
        e.form = "counts empty trace";
        s.bounds.push_back(e);
      }
      const auto bad = bound_violations(p);
      std::string detail;
      for (const auto& b : bad) detail += (detail.empty() ? "" : "; ") + b;
      check("trace bounds hold (" + subject + " k=" + std::to_string(k) + ")", bad.empty(), detail);
    }
  }

  /// dt exact and its lower bounds; returns the exact value when computed.
  std::optional<std::size_t> dt(const Hypergraph& h, const std::string& subject, const DegeneracyTriple& t) {
    auto& s = section("dt", subject);
    if (h.has_repeated_edges()) {
      s.notes.push_back("dt undefined: repeated edges");
      return std::nullopt;
    }
    if (h.has_empty_edge()) {
      s.notes.push_back("dt undefined: an empty edge can never be hit");
      return std::nullopt;
    }
    TraceCache cache(h);
    const DtLowerBounds lb = dt_lower_bounds(h, t, opt_.j_max, cache);
    for (const auto& b : lb.entries) s.bounds.push_back(dt_entry(b));
    std::optional<std::size_t> exact;
    try {
      const DtResult d = dt_exact(h, opt_.budget);
      exact = d.value;
      s.values.push_back(exact_q("value", static_cast<std::int64_t>(d.value)));
      s.witness = d.witness;
    } catch (const budget_exceeded& e) {
      s.values.push_back(skipped_q("value"));
      skip("dt " + subject, e.what());
    }
    s.values.push_back(bound_q("certified_lower_bound", lb.certified, !t.reduced_exact));
    if (exact) {
      check("dt lower bounds <= dt (" + subject + ")", lb.certified <= static_cast<std::int64_t>(*exact),
            std::to_string(lb.certified) + " <= " + std::to_string(*exact));
      check("dt witness is a distinguishing transversal (" + subject + ")", is_distinguishing_transversal(h, s.witness));
    }
    return exact;
  }

 private:
  AnalysisReport& r_;
  const ReportOptions& opt_;
};

inline void analyze_graph(const Graph& g, ReportBuilder& b) {
  const auto& opt = b.options();
  const Hypergraph closed = neighborhood_hypergraph(g, true);
  const Hypergraph open = neighborhood_hypergraph(g, false);
  DegeneracyTriple t_closed, t_open;
  b.stage("degeneracy", [&] {
    t_closed = reduced_degeneracy(closed, opt.exact_limit);
    t_open = reduced_degeneracy(open, opt.exact_limit);
    if (opt.analyses.degeneracy) {
      b.degeneracy(closed, "closed", t_closed);
      b.degeneracy(open, "open", t_open);
      b.check("classic(closed) <= max degree + 1", t_closed.classic <= g.max_degree() + 1);
      b.check("classic(open) <= max degree", t_open.classic <= g.max_degree());
    }
  });
  std::optional<std::size_t> vc;
  if (opt.analyses.vc) b.stage("vc", [&] { vc = b.vc_section(vc_neighborhood_exact(g, opt.budget), "closed", closed); });
  if (opt.analyses.traces) b.stage("trace_function", [&] { b.traces(simple_copy(closed), "closed", t_closed, vc); });

  std::optional<std::size_t> dt_closed, dt_open;
  if (opt.analyses.dt) {
    b.stage("dt", [&] {
      dt_closed = b.dt(closed, "closed", t_closed);
      dt_open = b.dt(open, "open", t_open);
    });
  }

  std::array<std::optional<std::size_t>, 3> gamma;
  if (opt.analyses.domination) {
    b.stage("domination", [&] {
      const DominationBounds db = domination_lower_bounds(g, opt.j_max, opt.exact_limit);
      for (DominationKind kind : all_domination_kinds) {
        const auto idx = static_cast<std::size_t>(kind);
        auto& s = b.section("domination", to_string(kind));
        for (const auto& nb : db.of(kind)) s.bounds.push_back(lower_entry(nb));
        s.notes = db.caveats[idx];
        DominationReport rep;
        try {
          rep = gamma_exact(g, kind, opt.budget);
        } catch (const budget_exceeded& e) {
          s.values.push_back(skipped_q("gamma"));
          b.skip(std::string("domination ") + to_string(kind), e.what());
          continue;
        }
        if (rep.infeasible) {
          s.values.push_back({"gamma", {}, {}, {}, "infeasible"});
          s.notes.push_back("infeasible: " + rep.infeasible->reason);
          s.witness = rep.infeasible->vertices;
          continue;
        }
        gamma[idx] = rep.exact;
        s.values.push_back(exact_q("gamma", static_cast<std::int64_t>(*rep.exact)));
        s.values.push_back(bound_q("certified_lower_bound", db.certified_of(kind)));
        s.witness = rep.witness;
        b.check(std::string("witness satisfies ") + to_string(kind), satisfies(g, kind, rep.witness));
        b.check(std::string("general bounds <= gamma ") + to_string(kind),
                db.certified_of(kind) <= static_cast<std::int64_t>(*rep.exact),
                std::to_string(db.certified_of(kind)) + " <= " + std::to_string(*rep.exact));
      }
      if (gamma[0] && gamma[1]) b.check("gamma ID >= gamma LD", *gamma[1] >= *gamma[0]);
      if (gamma[0] && gamma[2]) b.check("gamma OLD >= gamma LD", *gamma[2] >= *gamma[0]);
      if (gamma[1] && dt_closed) b.check("gamma ID = dt(closed)", *gamma[1] == *dt_closed);
      if (gamma[2] && dt_open) b.check("gamma OLD = dt(open)", *gamma[2] == *dt_open);
    });
  }

  if (opt.analyses.tree && is_tree(g)) {
    b.stage("tree", [&] {
      const TreeStats st = tree_stats(g);
      auto& s = b.section("tree", "stats");
      s.values = {exact_q("leaves", static_cast<std::int64_t>(st.leaf_count())),
                  exact_q("supports", static_cast<std::int64_t>(st.support_count()))};
      s.witness = st.canonical_supports;
      s.notes.push_back("witness lists the canonical support vertices");
      if (g.num_vertices() >= 2) {
        auto& c = b.section("tree", "certificates");
        for (const auto& item : tree_degeneracy_certificates(g, opt.exact_limit)) {
          Quantity q = item.exact ? exact_q(item.name, static_cast<std::int64_t>(item.value))
                                  : Quantity{item.name, {}, static_cast<std::int64_t>(item.lower.value_or(0)),
                                             static_cast<std::int64_t>(item.value), "interval"};
          c.values.push_back(q);
          b.check("tree certificate " + item.name, item.pass);
        }
      }
      const TreeBounds tb = tree_lower_bounds(g);
      auto& tbs = b.section("tree", "closed-form");
      if (!tb.note.empty()) tbs.notes.push_back(tb.note);
      if (!tb.applicable) return;
      auto add = [&](DominationKind kind, const Fraction& f) {
        tbs.bounds.push_back(lower_entry({std::string("tree ") + to_string(kind), std::nullopt, f, "closed form", "", false}));
        const auto idx = static_cast<std::size_t>(kind);
        if (gamma[idx])
          b.check(std::string("tree bound <= gamma ") + to_string(kind), f.ceil() <= static_cast<std::int64_t>(*gamma[idx]),
                  std::to_string(f.ceil()) + " <= " + std::to_string(*gamma[idx]));
      };
      add(DominationKind::LD, tb.ld);
      if (tb.id) add(DominationKind::ID, *tb.id);
      add(DominationKind::OLD, tb.old);
    });
  }
}

inline void analyze_hypergraph(const Hypergraph& h, ReportBuilder& b) {
  const auto& opt = b.options();
  DegeneracyTriple t;
  b.stage("degeneracy", [&] {
    t = reduced_degeneracy(h, opt.exact_limit);
    if (opt.analyses.degeneracy) b.degeneracy(h, "input", t);
  });
  std::optional<std::size_t> vc;
  if (opt.analyses.vc) b.stage("vc", [&] { vc = b.vc_section(vc_exact(h, opt.budget), "input", h); });
  if (opt.analyses.traces) b.stage("trace_function", [&] { b.traces(h, "input", t, vc); });
  if (opt.analyses.dt) b.stage("dt", [&] { b.dt(h, "input", t); });
}

}  // namespace detail

/// Runs the requested analyses. Exhaustive stages that exceed the budget are
/// listed under skipped; bounds are still reported.
inline AnalysisReport run_report(const Instance& inst, const ReportOptions& opt = {}) {
  AnalysisReport r;
  r.instance.source = inst.source;
  r.instance.seed = inst.seed;
  r.instance.warnings = inst.warnings;
  detail::ReportBuilder b(r, opt);
  if (const Graph* g = std::get_if<Graph>(&inst.data)) {
    r.instance.kind = "graph";
    r.instance.n = g->num_vertices();
    r.instance.m = g->num_edges();
    r.instance.incidence = 2 * g->num_edges();
    detail::analyze_graph(*g, b);
  } else {
    const Hypergraph& h = std::get<Hypergraph>(inst.data);
    r.instance.kind = "hypergraph";
    r.instance.n = h.num_vertices();
    r.instance.m = h.num_edges();
    r.instance.incidence = h.incidence_size();
    detail::analyze_hypergraph(h, b);
  }
  return r;
}

/// Plain-text rendering of a report.
inline std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.tool << ' ' << r.version << "  " << r.instance.kind << " n=" << r.instance.n << " m=" << r.instance.m;
  if (!r.instance.source.empty()) out << "  (" << r.instance.source << ')';
  out << '\n';
  for (const auto& w : r.instance.warnings) out << "warning: " << w << '\n';
  for (const auto& s : r.sections) {
    out << '\n' << s.name << " [" << s.subject << "]\n";
    for (const auto& q : s.values) {
      out << "  " << q.name << " = ";
      if (q.value)
        out << *q.value;
      else if (q.lo && q.hi)
        out << '[' << *q.lo << ", " << *q.hi << ']';
      else
        out << '-';
      out << "  (" << q.exactness << ")\n";
    }
    if (!s.witness.empty()) {
      out << "  witness = {";
      for (std::size_t i = 0; i < s.witness.size(); ++i) out << (i ? "," : "") << s.witness[i];
      out << "}\n";
    }
    for (const auto& bd : s.bounds) {
      out << "  " << bd.direction << ' ' << bd.name;
      if (bd.j) out << " j=" << *bd.j;
      out << ": " << bd.numerator;
      if (bd.denominator != 1) out << '/' << bd.denominator;
      out << " -> " << bd.value << "  [" << bd.form;
      if (!bd.delta_estimate_used.empty()) out << "; " << bd.delta_estimate_used;
      out << "; " << bd.exactness << "]\n";
    }
    for (const auto& note : s.notes) out << "  note: " << note << '\n';
  }
  out << "\nchecks:\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ')';
    out << '\n';
  }
  for (const auto& s : r.skipped) out << "skipped (budget): " << s.stage << ": " << s.reason << '\n';
  return out.str();
}

}  // namespace hypertrace

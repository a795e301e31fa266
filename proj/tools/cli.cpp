#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>

#include "orbitkit/action.hpp"
#include "orbitkit/algebra.hpp"
#include "orbitkit/constructions.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/mealy.hpp"
#include "orbitkit/orbit.hpp"

namespace orbitkit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  bool json = false;
  std::string seq;
  std::string lhs;
  std::string rhs;
  std::string word;
  std::string pre;
  std::optional<std::string> per;
  std::size_t node_bound = 10000;
  std::size_t step_bound = 256;
  std::size_t bound = 1000;
  std::size_t index_bound = 256;
  std::size_t max_pairs = 0;
  std::size_t element_bound = 200;
  std::size_t period_length = 1;
  std::size_t k = 1;
  bool group = false;
  bool list = false;
  std::string dot;
  std::string name;
  std::string base;
  std::string dollar;
};

class Report {
 public:
  Report(std::ostream& out, bool json) : out_(out), json_(json) {}

  void emit(const std::string& text, const Json& j) {
    if (json_) {
      out_ << j.dump() << '\n';
    } else {
      out_ << text;
    }
  }

 private:
  std::ostream& out_;
  bool json_;
};

std::string show(const Automaton& a, const StateSeq& s) { return s.empty() ? "()" : a.format(s); }
std::string show(const Automaton& a, const Word& w) { return w.empty() ? "()" : a.format(w); }

Json tokens(const Automaton& a, const StateSeq& s) {
  Json j = Json::array();
  for (const State q : s) j.push_back(a.token(q));
  return j;
}

Json tokens(const Automaton& a, const Word& w) {
  Json j = Json::array();
  for (const Letter x : w) j.push_back(a.token(x));
  return j;
}

Json upword_json(const Automaton& a, const UPWord& w) {
  return Json{{"pre", tokens(a, w.pre())}, {"per", tokens(a, w.per())}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << content)) throw Error("cannot write " + path);
}

UPWord upword_arg(const Automaton& a, const Options& o) {
  if (!o.per) throw ParseError("--per is required");
  const Word per = a.parse_word(*o.per);
  if (per.empty()) throw ParseError("--per must name at least one letter");
  return normalize(a.parse_word(o.pre), per);
}

// ---------------------------------------------------------------------------

int cmd_check(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const Classification c = classify(a);
  const std::pair<const char*, bool> rows[] = {
      {"deterministic", c.deterministic},           {"complete", c.complete},
      {"invertible", c.invertible},                 {"reversible", c.reversible},
      {"inverse-reversible", c.inverse_reversible}, {"bireversible", c.bireversible},
  };
  std::string text;
  Json j{{"command", "check"}, {"states", a.num_states()}, {"letters", a.num_letters()}};
  for (const auto& [name, value] : rows) {
    std::string label = name;
    label.resize(20, ' ');
    text += label + yes_no(value) + '\n';
    j[name] = value;
  }
  r.emit(text, j);
  return kDecided;
}

int cmd_scc(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const SccReport scc = scc_analysis(a);
  std::string text;
  Json comps = Json::array();
  for (std::size_t k = 0; k < scc.components.size(); ++k) {
    const auto& c = scc.components[k];
    text += "component " + std::to_string(k) + ": " + a.format(c.states);
    if (c.closed) text += " [closed]";
    if (c.bireversible) text += " [bireversible]";
    text += '\n';
    comps.push_back(
        {{"states", tokens(a, c.states)}, {"closed", c.closed}, {"bireversible", c.bireversible}});
  }
  r.emit(text, {{"command", "scc"}, {"components", comps}});
  return kDecided;
}

int cmd_transform(const std::string& name, const std::function<Automaton(const Automaton&)>& f,
                  const Options& o, Report& r) {
  const std::string text = format_automaton(f(read_automaton(o.file)));
  r.emit(text, {{"command", name}, {"automaton", text}});
  return kDecided;
}

int cmd_dot(const Options& o, Report& r) {
  const std::string text = automaton_to_dot(read_automaton(o.file));
  r.emit(text, {{"command", "dot"}, {"dot", text}});
  return kDecided;
}

Json undefined_json(const Automaton& a, const Undefined& u) {
  return {{"state", a.token(u.state)},
          {"letter", a.token(u.letter)},
          {"position", u.position},
          {"layer", u.layer}};
}

std::string undefined_text(const Automaton& a, const Undefined& u) {
  return "UNDEFINED state=" + a.format(StateSeq{u.state}) +
         " letter=" + a.format(Word{u.letter}) + " position=" + std::to_string(u.position) +
         '\n';
}

int cmd_act(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const StateSeq s = a.parse_states(o.seq);
  Json j{{"command", "act"}, {"seq", tokens(a, s)}};
  if (o.per) {
    const UPWord w = upword_arg(a, o);
    j["input"] = upword_json(a, w);
    const auto res = act_on_upword(a, s, w);
    if (const auto* u = std::get_if<Undefined>(&res)) {
      j["defined"] = false;
      j["undefined"] = undefined_json(a, *u);
      r.emit(undefined_text(a, *u), j);
      return kDecided;
    }
    const UPWord& img = std::get<UPWord>(res);
    j["defined"] = true;
    j["output"] = upword_json(a, img);
    r.emit("output: " + format_upword(a, img) + '\n', j);
    return kDecided;
  }
  const Word u = a.parse_word(o.word);
  j["input"] = tokens(a, u);
  const auto res = act(a, s, u);
  if (const auto* un = std::get_if<Undefined>(&res)) {
    j["defined"] = false;
    j["undefined"] = undefined_json(a, *un);
    r.emit(undefined_text(a, *un), j);
    return kDecided;
  }
  const ActResult& ar = std::get<ActResult>(res);
  j["defined"] = true;
  j["output"] = tokens(a, ar.output);
  j["next"] = tokens(a, ar.next);
  r.emit("output: " + show(a, ar.output) + "\nnext: " + show(a, ar.next) + '\n', j);
  return kDecided;
}

int cmd_equal(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const StateSeq lhs = a.parse_states(o.lhs);
  const StateSeq rhs = a.parse_states(o.rhs);
  Json j{{"command", "equal"}, {"lhs", tokens(a, lhs)}, {"rhs", tokens(a, rhs)}};
  if (o.per) {
    const UPWord w = upword_arg(a, o);
    const bool eq = function_equal_on_upword(a, lhs, rhs, w);
    j["restricted_to"] = upword_json(a, w);
    j["equal"] = eq;
    r.emit(std::string(eq ? "EQUAL" : "DIFFERENT") + " on prefixes of " + format_upword(a, w) +
               '\n',
           j);
    return kDecided;
  }
  try {
    const EqualityVerdict v = compare_functions(a, lhs, rhs, {o.max_pairs});
    j["equal"] = v.equal;
    j["pairs_visited"] = v.pairs_visited;
    if (v.equal) {
      r.emit("EQUAL pairs=" + std::to_string(v.pairs_visited) + '\n', j);
    } else {
      j["witness"] = tokens(a, v.witness);
      r.emit("DIFFERENT witness=" + a.format(v.witness) + '\n', j);
    }
    return kDecided;
  } catch (const ResourceLimit&) {
    j["equal"] = nullptr;
    j["max_pairs"] = o.max_pairs;
    r.emit("UNKNOWN max_pairs=" + std::to_string(o.max_pairs) + '\n', j);
    return kUnknown;
  }
}

int emit_orbit(const Automaton& a, const OrbitVerdict& v, const Options& o, Json j, Report& r) {
  std::string text;
  int code = kDecided;
  const OrbitGraph* graph = nullptr;
  if (const auto* f = std::get_if<FiniteOrbit>(&v)) {
    graph = &f->graph;
    j["verdict"] = "finite";
    if (f->size) {
      j["size"] = *f->size;
      text = "FINITE size=" + std::to_string(*f->size) + '\n';
    } else {
      j["size"] = nullptr;
      j["nodes_seen"] = f->graph.nodes.size();
      text = "FINITE size=unknown nodes_seen=" + std::to_string(f->graph.nodes.size()) +
             " node_bound=" + std::to_string(o.node_bound) + '\n';
    }
    if (f->torsion) {
      j["torsion"] = {{"i", f->torsion->i}, {"j", f->torsion->j}};
      text += "torsion of the reversed period in the dual: i=" + std::to_string(f->torsion->i) +
              " j=" + std::to_string(f->torsion->j) + '\n';
    }
  } else if (const auto* c = std::get_if<CertifiedInfinite>(&v)) {
    j["verdict"] = "infinite";
    j["witness"] = a.token(c->witness);
    j["gamma"] = tokens(a, c->gamma);
    text = "INFINITE (certified) witness=" + a.format(Word{c->witness}) +
           " gamma=" + a.format(c->gamma) + '\n';
  } else {
    const auto& b = std::get<BoundExceeded>(v);
    graph = &b.partial;
    code = kUnknown;
    j["verdict"] = "bound_exceeded";
    j["node_bound"] = b.node_bound;
    j["step_bound"] = b.step_bound;
    j["nodes_seen"] = b.partial.nodes.size();
    text = "BOUND EXCEEDED node_bound=" + std::to_string(b.node_bound) +
           " step_bound=" + std::to_string(b.step_bound) +
           " nodes_seen=" + std::to_string(b.partial.nodes.size()) + '\n';
  }
  if (!o.dot.empty() && graph) write_file(o.dot, orbit_to_dot(a, *graph));
  r.emit(text, j);
  return code;
}

int cmd_orbit(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const UPWord w = upword_arg(a, o);
  Json j{{"command", "orbit"}, {"word", upword_json(a, w)}};
  const OrbitVerdict cert = certify_infinite(a, w);
  if (std::holds_alternative<CertifiedInfinite>(cert)) return emit_orbit(a, cert, o, j, r);
  return emit_orbit(a, orbit_semidecide(a, w, o.step_bound, o.node_bound), o, j, r);
}

int cmd_certify(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const UPWord w = upword_arg(a, o);
  const OrbitVerdict v = certify_infinite(a, w);
  Json j{{"command", "certify"}, {"word", upword_json(a, w)}};
  if (const auto* c = std::get_if<CertifiedInfinite>(&v)) {
    j["certified"] = true;
    j["witness"] = a.token(c->witness);
    j["gamma"] = tokens(a, c->gamma);
    j["component"] = c->component;
    r.emit("INFINITE (certified) witness=" + a.format(Word{c->witness}) +
               " gamma=" + a.format(c->gamma) + '\n' + c->reason + '\n',
           j);
    return kDecided;
  }
  const auto gamma = infinite_orbit_letters(a);
  j["certified"] = false;
  j["gamma"] = tokens(a, gamma);
  r.emit(gamma.empty() ? "NOT APPLICABLE (needs a reversible, non-bireversible G-automaton with "
                         "a closed non-bireversible dual component)\n"
                       : "UNKNOWN (period avoids gamma=" + a.format(gamma) + ")\n",
         j);
  return kUnknown;
}

int cmd_extract(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const UPWord w = upword_arg(a, o);
  const auto e = extract_periodic_finite(a, w, o.index_bound);
  Json j{{"command", "extract"}, {"word", upword_json(a, w)}, {"index_bound", o.index_bound}};
  if (!e) {
    j["found"] = false;
    r.emit("NONE FOUND index_bound=" + std::to_string(o.index_bound) + '\n', j);
    return kUnknown;
  }
  j["found"] = true;
  j["u"] = tokens(a, e->u);
  j["v"] = tokens(a, e->v);
  j["k"] = e->k;
  j["l"] = e->l;
  r.emit("u: " + show(a, e->u) + "\nv: " + show(a, e->v) + "\nk=" + std::to_string(e->k) +
             " l=" + std::to_string(e->l) + '\n',
         j);
  return kDecided;
}

int cmd_order(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const StateSeq s = a.parse_states(o.seq);
  const TorsionVerdict v = element_order(a, s, o.bound);
  Json j{{"command", "order"}, {"seq", tokens(a, s)}, {"bound", o.bound}};
  if (const auto* t = std::get_if<Torsion>(&v)) {
    j["torsion"] = true;
    j["i"] = t->i;
    j["j"] = t->j;
    r.emit("TORSION i=" + std::to_string(t->i) + " j=" + std::to_string(t->j) + '\n', j);
    return kDecided;
  }
  const auto& nf = std::get<NoneFound>(v);
  j["torsion"] = false;
  j["powers_checked"] = nf.bound;
  j["machine_limit_reached"] = nf.limited;
  r.emit("NONE FOUND bound=" + std::to_string(nf.bound) +
             (nf.limited ? " (stopped early: power machine exceeded " +
                               std::to_string(kDefaultMachineLimit) + " states)"
                         : "") +
             '\n',
         j);
  return kUnknown;
}

int emit_enumeration(const Automaton& a, const Enumeration& e,
                     const Options& o, Json j, Report& r) {
  if (!o.dot.empty()) write_file(o.dot, cayley_to_dot(a, e.set));
  const std::size_t n = e.set.elements.size();
  j["bound"] = e.bound;
  j["complete"] = e.complete;
  j["size"] = n;
  std::string text = e.complete ? "FINITE size=" + std::to_string(n) + " bound=" +
                                      std::to_string(e.bound) + '\n'
                                : "BOUND EXCEEDED bound=" + std::to_string(e.bound) + '\n';
  if (o.list) {
    Json elems = Json::array();
    for (const auto& s : e.set.elements) {
      elems.push_back(tokens(a, s));
      text += "  " + show(a, s) + '\n';
    }
    j["elements"] = elems;
  }
  r.emit(text, j);
  return e.complete ? kDecided : kUnknown;
}

int cmd_finiteness(const Options& o, Report& r) {
  const Automaton base = read_automaton(o.file);
  const Automaton a = o.group ? group_closure(base) : base;
  return emit_enumeration(a, semigroup_enumerate(a, o.bound), o,
                          {{"command", "finiteness"}, {"group", o.group}}, r);
}

int cmd_ideal(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const StateSeq s = a.parse_states(o.seq);
  return emit_enumeration(a, left_ideal(a, s, o.bound), o,
                          {{"command", "ideal"}, {"seq", tokens(a, s)}}, r);
}

int cmd_cayley(const Options& o, Report& r) {
  const Automaton base = read_automaton(o.file);
  const Automaton a = o.group ? group_closure(base) : base;
  const Enumeration e = semigroup_enumerate(a, o.bound);
  std::string dot = cayley_to_dot(a, e.set);
  if (!o.dot.empty()) write_file(o.dot, dot);
  const std::string status = std::string(e.complete ? "complete" : "incomplete") +
                             " size=" + std::to_string(e.set.elements.size()) +
                             " bound=" + std::to_string(e.bound);
  r.emit("// " + status + '\n' + dot, {{"command", "cayley"},
                                       {"complete", e.complete},
                                       {"size", e.set.elements.size()},
                                       {"bound", e.bound},
                                       {"dot", dot}});
  return e.complete ? kDecided : kUnknown;
}

int cmd_crosscheck(const Options& o, Report& r) {
  const Automaton a = read_automaton(o.file);
  const Word w = a.parse_word(o.word);
  const CrosscheckReport rep =
      ideal_vs_orbit_crosscheck(a, w, {o.element_bound, o.node_bound, o.period_length});
  std::string text = "ideal: " +
                     (rep.ideal_complete ? "FINITE size=" + std::to_string(rep.ideal_size)
                                         : std::string("BOUND EXCEEDED")) +
                     " element_bound=" + std::to_string(o.element_bound) + '\n';
  Json samples = Json::array();
  for (const auto& s : rep.samples) {
    const char* outcome = s.outcome == CrosscheckSample::Outcome::finite ? "finite"
                          : s.outcome == CrosscheckSample::Outcome::certified_infinite
                              ? "infinite"
                              : "unknown";
    text += "  per=" + a.format(s.period) + " orbit=" + outcome +
            " nodes=" + std::to_string(s.nodes) + '\n';
    samples.push_back({{"per", tokens(a, s.period)}, {"orbit", outcome}, {"nodes", s.nodes}});
  }
  text += rep.consistent() ? "CONSISTENT\n"
                           : "CONTRADICTIONS " + std::to_string(rep.contradictions) + '\n';
  r.emit(text, {{"command", "crosscheck"},
                {"word", tokens(a, w)},
                {"ideal_complete", rep.ideal_complete},
                {"ideal_size", rep.ideal_size},
                {"element_bound", o.element_bound},
                {"node_bound", o.node_bound},
                {"samples", samples},
                {"contradictions", rep.contradictions}});
  return rep.consistent() ? kDecided : kUnknown;
}

GillibertInput gillibert_input(const Options& o) {
  return {read_automaton(o.base), o.dollar};
}

int cmd_construct(const Options& o, Report& r) {
  Automaton a;
  if (o.name == "adding") {
    a = adding_machine();
  } else if (o.name == "grigorchuk") {
    a = grigorchuk();
  } else if (o.name == "pq") {
    a = pq_automaton();
  } else if (o.name == "t1") {
    a = t1_automaton();
  } else if (o.name == "gillibert") {
    if (o.base.empty() || o.dollar.empty()) {
      throw ParseError("construct gillibert needs --base FILE and --dollar TOKEN");
    }
    a = gillibert_extend(gillibert_input(o)).automaton;
  } else {
    throw ParseError("unknown construction '" + o.name +
                     "' (expected adding, grigorchuk, pq, t1 or gillibert)");
  }
  const std::string text = format_automaton(a);
  r.emit(text, {{"command", "construct"}, {"name", o.name}, {"automaton", text}});
  return kDecided;
}

int cmd_reduce_word(const Options& o, Report& r) {
  const GillibertAutomaton g = gillibert_extend(gillibert_input(o));
  const StateSeq p = g.automaton.parse_states(o.seq);
  const Word w = reduction_word(g, p);
  r.emit(g.automaton.format(w) + '\n',
         {{"command", "reduce-word"}, {"seq", tokens(g.automaton, p)},
          {"word", tokens(g.automaton, w)}});
  return kDecided;
}

int cmd_dagger_check(const Options& o, Report& r) {
  const GillibertInput in = gillibert_input(o);
  const GillibertAutomaton g = gillibert_extend(in);
  const StateSeq p = g.automaton.parse_states(o.seq);
  const bool holds = verify_dagger(in, p, o.k);
  r.emit(std::string(holds ? "HOLDS" : "FAILS") + " k=" + std::to_string(o.k) +
             " lambda_length=" + std::to_string(lambda(p).size()) + '\n',
         {{"command", "dagger-check"}, {"seq", tokens(g.automaton, p)}, {"k", o.k},
          {"holds", holds}});
  return kDecided;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mealy automata: actions, orbits of ultimately periodic words, automaton "
               "semigroups.\nState sequences are written in left-action order: the leftmost "
               "state is applied last.",
               "orbitkit"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print one JSON object per report instead of text");

  const auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Automaton file")->required()->check(CLI::ExistingFile);
  };
  const auto word_args = [&](CLI::App* sub, bool required) {
    sub->add_option("--pre", o.pre, "Preperiod tokens");
    auto* per = sub->add_option("--per", o.per, "Period tokens");
    if (required) per->required();
  };
  const auto positive = CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max());

  std::vector<std::pair<CLI::App*, std::function<int(const Options&, Report&)>>> commands;
  const auto add = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, handler);
    return sub;
  };

  file_arg(add("check", "Print the six classification flags", cmd_check));
  file_arg(add("scc", "Strongly connected components of the state graph", cmd_scc));
  file_arg(add("dot", "Graphviz rendering of the automaton", cmd_dot));
  file_arg(add("dual", "Print the dual automaton", [](const Options& op, Report& r) {
    return cmd_transform("dual", dual, op, r);
  }));
  file_arg(add("inverse", "Print the inverse automaton", [](const Options& op, Report& r) {
    return cmd_transform("inverse", inverse, op, r);
  }));
  file_arg(add("closure", "Print the automaton united with its inverse",
               [](const Options& op, Report& r) {
                 return cmd_transform("closure", group_closure, op, r);
               }));

  auto* act_cmd = add("act", "Apply a state sequence to a word (--word) or to pre(per)^w",
                      cmd_act);
  file_arg(act_cmd);
  act_cmd->add_option("--seq", o.seq, "State sequence, leftmost applied last")->required();
  auto* act_word = act_cmd->add_option("--word", o.word, "Finite input word");
  word_args(act_cmd, false);
  act_word->excludes("--per");

  auto* equal_cmd = add("equal", "Decide whether two state sequences act identically", cmd_equal);
  file_arg(equal_cmd);
  equal_cmd->add_option("--lhs", o.lhs, "Left state sequence")->required();
  equal_cmd->add_option("--rhs", o.rhs, "Right state sequence")->required();
  equal_cmd->add_option("--max-pairs", o.max_pairs, "Cap on explored pairs (0 = none)");
  word_args(equal_cmd, false);

  auto* orbit_cmd = add("orbit", "Orbit finiteness of pre(per)^w", cmd_orbit);
  file_arg(orbit_cmd);
  word_args(orbit_cmd, true);
  orbit_cmd->add_option("--node-bound", o.node_bound, "Orbit nodes to explore")->check(positive);
  orbit_cmd->add_option("--step-bound", o.step_bound, "Powers tried by the torsion loop")
      ->check(positive);
  orbit_cmd->add_option("--dot", o.dot, "Write the orbital graph to FILE");

  auto* certify_cmd = add("certify", "Certify an infinite orbit", cmd_certify);
  file_arg(certify_cmd);
  word_args(certify_cmd, true);

  auto* extract_cmd =
      add("extract", "Find u v^w with a finite orbit from a word with a finite orbit",
          cmd_extract);
  file_arg(extract_cmd);
  word_args(extract_cmd, true);
  extract_cmd->add_option("--index-bound", o.index_bound, "Longest prefix scanned")
      ->check(positive);

  for (const char* name : {"order", "torsion"}) {
    auto* order_cmd = add(name, "First s^i = s^j among s^1..s^bound", cmd_order);
    file_arg(order_cmd);
    order_cmd->add_option("--seq", o.seq, "State sequence")->required();
    order_cmd->add_option("--bound", o.bound, "Largest power tried")->check(positive);
  }

  auto* fin_cmd = add("finiteness", "Enumerate the generated semigroup", cmd_finiteness);
  file_arg(fin_cmd);
  fin_cmd->add_option("--bound", o.bound, "Element bound")->check(positive);
  fin_cmd->add_flag("--group", o.group, "Enumerate the group (automaton and its inverse)");
  fin_cmd->add_flag("--list", o.list, "List the element witnesses");
  fin_cmd->add_option("--dot", o.dot, "Write the left Cayley graph to FILE");

  auto* ideal_cmd = add("ideal", "Enumerate the left ideal S s united with {s}", cmd_ideal);
  file_arg(ideal_cmd);
  ideal_cmd->add_option("--seq", o.seq, "Generator s")->required();
  ideal_cmd->add_option("--bound", o.bound, "Element bound")->check(positive);
  ideal_cmd->add_flag("--list", o.list, "List the element witnesses");
  ideal_cmd->add_option("--dot", o.dot, "Write the left Cayley graph to FILE");

  auto* cayley_cmd = add("cayley", "Left Cayley graph of the semigroup as DOT", cmd_cayley);
  file_arg(cayley_cmd);
  cayley_cmd->add_option("--bound", o.bound, "Element bound")->check(positive);
  cayley_cmd->add_flag("--group", o.group, "Use the automaton united with its inverse");
  cayley_cmd->add_option("--dot", o.dot, "Also write the graph to FILE");

  auto* cross_cmd = add("crosscheck", "Compare the dual left ideal of rev(w) with orbits of w per^w",
                        cmd_crosscheck);
  file_arg(cross_cmd);
  cross_cmd->add_option("--word", o.word, "Finite word w");
  cross_cmd->add_option("--element-bound", o.element_bound, "Ideal element bound")
      ->check(positive);
  cross_cmd->add_option("--node-bound", o.node_bound, "Orbit node bound")->check(positive);
  cross_cmd->add_option("--period-length", o.period_length, "Longest sampled period")
      ->check(positive);

  auto* construct_cmd = add("construct", "Print a built-in automaton", cmd_construct);
  construct_cmd->add_option("name", o.name, "adding, grigorchuk, pq, t1 or gillibert")
      ->required();
  construct_cmd->add_option("--base", o.base, "Base G-automaton file (gillibert)")
      ->check(CLI::ExistingFile);
  construct_cmd->add_option("--dollar", o.dollar, "Base state playing $ (gillibert)");

  auto* reduce_cmd = add("reduce-word", "Word * (a_p1,0) ... (a_pl,0) # for a base sequence",
                         cmd_reduce_word);
  auto* dagger_cmd = add("dagger-check", "Simulate the counter diagram for t powers",
                         cmd_dagger_check);
  for (auto* sub : {reduce_cmd, dagger_cmd}) {
    sub->add_option("--base", o.base, "Base G-automaton file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--dollar", o.dollar, "Base state playing $")->required();
    sub->add_option("--seq", o.seq, "Base state sequence p_l ... p_1")->required();
  }
  dagger_cmd->add_option("--k", o.k, "Number of $ lambda(p) blocks")->check(positive);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  Report report(out, o.json);
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(o, report);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace orbitkit::cli

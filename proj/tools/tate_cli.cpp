// tate: command-line front end.
// Exit codes: 0 success, 2 result computed under a heuristic bound, 1 error.

#include <CLI11.hpp>
#include <iostream>

#include "commands_families.hpp"

namespace {

using namespace cli;

struct FieldSpec {
  enum Kind { Q, Fp, Qt, Fpt } kind = Q;
  uint32_t p = 0;
  std::string name() const {
    switch (kind) {
      case Q: return "Q";
      case Fp: return "Fp:" + std::to_string(p);
      case Qt: return "Q(t)";
      case Fpt: return "Fp:" + std::to_string(p) + "(t)";
    }
    return "";
  }
};

FieldSpec parse_field(const std::string& s) {
  auto prime = [&](const std::string& digits) {
    try {
      size_t used = 0;
      long v = std::stol(digits, &used);
      if (used == digits.size() && v >= 2 && v < (1L << 31)) return (uint32_t)v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ParseError, "bad field '" + s + "'");
  };
  if (s == "Q") return {FieldSpec::Q, 0};
  if (s == "Qt") return {FieldSpec::Qt, 0};
  if (s.rfind("Fpt:", 0) == 0) return {FieldSpec::Fpt, prime(s.substr(4))};
  if (s.rfind("Fp:", 0) == 0) return {FieldSpec::Fp, prime(s.substr(3))};
  if (s.size() > 1 && s[0] == 'F') return {FieldSpec::Fp, prime(s.substr(1))};
  throw Error(ErrorCode::ParseError, "unknown field '" + s + "' (expected Q, Fp:<p>, Qt or Fpt:<p>)");
}

template <class F>
Outcome run_module(const RunConfig& c, const std::string& text, const std::string& field) {
  auto M = parse_module_file<F>(text);
  const auto& cmd = c.command;
  if (cmd == "reg") return run_reg(c, M);
  if (cmd == "betti") return run_betti(c, M, false);
  if (cmd == "cohomology") return run_betti(c, M, true);
  if (cmd == "pushforward") return run_pushforward(c, M, field);
  if (cmd == "oracle-compare") return run_oracle(c, M);
  if (cmd == "verify-monad") return run_monad(c, M);
  throw Error(ErrorCode::ParseError, "unknown command " + cmd);
}

template <class Fn>
Outcome with_field(const FieldSpec& f, Fn&& fn) {
  switch (f.kind) {
    case FieldSpec::Q: return fn(Rational{});
    case FieldSpec::Qt: return fn(RationalT{});
    case FieldSpec::Fp: {
      FpModulusScope scope(f.p);
      return fn(tate::Fp{});
    }
    case FieldSpec::Fpt: {
      FpModulusScope scope(f.p);
      return fn(FpT{});
    }
  }
  throw Error(ErrorCode::ParseError, "no field");
}

Outcome dispatch(const RunConfig& c) {
  if (c.command == "p1-strata") {
    auto f = parse_field(c.field.empty() ? (c.exhaustive ? "F3" : "F7") : c.field);
    if (f.kind != FieldSpec::Fp) throw Error(ErrorCode::ParseError, "p1-strata runs over a prime field");
    return run_strata(c, (int)f.p);
  }
  const std::string text = read_file(c.file);
  if (c.command == "voc-demo") {
    json in;
    try {
      in = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, c.file + ": " + e.what());
    }
    auto f = parse_field(!c.field.empty() ? c.field : in.value("field", std::string("Fp:101")));
    return with_field(f, [&](auto tag) { return run_voc<decltype(tag)>(c, in, f.name()); });
  }
  auto f = parse_field(!c.field.empty() ? c.field : module_file_field(text).value_or("Q"));
  return with_field(f, [&](auto tag) { return run_module<decltype(tag)>(c, text, f.name()); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tate resolutions and direct images over exterior algebras"};
  app.require_subcommand(1);
  RunConfig c;
  auto common = [&](CLI::App* s, bool file) {
    if (file) s->add_option("file", c.file, "module file (or complex JSON for voc-demo)")->required();
    s->add_option("--field", c.field, "scalar field: Q, Fp:<p>, Qt, Fpt:<p>");
    s->add_flag("--json", c.as_json, "JSON output");
    s->add_option("--seed", c.seed, "seed for randomized suites");
  };
  auto tate_flags = [&](CLI::App* s) {
    s->add_option("--corner-degree", c.corner, "corner degree s (default max(0, reg))");
    s->add_option("--left-steps", c.left_steps, "number of terms computed leftwards from the corner");
    s->add_option("--param-bound", c.param_bound, "param degree up to which exactness is checked");
  };
  struct Cmd {
    const char* name;
    const char* help;
  };
  for (auto [name, help] : {Cmd{"reg", "Castelnuovo-Mumford regularity"}, Cmd{"betti", "Betti table of the Tate resolution"},
                            Cmd{"cohomology", "cohomology table h^q(F(d))"},
                            Cmd{"pushforward", "direct image complex of F(j)"},
                            Cmd{"oracle-compare", "Tate route against the Hom/Koszul route"},
                            Cmd{"verify-monad", "check the Beilinson monad degree by degree"},
                            Cmd{"voc-demo", "versal family over the variety of complexes"},
                            Cmd{"p1-strata", "splitting strata of the universal extension on P^1"}}) {
    auto* s = app.add_subcommand(name, help);
    const std::string n = name;
    common(s, n != "p1-strata");
    s->callback([&c, n] { c.command = n; });
    if (n == "reg") s->add_option("--degree-bound", c.degree_bound, "certify regularity up to this degree");
    if (n == "betti" || n == "cohomology" || n == "pushforward" || n == "verify-monad") tate_flags(s);
    if (n == "pushforward") s->add_option("--twist", c.twist, "twist j");
    if (n == "oracle-compare") {
      s->add_option("--from", c.twist_lo, "first twist");
      s->add_option("--to", c.twist_hi, "last twist");
    }
    if (n == "verify-monad") {
      s->add_option("--from", c.from, "first degree");
      s->add_option("--to", c.to, "last degree");
    }
    if (n == "p1-strata") {
      s->add_option("--d", c.d, "degree d");
      s->add_option("--r", c.r, "rank r");
      s->add_flag("--exhaustive", c.exhaustive, "sweep every point");
      s->add_option("--samples", c.samples, "random points when not exhaustive");
    }
  }
  CLI11_PARSE(app, argc, argv);
  try {
    Outcome o = dispatch(c);
    if (c.as_json) {
      o.j["heuristic"] = o.heuristic;
      std::cout << o.j.dump(2) << "\n";
    } else {
      std::cout << o.text;
      if (o.heuristic) std::cerr << "warning: result computed under a heuristic bound\n";
    }
    return o.heuristic ? 2 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "negabeta/capset.hpp"
#include "negabeta/errors.hpp"
#include "negabeta/expr.hpp"
#include "negabeta/group_add.hpp"
#include "negabeta/integer_sets.hpp"
#include "negabeta/numeration.hpp"
#include "negabeta/verify.hpp"

using nlohmann::json;
using namespace negabeta;

namespace {

constexpr int kDigits = 6;
constexpr char kPoint[] = "\xE2\x80\xA2";  // radix point mark

// Parsed --base flag: always a ground field, and the quadratic family base
// when the spec names one.
struct ParsedBase {
  std::optional<PisotBase> quad;
  AlgebraicRealPtr field;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw ParseError("expected an integer, got \"" + s + "\"");
  return v;
}

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("expected an integer, got \"" + s + "\"");
  }
}

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s, 10);
    if (q.get_den() == 0) throw ParseError("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("expected a rational, got \"" + s + "\"");
  }
}

ParsedBase parse_base(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("base spec must be plus:m,n | minus:m,n | poly:c0,...,cd@lo,hi");
  std::string head = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (head == "plus" || head == "minus") {
    std::vector<std::string> mn = split_list(rest, ',');
    if (mn.size() != 2) throw ParseError("family base needs exactly m,n");
    PisotBase b = make_base(head == "plus" ? Family::Plus : Family::Minus,
                            parse_long(mn[0]), parse_long(mn[1]));
    AlgebraicRealPtr f = b.field();
    return {std::move(b), std::move(f)};
  }
  if (head == "poly") {
    std::size_t at = rest.find('@');
    if (at == std::string::npos)
      throw ParseError("poly base needs a root interval: poly:c0,...,cd@lo,hi");
    std::vector<Integer> poly;
    for (const std::string& c : split_list(rest.substr(0, at), ','))
      poly.push_back(parse_integer(c));
    std::vector<std::string> ends = split_list(rest.substr(at + 1), ',');
    if (ends.size() != 2) throw ParseError("root interval needs lo,hi");
    return {std::nullopt,
            make_algebraic(std::move(poly), parse_rational(ends[0]), parse_rational(ends[1]))};
  }
  throw ParseError("unknown base family \"" + head + "\"");
}

// "[lo,hi)" and friends, with value expressions for the two ends.
Window parse_interval(const std::string& text, const AlgebraicRealPtr& field) {
  if (text.size() < 3) throw ParseError("interval too short: \"" + text + "\"");
  char open = text.front(), close = text.back();
  if (open != '[' && open != '(') throw ParseError("interval must open with [ or (");
  if (close != ']' && close != ')') throw ParseError("interval must close with ] or )");
  std::string inner = text.substr(1, text.size() - 2);
  int depth = 0;
  std::size_t cut = std::string::npos;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) {
      if (cut != std::string::npos)
        throw ParseError("interval needs exactly one top-level comma");
      cut = i;
    }
  }
  if (cut == std::string::npos) throw ParseError("interval needs two comma-separated ends");
  return make_window(parse_value(inner.substr(0, cut), field),
                     parse_value(inner.substr(cut + 1), field), open == '[', close == ']');
}

Mode parse_mode(const std::string& name) {
  return name == "pos" ? Mode::Pos : Mode::Neg;
}

PointSequence make_sequence(const ParsedBase& pb, Mode mode) {
  if (pb.quad) return PointSequence(*pb.quad, mode);
  if (mode == Mode::Neg)
    throw ConstraintViolation("negative mode needs a quadratic family base");
  return PointSequence::parry(pb.field);
}

NumerationSystem make_numeration(const ParsedBase& pb, Mode mode) {
  if (pb.quad) return make_system(*pb.quad, mode);
  if (mode == Mode::Neg)
    throw ConstraintViolation("negative mode needs a quadratic family base");
  return make_pos_system(pb.field);
}

std::string letters_text(const std::vector<int>& ls) {
  bool wide = std::any_of(ls.begin(), ls.end(), [](int d) { return d > 9; });
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i && wide) out += ',';
    out += std::to_string(ls[i]);
  }
  return out;
}

std::string digit_text(const DigitString& s) {
  if (s.digits.empty()) return std::string("0") + kPoint;
  if (s.point < 0 || s.digits.size() < static_cast<std::size_t>(s.point))
    throw ConstraintViolation("radix point outside the digit string");
  bool wide = std::any_of(s.digits.begin(), s.digits.end(), [](int d) { return d > 9; });
  std::size_t cut = s.digits.size() - static_cast<std::size_t>(s.point);
  std::string out;
  for (std::size_t i = 0; i < s.digits.size(); ++i) {
    if (i == cut) out += kPoint;
    else if (i && wide) out += ',';
    out += std::to_string(s.digits[i]);
  }
  if (cut == s.digits.size()) out += kPoint;
  return out;
}

std::string expansion_text(const Expansion& e) {
  std::string out = digit_text(e.integral);
  if (!e.fractional.is_zero())
    out += letters_text(e.fractional.preperiod()) + "(" +
           letters_text(e.fractional.period()) + ")...";
  return out;
}

json field_json(const FieldElement& x) {
  json coeffs = json::array();
  for (const Rational& c : x.coeffs()) coeffs.push_back(c.get_str());
  json minpoly = json::array();
  for (const Integer& c : x.base()->minpoly()) {
    // keep coefficients beyond 64 bits exact as text
    if (c.fits_slong_p()) minpoly.push_back(c.get_si());
    else minpoly.push_back(c.get_str());
  }
  return {{"coeffs", coeffs}, {"minpoly", minpoly}, {"approx", decimal_string(x, kDigits)}};
}

std::string value_text(const FieldElement& x) {
  return coefficient_string(x) + " ~ " + decimal_string(x, kDigits);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact digit systems and integer sets for positive and negative bases"};
  app.require_subcommand(1);

  std::string base_spec, format = "text", mode_name, value_expr, suite_name;
  std::string omega_text, window_text;
  long long from_index = 0, to_index = 0, j_index = 0, k_index = 0;
  long count = 0;
  bool backward = false;
  VerifyOptions vo{};

  auto add_base = [&](CLI::App* cmd, bool required) {
    CLI::Option* opt = cmd->add_option(
        "--base", base_spec, "base spec: plus:m,n | minus:m,n | poly:c0,...,cd@lo,hi");
    if (required) opt->required();
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_name, "digit system: pos (base beta) or neg (base -beta)")
        ->required()
        ->check(CLI::IsMember({"pos", "neg"}));
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* expand = app.add_subcommand("expand", "digit expansion of a value");
  add_base(expand, true);
  add_mode(expand);
  add_format(expand);
  expand->add_option("value", value_expr, "expression in b, e.g. \"4+1/b\"")->required();

  CLI::App* points = app.add_subcommand("points", "indexed points of the integer set");
  add_base(points, true);
  add_mode(points);
  add_format(points);
  points->add_option("--from", from_index, "first index")->required();
  points->add_option("--to", to_index, "last index")->required();

  CLI::App* word = app.add_subcommand("word", "gap word of the integer set");
  add_base(word, true);
  add_mode(word);
  add_format(word);
  word->add_option("--count", count, "letters to print")
      ->required()
      ->check(CLI::Range(1L, 1000000L));
  word->add_flag("--backward", backward, "letters left of the origin instead");

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  add_base(verify, false);
  add_format(verify);
  verify->add_option("suite", suite_name,
                     "gaps | language | union-theorem | cap-identities | addition | "
                     "sturmian | counterexamples")
      ->required();
  verify->add_option("--maxlen", vo.maxlen, "factor length bound")
      ->check(CLI::Range(std::size_t{1}, std::size_t{200}));
  verify->add_option("--bound", vo.bound, "index box half-width")
      ->check(CLI::Range(0LL, 5000LL));
  verify->add_option("--window", vo.window, "real-axis half-width")
      ->check(CLI::Range(1L, 1000L));

  CLI::App* add = app.add_subcommand("add", "group sum and actual sum of two points");
  add_base(add, true);
  add_mode(add);
  add_format(add);
  add->add_option("j", j_index, "first index")->required();
  add->add_option("k", k_index, "second index")->required();

  CLI::App* cap = app.add_subcommand("cap", "cut-and-project points for a window");
  add_base(cap, true);
  add_format(cap);
  cap->add_option("--omega", omega_text, "acceptance window, e.g. \"[0,b)\"")->required();
  cap->add_option("--window", window_text, "real enumeration window, e.g. \"[-10,10]\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(expand)) {
      ParsedBase pb = parse_base(base_spec);
      NumerationSystem sys = make_numeration(pb, parse_mode(mode_name));
      FieldElement x = parse_value(value_expr, pb.field);
      Expansion e = expansion_of(sys, x);
      if (format == "json") {
        json out = {{"digits", e.integral.digits},
                    {"point", e.integral.point},
                    {"rendered", expansion_text(e)},
                    {"value", field_json(x)}};
        if (!e.fractional.is_zero())
          out["fractional"] = {{"preperiod", e.fractional.preperiod()},
                               {"period", e.fractional.period()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "digits:  " << expansion_text(e) << "\n"
                  << "value:   " << coefficient_string(x) << "\n"
                  << "decimal: " << decimal_string(x, kDigits) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(points)) {
      if (from_index > to_index) throw ConstraintViolation("--from must not exceed --to");
      if (to_index - from_index > 100000) throw WindowTooWide("index range too wide");
      ParsedBase pb = parse_base(base_spec);
      PointSequence seq = make_sequence(pb, parse_mode(mode_name));
      if (format == "json") {
        json out = json::array();
        for (long long j = from_index; j <= to_index; ++j)
          out.push_back({{"index", j}, {"value", field_json(seq.point(j))}});
        std::cout << out.dump(2) << "\n";
      } else {
        for (long long j = from_index; j <= to_index; ++j)
          std::cout << "t_" << j << " = " << value_text(seq.point(j)) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(word)) {
      ParsedBase pb = parse_base(base_spec);
      PointSequence seq = make_sequence(pb, parse_mode(mode_name));
      PrefixFn prefixes = backward ? seq.backward_prefixes() : seq.forward_prefixes();
      Word w = prefixes(static_cast<std::size_t>(count));
      if (format == "json") {
        json out = {{"letters", w}, {"direction", backward ? "backward" : "forward"}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << letters_text(w) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(verify)) {
      std::optional<PisotBase> qb;
      if (!base_spec.empty()) qb = parse_base(base_spec).quad;
      Report rep = run_suite(suite_name, qb, vo);
      if (format == "json") {
        json checks = json::array();
        for (const CheckReport& c : rep)
          checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        json out = {{"suite", suite_name}, {"checks", checks}, {"pass", all_pass(rep)}};
        if (!base_spec.empty()) out["base"] = base_spec;
        std::cout << out.dump(2) << "\n";
      } else {
        for (const CheckReport& c : rep)
          std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      }
      return all_pass(rep) ? 0 : 1;
    }

    if (app.got_subcommand(add)) {
      ParsedBase pb = parse_base(base_spec);
      PointSequence seq = make_sequence(pb, parse_mode(mode_name));
      AdditionReport r = addition_report(seq, j_index, k_index);
      if (format == "json") {
        json out = {{"j", r.j},
                    {"k", r.k},
                    {"sum", field_json(r.sum)},
                    {"oplus_index", r.oplus_index},
                    {"oplus", field_json(seq.point(r.oplus_index))},
                    {"diff", field_json(r.diff)},
                    {"closest_index", r.closest_index},
                    {"closest", field_json(seq.point(r.closest_index))},
                    {"compatible", r.is_compatible_instance}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "t_" << r.j << " = " << value_text(seq.point(r.j)) << "\n"
                  << "t_" << r.k << " = " << value_text(seq.point(r.k)) << "\n"
                  << "sum = " << value_text(r.sum) << "\n"
                  << "oplus = t_" << r.oplus_index << " = "
                  << value_text(seq.point(r.oplus_index)) << "\n"
                  << "diff = " << value_text(r.diff) << "\n"
                  << "closest = t_" << r.closest_index << " = "
                  << value_text(seq.point(r.closest_index)) << "\n"
                  << "compatible: " << (r.is_compatible_instance ? "yes" : "no") << "\n";
      }
      return 0;
    }

    ParsedBase pb = parse_base(base_spec);
    if (!pb.quad)
      throw ConstraintViolation("cut-and-project commands need a quadratic family base");
    Scheme scheme = beta_scheme(*pb.quad);
    Window omega = parse_interval(omega_text, pb.field);
    Window real_window = parse_interval(window_text, pb.field);
    if (compare(real_window.hi - real_window.lo, pb.quad->rational(100000)) > 0)
      throw WindowTooWide("real window too wide");
    std::vector<FieldElement> pts = cap_points(scheme, omega, real_window);
    if (format == "json") {
      json out = json::array();
      for (const FieldElement& p : pts) out.push_back(field_json(p));
      std::cout << json{{"points", out}}.dump(2) << "\n";
    } else {
      for (const FieldElement& p : pts) std::cout << value_text(p) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

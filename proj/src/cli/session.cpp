#include "solidus/cli/session.hpp"

#include <sstream>
#include <vector>

#include "solidus/cli/parser.hpp"
#include "solidus/error.hpp"
#include "solidus/halfline.hpp"
#include "solidus/naturals.hpp"

namespace solidus::cli {

namespace {

constexpr std::string_view kHelp =
    "expressions: integers, rho, o, L, M, + - * / ^, e() u() inv() abs() shadow(), = < <=\n"
    ":classify x | :cmp x , y | :zup x, y, ... | :nat x | :arch x , y\n"
    ":check [--seed S] [--count N] [--only ID] | :help | :quit";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Column offsets in error messages refer to the argument text; shift them so
// they point into the whole line.
template <class F>
auto with_offset(std::size_t offset, F&& f) {
  try {
    return f();
  } catch (const SourceError& e) {
    throw SourceError(e.code(), e.column() + offset, e.what());
  }
}

std::vector<ExternalNum> eval_list(std::string_view args, std::size_t offset) {
  return with_offset(offset, [&] {
    std::vector<ExternalNum> out;
    for (const auto& e : parse_list(args)) out.push_back(eval(e));
    return out;
  });
}

std::vector<ExternalNum> eval_pair(std::string_view args, std::size_t offset, std::string_view command) {
  auto values = eval_list(args, offset);
  if (values.size() != 2) {
    throw Error(ErrorCode::SyntaxError, std::string(command) + " expects two expressions separated by ','");
  }
  return values;
}

std::uint64_t parse_count(std::string_view flag, std::string_view value) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(std::string(value), &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::SyntaxError, std::string(flag) + " expects a nonnegative integer");
}

}  // namespace

std::string render_error(const std::exception& e) {
  std::ostringstream out;
  out << "error: ";
  if (const auto* se = dynamic_cast<const SourceError*>(&e)) {
    out << to_string(se->code()) << " at column " << se->column();
  } else if (const auto* de = dynamic_cast<const Error*>(&e)) {
    out << to_string(de->code());
  } else {
    out << "Internal";
  }
  out << ": " << e.what();
  return out.str();
}

std::string Session::run_command(std::string_view line) {
  try {
    return dispatch(line);
  } catch (const std::exception& e) {
    return render_error(e);
  }
}

std::string Session::dispatch(std::string_view raw) {
  const std::string_view line = trim(raw);
  if (line.empty() || line.front() == '#') return {};
  // Offset of `line` inside `raw`, for error columns.
  const std::size_t lead = static_cast<std::size_t>(line.data() - raw.data());

  if (line.front() != ':') {
    const Expr e = with_offset(lead, [&] { return parse(line); });
    if (is_comparison(e)) return with_offset(lead, [&] { return eval_relation(e); }) ? "true" : "false";
    return with_offset(lead, [&] { return eval(e); }).str();
  }

  const std::size_t space = line.find_first_of(" \t");
  const std::string_view command = line.substr(0, space);
  const std::string_view args = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
  const std::size_t offset = args.empty() ? 0 : static_cast<std::size_t>(args.data() - raw.data());

  if (command == ":quit" || command == ":q") {
    quit_ = true;
    return {};
  }
  if (command == ":help") return std::string(kHelp);
  if (command == ":classify") {
    const auto values = eval_list(args, offset);
    if (values.size() != 1) throw Error(ErrorCode::SyntaxError, ":classify expects one expression");
    return std::string(to_string(classify(values.front())));
  }
  if (command == ":cmp") {
    const auto v = eval_pair(args, offset, ":cmp");
    return std::string(to_string(ext_compare(v[0], v[1])));
  }
  if (command == ":zup") return zup_finite(eval_list(args, offset)).str();
  if (command == ":nat") {
    const auto values = eval_list(args, offset);
    if (values.size() != 1) throw Error(ErrorCode::SyntaxError, ":nat expects one expression");
    return values.front().is_precise() && is_natural(values.front().rep()) ? "true" : "false";
  }
  if (command == ":arch") {
    const auto v = eval_pair(args, offset, ":arch");
    return archimedean_witness(v[0], v[1]).value().str();
  }
  if (command == ":check") return run_checks(args);
  throw Error(ErrorCode::SyntaxError, "unknown command '" + std::string(command) + "' (try :help)");
}

std::string Session::run_checks(std::string_view args) {
  axioms::GeneratorConfig cfg = cfg_;
  std::size_t count = 1000;
  std::string only;
  std::istringstream in{std::string(args)};
  std::string flag;
  while (in >> flag) {
    std::string value;
    if (!(in >> value)) throw Error(ErrorCode::SyntaxError, flag + " expects a value");
    if (flag == "--seed") {
      cfg.seed = parse_count(flag, value);
    } else if (flag == "--count") {
      count = parse_count(flag, value);
    } else if (flag == "--only") {
      only = value;
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown :check option '" + flag + "'");
    }
  }
  std::vector<axioms::CheckReport> reports;
  if (only.empty()) {
    reports = axioms::run_catalog(cfg, count);
  } else {
    reports.push_back(axioms::check(only, cfg, count));
  }
  std::string out;
  for (const auto& r : reports) {
    if (!r.passed()) checks_failed_ = true;
    out += axioms::render_report(r);
  }
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

std::string run_command(std::string_view line) { return Session().run_command(line); }

}  // namespace solidus::cli

// clausum: exact closed forms and certified arbitrary-precision numerics for
// rational-argument digamma values and Clausen 3F2[1,1,c; 2,c+1; 1] sums.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "clausum/clausum.hpp"

namespace {

using namespace clausum;

constexpr int kExitOk = 0;
constexpr int kExitVerdictMismatch = 1;
constexpr int kExitError = 2;

int env_default_digits() {
  const char* s = std::getenv("CLAUSUM_DIGITS");
  if (!s) return 50;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 10 || v > 100000) return 50;
  return static_cast<int>(v);
}

bool looks_negative_rational(const std::string& s) {
  if (s.size() < 2 || s[0] != '-' || !std::isdigit(static_cast<unsigned char>(s[1])))
    return false;
  bool slash = false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && i + 1 < s.size()) {
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

PsiRoute parse_route(const std::string& name) {
  return name == "gauss" ? PsiRoute::gauss : PsiRoute::murty;
}

Rational parse_rational_arg(const std::string& text) {
  Rational r = make_rational(text);
  if (r.str() != text)
    std::cerr << "note: argument " << text << " reduced to " << r.str() << "\n";
  return r;
}

int series_target_for(const PrecisionContext& ctx) {
  return std::max(10, ctx.digits - 10);
}

PrecisionContext series_context_for(const PrecisionContext& ctx) {
  return PrecisionContext(std::max(ctx.digits, series_target_for(ctx) + ctx.guard_digits),
                          ctx.guard_digits);
}

struct MethodResult {
  std::string method;
  std::string closed_form;  // empty for purely numeric routes
  HPReal value;
  std::optional<HPReal> eps;
};

void print_results_text(const std::string& head, const std::vector<MethodResult>& results,
                        int digits) {
  std::cout << head << "\n";
  for (const MethodResult& r : results) {
    std::cout << "  " << r.method << ":";
    if (!r.closed_form.empty()) std::cout << " " << r.closed_form << "\n    value =";
    std::cout << " " << r.value.str(digits);
    if (r.eps) std::cout << "  (certified eps <= " << r.eps->str(3) << ")";
    std::cout << "\n";
  }
}

void print_results_json(const std::string& command, const std::string& argument,
                        const std::vector<MethodResult>& results, int digits,
                        const std::string& route) {
  nlohmann::ordered_json root;
  root["tool"] = kToolName;
  root["version"] = kVersion;
  root["digits"] = digits;
  root["route"] = route;
  root["command"] = command;
  root["argument"] = argument;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const MethodResult& r : results) {
    nlohmann::ordered_json j;
    j["method"] = r.method;
    if (!r.closed_form.empty()) j["closed_form"] = r.closed_form;
    j["value"] = r.value.str(digits);
    if (r.eps) j["eps"] = r.eps->str(3);
    arr.push_back(std::move(j));
  }
  root["results"] = std::move(arr);
  std::cout << root.dump(2) << "\n";
}

int cmd_psi(const std::string& arg_text, int digits, const std::string& method,
            const std::string& format) {
  Rational r = parse_rational_arg(arg_text);
  PrecisionContext ctx(digits);
  std::vector<MethodResult> results;

  auto add_closed = [&](PsiRoute route) {
    ClosedForm cf = psi_closed(r, route);
    results.push_back({route_name(route), cf.render(), cf_eval(cf, ctx), std::nullopt});
  };
  auto add_series = [&] {
    PrecisionContext sctx = series_context_for(ctx);
    CertifiedValue v = psi_series(r, sctx, series_target_for(ctx));
    results.push_back({"series", "", v.value, v.error_bound});
  };
  auto add_hyp = [&] {
    results.push_back({"hyp", "", psi_hyp(r, ctx), std::nullopt});
  };

  if (method == "murty" || method == "all") add_closed(PsiRoute::murty);
  if (method == "gauss" || method == "all") add_closed(PsiRoute::gauss);
  if (method == "series" || method == "all") add_series();
  if (method == "hyp" || method == "all") add_hyp();

  std::string route = method == "gauss" ? "gauss" : "murty";
  if (format == "json") {
    print_results_json("psi", r.str(), results, digits, route);
  } else {
    print_results_text("psi(" + r.str() + ")", results, digits);
  }
  return kExitOk;
}

int cmd_clausen(const std::string& c_text, std::optional<long> p, std::optional<long> q,
                int digits, const std::string& method, const std::string& route_str,
                const std::string& format) {
  Rational c;
  if (!c_text.empty()) {
    c = parse_rational_arg(c_text);
  } else {
    if (*q == 0) throw argument_error("q must be nonzero");
    mpz_class g;
    mpz_class zp(*p), zq(*q);
    mpz_gcd(g.get_mpz_t(), zp.get_mpz_t(), zq.get_mpz_t());
    if (g > 1)
      std::cerr << "note: p/q = " << *p << "/" << *q << " reduced to "
                << Rational(*p, *q).str() << "\n";
    c = Rational(*p + *q, *q);
  }

  PrecisionContext ctx(digits);
  PsiRoute route = parse_route(route_str);

  if (c == Rational(1)) {
    HPReal v = basel_case(ctx);
    if (format == "json") {
      nlohmann::ordered_json root;
      root["tool"] = kToolName;
      root["version"] = kVersion;
      root["digits"] = digits;
      root["route"] = route_str;
      root["command"] = "clausen";
      root["argument"] = "1";
      root["note"] = "c = 1 is the Basel case: the sum equals pi^2/6";
      root["value"] = v.str(digits);
      std::cout << root.dump(2) << "\n";
    } else {
      std::cout << "3F2[1,1,1; 2,2; 1] (c = 1 Basel case): pi^2/6\n  value: "
                << v.str(digits) << "\n";
    }
    return kExitOk;
  }

  std::vector<MethodResult> results;
  if (method == "closed" || method == "all") {
    ClosedForm cf = closed_3f2(c, route);
    results.push_back({"closed [" + route_str + "]", cf.render(), cf_eval(cf, ctx),
                       std::nullopt});
  }
  if (method == "series" || method == "all") {
    PrecisionContext sctx = series_context_for(ctx);
    CertifiedValue v = series_3f2(c, sctx, series_target_for(ctx));
    results.push_back({"series", "", v.value, v.error_bound});
  }
  if (method == "telescoped" || method == "all") {
    results.push_back({"telescoped", "", telescoped_3f2(c, ctx), std::nullopt});
  }

  if (format == "json") {
    print_results_json("clausen", c.str(), results, digits, route_str);
  } else {
    print_results_text("3F2[1,1," + c.str() + "; 2," + (c + Rational(1)).str() + "; 1]",
                       results, digits);
  }
  return kExitOk;
}

int cmd_verify(bool all, const std::vector<std::string>& ids, int digits,
               const std::string& report, std::optional<double> threshold,
               const std::string& route_str) {
  PrecisionContext ctx(digits);
  VerifyOptions opts;
  opts.route = parse_route(route_str);
  if (threshold) opts.pass_threshold = *threshold;

  std::vector<VerifyReport> reports;
  if (all) {
    reports = verify_all(ctx, opts);
  } else {
    for (const std::string& id : ids) reports.push_back(verify_one(id, ctx, opts));
  }

  if (report == "json") {
    std::cout << verify_report_json(reports, digits, opts.route).dump(2) << "\n";
  } else if (report == "csv") {
    std::cout << verify_report_csv(reports);
  } else {
    std::cout << verify_report_text(reports);
  }
  return all_verdicts_expected(reports) ? kExitOk : kExitVerdictMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // CLI11 reads "-2" as an option name; fold negative rational positionals
  // into explicit --arg=/--c= so "psi -2" and "clausen -1/2" keep working.
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "psi" || args[i] == "clausen") {
      std::string opt = args[i] == "psi" ? "--arg=" : "--c=";
      for (std::size_t j = i + 1; j < args.size(); ++j)
        if (looks_negative_rational(args[j])) args[j] = opt + args[j];
      break;
    }
  }

  CLI::App app{
      "exact closed forms and certified arbitrary-precision numerics for psi(p/q) "
      "and 3F2[1,1,c; 2,c+1; 1]"};
  app.set_version_flag("--version", std::string(clausum::kToolName) + " " + clausum::kVersion);
  app.require_subcommand(1);
  const int dflt_digits = env_default_digits();

  // psi
  auto* psi = app.add_subcommand("psi", "evaluate the digamma function at a rational");
  std::string psi_arg;
  int psi_digits = dflt_digits;
  std::string psi_method = "murty";
  std::string psi_format = "text";
  psi->add_option("arg,--arg", psi_arg, "argument as p/q or integer")->required();
  psi->add_option("--digits", psi_digits, "significant digits (default 50, env CLAUSUM_DIGITS)")
      ->check(CLI::Range(10, 100000));
  psi->add_option("--method", psi_method, "murty|gauss|series|hyp|all")
      ->check(CLI::IsMember({"murty", "gauss", "series", "hyp", "all"}));
  psi->add_option("--format", psi_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // clausen
  auto* cls = app.add_subcommand("clausen", "evaluate 3F2[1,1,c; 2,c+1; 1]");
  std::string cls_c;
  long cls_p = 0, cls_q = 0;
  int cls_digits = dflt_digits;
  std::string cls_method = "closed";
  std::string cls_route = "murty";
  std::string cls_format = "text";
  auto* opt_c = cls->add_option("c,--c", cls_c, "parameter c as a rational");
  auto* opt_p = cls->add_option("--p", cls_p, "numerator p (with --q; c = (p+q)/q)");
  auto* opt_q = cls->add_option("--q", cls_q, "denominator q (with --p; c = (p+q)/q)");
  cls->add_option("--digits", cls_digits, "significant digits (default 50, env CLAUSUM_DIGITS)")
      ->check(CLI::Range(10, 100000));
  cls->add_option("--method", cls_method, "closed|series|telescoped|all")
      ->check(CLI::IsMember({"closed", "series", "telescoped", "all"}));
  cls->add_option("--route", cls_route, "closed-form assembly route: murty|gauss")
      ->check(CLI::IsMember({"murty", "gauss"}));
  cls->add_option("--format", cls_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  opt_p->needs(opt_q);
  opt_q->needs(opt_p);
  opt_c->excludes(opt_p);

  // verify
  auto* ver = app.add_subcommand("verify", "check database records against their RHS");
  bool ver_all = false;
  std::vector<std::string> ver_ids;
  int ver_digits = dflt_digits;
  std::string ver_report = "text";
  std::string ver_route = "murty";
  double ver_threshold = 0.0;
  auto* opt_all = ver->add_flag("--all", ver_all, "verify every record");
  auto* opt_ids = ver->add_option("--id", ver_ids, "record id (repeatable)");
  ver->add_option("--digits", ver_digits, "significant digits (default 50, env CLAUSUM_DIGITS)")
      ->check(CLI::Range(10, 100000));
  ver->add_option("--report", ver_report, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  auto* opt_thr = ver->add_option("--threshold", ver_threshold,
                                  "override the closed-vs-RHS pass threshold");
  ver->add_option("--route", ver_route, "closed-form assembly route: murty|gauss")
      ->check(CLI::IsMember({"murty", "gauss"}));
  opt_all->excludes(opt_ids);

  try {
    std::reverse(args.begin(), args.end());  // CLI11's vector parse pops from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (psi->parsed()) return cmd_psi(psi_arg, psi_digits, psi_method, psi_format);
    if (cls->parsed()) {
      if (cls_c.empty() && opt_p->count() == 0)
        throw clausum::argument_error("provide either c or --p with --q");
      if (!cls_c.empty() && opt_p->count() > 0)
        throw clausum::argument_error("provide c or --p/--q, not both");
      std::optional<long> p, q;
      if (opt_p->count() > 0) {
        p = cls_p;
        q = cls_q;
      }
      return cmd_clausen(cls_c, p, q, cls_digits, cls_method, cls_route, cls_format);
    }
    if (ver->parsed()) {
      if (!ver_all && ver_ids.empty())
        throw clausum::argument_error("provide --all or at least one --id");
      std::optional<double> thr;
      if (opt_thr->count() > 0) thr = ver_threshold;
      return cmd_verify(ver_all, ver_ids, ver_digits, ver_report, thr, ver_route);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

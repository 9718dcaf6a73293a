#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clausum/clausen.hpp"
#include "clausum/expr.hpp"
#include "clausum/theorems_data.hpp"

namespace clausum {

// Pedigree of a database record: a newly derived identity, a corrected form
// of a wrongly published one, or the wrong published form itself (kept as a
// negative control the verifier must refute).
enum class TheoremStatus { new_result, corrected, erroneous };

inline std::string to_string(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::new_result:
      return "new";
    case TheoremStatus::corrected:
      return "corrected";
    case TheoremStatus::erroneous:
      return "erroneous";
  }
  return "?";
}

struct TheoremRecord {
  std::string id;
  Rational c;
  TheoremStatus status;
  std::string rhs_text;  // source text, trimmed
  ExprPtr rhs;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace detail

// Parses a record table ("id | c | status | rhs" per line, '#' comments and
// blank lines ignored). Every field is validated; the rhs is parsed into an
// AST immediately so a malformed table cannot load.
inline std::vector<TheoremRecord> load_theorem_table(std::string_view text) {
  std::vector<TheoremRecord> out;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= t.size(); ++i) {
      if (i == t.size() || t[i] == '|') {
        fields.push_back(detail::trim(std::string_view(t).substr(start, i - start)));
        start = i + 1;
      }
    }
    if (fields.size() != 4)
      throw parse_error("record line " + std::to_string(lineno) + " needs 4 '|' fields", pos);

    TheoremRecord rec;
    rec.id = fields[0];
    if (rec.id.empty())
      throw parse_error("record line " + std::to_string(lineno) + " has an empty id", pos);
    for (const TheoremRecord& prev : out)
      if (prev.id == rec.id)
        throw parse_error("duplicate record id " + rec.id, pos);
    rec.c = make_rational(fields[1]);
    if (rec.c.is_integer() && rec.c.sign() <= 0)
      throw parse_error("record " + rec.id + " has pole parameter c", pos);
    if (fields[2] == "new")
      rec.status = TheoremStatus::new_result;
    else if (fields[2] == "corrected")
      rec.status = TheoremStatus::corrected;
    else if (fields[2] == "erroneous")
      rec.status = TheoremStatus::erroneous;
    else
      throw parse_error("record " + rec.id + " has unknown status '" + fields[2] + "'", pos);
    rec.rhs_text = fields[3];
    rec.rhs = ast_parse(rec.rhs_text);
    out.push_back(std::move(rec));
  }
  return out;
}

// The built-in database: 20 new identities, 3 corrections, 3 erroneous
// published forms. Loaded once from the embedded table.
inline const std::vector<TheoremRecord>& theorem_database() {
  static const std::vector<TheoremRecord> db = [] {
    std::vector<TheoremRecord> d = load_theorem_table(kTheoremTableText);
    if (d.size() != 26) throw error("embedded record table must hold 26 records");
    int wrong = 0, fixed = 0;
    for (const TheoremRecord& r : d) {
      if (r.status == TheoremStatus::erroneous) ++wrong;
      if (r.status == TheoremStatus::corrected) ++fixed;
    }
    if (wrong != 3 || fixed != 3)
      throw error("embedded record table must hold 3 erroneous and 3 corrected records");
    return d;
  }();
  return db;
}

inline const TheoremRecord& find_theorem(const std::string& id) {
  for (const TheoremRecord& r : theorem_database())
    if (r.id == id) return r;
  throw argument_error("unknown record id '" + id + "'");
}

enum class Verdict { pass, fail, expected_fail };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::expected_fail:
      return "expected-fail";
  }
  return "?";
}

struct VerifyOptions {
  // Closed-vs-RHS tolerance; default 10^-(digits-10).
  std::optional<double> pass_threshold;
  // Extra slack above the certified series epsilon; default 10^-(digits-10).
  std::optional<double> series_slack;
  // An erroneous record must miss by more than this to count as refuted.
  double fail_floor = 0.05;
  PsiRoute route = PsiRoute::murty;
};

struct VerifyReport {
  std::string id;
  Rational c;
  TheoremStatus status = TheoremStatus::new_result;
  int digits = 0;
  std::string closed_form;
  HPReal closed_value;
  HPReal series_value;
  HPReal series_eps;
  HPReal rhs_value;
  HPReal diff_closed;
  HPReal diff_series;
  Verdict verdict = Verdict::fail;
  std::string eval_error;  // nonempty when evaluation itself failed
};

namespace detail {

inline HPReal hp_from_double(double d, const PrecisionContext& ctx) {
  HPReal r(ctx);
  mpfr_set_d(r.raw(), d, MPFR_RNDN);
  return r;
}

// Certify the series route to max(10, digits-10) digits, widening the
// working precision when the caller's context is too narrow to host that
// target above its own guard band.
inline int series_target(const PrecisionContext& ctx) {
  return std::max(10, ctx.digits - 10);
}

inline PrecisionContext series_context(const PrecisionContext& ctx) {
  int t = series_target(ctx);
  return PrecisionContext(std::max(ctx.digits, t + ctx.guard_digits), ctx.guard_digits);
}

}  // namespace detail

// Checks one record: evaluates the exact closed form, the certified series,
// and the transcribed right-hand side, then applies the verdict rules.
// Evaluation errors propagate (with the record id attached) as exceptions.
inline VerifyReport verify_one(const TheoremRecord& rec, const PrecisionContext& ctx,
                               const VerifyOptions& opts = {}) {
  VerifyReport rep;
  rep.id = rec.id;
  rep.c = rec.c;
  rep.status = rec.status;
  rep.digits = ctx.digits;
  try {
    ClosedForm cf = closed_3f2(rec.c, opts.route);
    rep.closed_form = cf.render();
    rep.closed_value = cf_eval(cf, ctx);

    PrecisionContext sctx = detail::series_context(ctx);
    CertifiedValue sv = series_3f2(rec.c, sctx, detail::series_target(ctx));
    rep.series_value = sv.value;
    rep.series_eps = sv.error_bound;

    rep.rhs_value = ast_eval(rec.rhs, ctx);
    rep.diff_closed = (rep.closed_value - rep.rhs_value).abs();
    rep.diff_series = (rep.series_value - rep.rhs_value).abs();

    double dflt = std::pow(10.0, -(ctx.digits - 10));
    HPReal pass_thr = detail::hp_from_double(opts.pass_threshold.value_or(dflt), ctx);
    HPReal slack = detail::hp_from_double(opts.series_slack.value_or(dflt), ctx);
    HPReal floor = detail::hp_from_double(opts.fail_floor, ctx);

    bool closed_ok = rep.diff_closed < pass_thr;
    bool series_ok = rep.diff_series < rep.series_eps + slack;
    if (rec.status == TheoremStatus::erroneous && rep.diff_closed > floor) {
      rep.verdict = Verdict::expected_fail;
    } else {
      rep.verdict = closed_ok && series_ok ? Verdict::pass : Verdict::fail;
    }
  } catch (const std::exception& e) {
    throw error("record " + rec.id + ": " + e.what());
  }
  return rep;
}

inline VerifyReport verify_one(const std::string& id, const PrecisionContext& ctx,
                               const VerifyOptions& opts = {}) {
  return verify_one(find_theorem(id), ctx, opts);
}

// Checks every record, never aborting: a record whose evaluation throws gets
// a fail verdict with the message preserved. Reports keep database order.
inline std::vector<VerifyReport> verify_all(const PrecisionContext& ctx,
                                            const VerifyOptions& opts = {}) {
  std::vector<VerifyReport> out;
  for (const TheoremRecord& rec : theorem_database()) {
    try {
      out.push_back(verify_one(rec, ctx, opts));
    } catch (const std::exception& e) {
      VerifyReport rep;
      rep.id = rec.id;
      rep.c = rec.c;
      rep.status = rec.status;
      rep.digits = ctx.digits;
      rep.verdict = Verdict::fail;
      rep.eval_error = e.what();
      out.push_back(std::move(rep));
    }
  }
  return out;
}

// True iff every new/corrected record passed and every erroneous record was
// refuted; this is the bit the CLI exit code reflects.
inline bool all_verdicts_expected(const std::vector<VerifyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) {
    return r.status == TheoremStatus::erroneous ? r.verdict == Verdict::expected_fail
                                                : r.verdict == Verdict::pass;
  });
}

}  // namespace clausum
